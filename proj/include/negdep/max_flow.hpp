#pragma once

#include <cstddef>
#include <vector>

#include "negdep/rational.hpp"

namespace negdep {

struct FlowEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational capacity;
};

/// Directed network with non-negative rational capacities.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink);

  /// Returns the edge id used to index MaxFlowResult::edge_flow.
  std::size_t add_edge(std::size_t from, std::size_t to, Rational capacity);

  std::size_t nodes() const { return nodes_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  const std::vector<FlowEdge>& edges() const { return edges_; }

 private:
  std::size_t nodes_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<FlowEdge> edges_;
};

struct MaxFlowResult {
  Rational value;
  std::vector<Rational> edge_flow;  // per edge id
  /// Nodes reachable from the source in the final residual network; the
  /// edges leaving this set form a minimum cut.
  std::vector<bool> source_side;
};

/// Exact maximum flow. Capacities are scaled by the lcm of their
/// denominators and the integral instance is solved with Dinic's algorithm.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace negdep
