#include "negdep/max_flow.hpp"

#include <algorithm>
#include <queue>

#include "negdep/error.hpp"

namespace negdep {

FlowNetwork::FlowNetwork(std::size_t nodes, std::size_t source, std::size_t sink)
    : nodes_(nodes), source_(source), sink_(sink) {
  if (source >= nodes || sink >= nodes || source == sink) {
    throw Error(ErrorCode::kInternal, "invalid source/sink");
  }
}

std::size_t FlowNetwork::add_edge(std::size_t from, std::size_t to, Rational capacity) {
  if (from >= nodes_ || to >= nodes_) throw Error(ErrorCode::kInternal, "edge endpoint out of range");
  if (capacity.sign() < 0) throw Error(ErrorCode::kInternal, "negative capacity");
  edges_.push_back(FlowEdge{from, to, std::move(capacity)});
  return edges_.size() - 1;
}

namespace {

struct Arc {
  std::size_t to;
  std::size_t reverse;  // index of the paired arc in adj[to]
  mpz_class residual;
};

class Dinic {
 public:
  Dinic(std::size_t nodes, std::size_t source, std::size_t sink)
      : adj_(nodes), level_(nodes), next_arc_(nodes), source_(source), sink_(sink) {}

  std::pair<std::size_t, std::size_t> add(std::size_t from, std::size_t to, mpz_class cap) {
    const std::size_t fwd = adj_[from].size();
    const std::size_t bwd = adj_[to].size() + (from == to ? 1 : 0);
    adj_[from].push_back(Arc{to, bwd, std::move(cap)});
    adj_[to].push_back(Arc{from, fwd, mpz_class(0)});
    return {from, fwd};
  }

  mpz_class run() {
    mpz_class total = 0;
    while (bfs()) {
      std::fill(next_arc_.begin(), next_arc_.end(), 0);
      while (true) {
        mpz_class pushed = push(source_, mpz_class(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<bool> reachable() const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<std::size_t> q;
    q.push(source_);
    seen[source_] = true;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (const auto& a : adj_[u]) {
        if (a.residual > 0 && !seen[a.to]) {
          seen[a.to] = true;
          q.push(a.to);
        }
      }
    }
    return seen;
  }

  const Arc& arc(std::size_t node, std::size_t k) const { return adj_[node][k]; }

 private:
  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source_] = 0;
    q.push(source_);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (const auto& a : adj_[u]) {
        if (a.residual > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  // limit < 0 stands for "unbounded".
  mpz_class push(std::size_t u, const mpz_class& limit) {
    if (u == sink_) return limit;
    for (auto& k = next_arc_[u]; k < adj_[u].size(); ++k) {
      Arc& a = adj_[u][k];
      if (a.residual <= 0 || level_[a.to] != level_[u] + 1) continue;
      const mpz_class& bound = (limit < 0 || a.residual < limit) ? a.residual : limit;
      mpz_class got = push(a.to, bound);
      if (got > 0) {
        a.residual -= got;
        adj_[a.to][a.reverse].residual += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
  std::size_t source_;
  std::size_t sink_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  mpz_class scale = 1;
  for (const auto& e : net.edges()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.capacity.denominator().get_mpz_t());
  }
  Dinic dinic(net.nodes(), net.source(), net.sink());
  std::vector<std::pair<std::size_t, std::size_t>> handles;
  handles.reserve(net.edges().size());
  for (const auto& e : net.edges()) {
    mpz_class cap = e.capacity.numerator() * (scale / e.capacity.denominator());
    handles.push_back(dinic.add(e.from, e.to, std::move(cap)));
  }
  MaxFlowResult result;
  const mpz_class total = dinic.run();
  const mpq_class inv_scale(mpz_class(1), scale);
  result.value = Rational(mpq_class(total) * inv_scale);
  result.edge_flow.reserve(handles.size());
  for (std::size_t k = 0; k < handles.size(); ++k) {
    const auto& a = dinic.arc(handles[k].first, handles[k].second);
    const auto& e = net.edges()[k];
    mpz_class cap = e.capacity.numerator() * (scale / e.capacity.denominator());
    result.edge_flow.emplace_back(mpq_class(mpq_class(cap - a.residual) * inv_scale));
  }
  result.source_side = dinic.reachable();
  return result;
}

}  // namespace negdep
