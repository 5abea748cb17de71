#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "negdep/distribution.hpp"

namespace negdep {

/// One pairing of a constant-sum round robin: player i scores X_ij with the
/// given law, player j scores total - X_ij.
struct PairGame {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational total;
  std::vector<std::pair<Rational, Rational>> law;  // (score of i, probability)
};

struct RoundRobinSpec {
  std::size_t players = 0;
  std::vector<PairGame> games;  // exactly one entry per unordered pair

  void validate() const;
};

/// bracket[slot] = player. Slots 2k and 2k+1 meet in the first round and
/// winners of adjacent slot blocks meet afterwards.
struct FixedDraw {
  std::vector<std::size_t> bracket;
};
/// Survivors are re-paired by a uniformly random perfect matching each round.
struct RandomDraw {};
using Draw = std::variant<FixedDraw, RandomDraw>;

using WinMatrix = std::vector<std::vector<Rational>>;

struct KnockoutSpec {
  unsigned rounds = 1;
  WinMatrix win_prob;  // win_prob[i][j] = P(i beats j); diagonal unused
  Draw draw = RandomDraw{};

  std::size_t players() const { return std::size_t{1} << rounds; }
  void validate() const;

  static KnockoutSpec equal_strength(unsigned rounds, Draw draw);
};

using ModelSpec = std::variant<RoundRobinSpec, KnockoutSpec>;

inline constexpr unsigned kMaxKnockoutRounds = 4;

FixedDraw identity_bracket(std::size_t players);
/// n x n matrix with every off-diagonal entry 1/2.
WinMatrix even_win_matrix(std::size_t players);
/// Sets P(i beats j) = p and P(j beats i) = 1 - p.
void set_duel(WinMatrix& m, std::size_t i, std::size_t j, const Rational& p);

FiniteJointDistribution round_robin_distribution(const RoundRobinSpec& spec);

/// Law of S for a fixed bracket, S_i = number of games won by player i.
FiniteJointDistribution knockout_fixed_draw(const KnockoutSpec& spec);

/// Joint law of the round-win indicators of a fixed bracket. Coordinate
/// (k-1)*n + i is 1 iff player i wins its round-k game.
FiniteJointDistribution knockout_fixed_draw_rounds(const KnockoutSpec& spec);

/// Law of S when survivors are re-paired uniformly at random each round.
FiniteJointDistribution knockout_random_draw(const KnockoutSpec& spec);

FiniteJointDistribution knockout_distribution(const KnockoutSpec& spec);
FiniteJointDistribution build_distribution(const ModelSpec& spec);

}  // namespace negdep
