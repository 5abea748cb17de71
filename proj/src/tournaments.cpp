#include "negdep/tournaments.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "negdep/error.hpp"

namespace negdep {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::kInvalidModel, msg); }

using Wins = std::vector<std::uint8_t>;

}  // namespace

void RoundRobinSpec::validate() const {
  if (players < 2) invalid("round robin needs at least two players");
  std::vector<std::vector<int>> seen(players, std::vector<int>(players, 0));
  for (const auto& g : games) {
    if (g.i >= players || g.j >= players || g.i == g.j) {
      invalid("pair (" + std::to_string(g.i + 1) + "," + std::to_string(g.j + 1) +
              ") is not a valid pairing");
    }
    const auto a = std::min(g.i, g.j);
    const auto b = std::max(g.i, g.j);
    if (seen[a][b]++) {
      invalid("pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") listed twice");
    }
    if (g.total.sign() <= 0) invalid("total score must be positive");
    if (g.law.empty()) invalid("empty score law");
    Rational mass;
    for (const auto& [x, p] : g.law) {
      if (x.sign() < 0 || x > g.total) {
        throw Error(ErrorCode::kSupportOutOfRange,
                    "score " + x.str() + " outside [0," + g.total.str() + "] for pair (" +
                        std::to_string(g.i + 1) + "," + std::to_string(g.j + 1) + ")");
      }
      if (p.sign() <= 0) {
        throw Error(ErrorCode::kNonpositiveProbability, "non-positive score probability");
      }
      mass += p;
    }
    if (mass != Rational(1)) {
      throw Error(ErrorCode::kMassNotOne, "score law mass is " + mass.str());
    }
  }
  for (std::size_t a = 0; a < players; ++a) {
    for (std::size_t b = a + 1; b < players; ++b) {
      if (!seen[a][b]) {
        invalid("pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") missing");
      }
    }
  }
}

void KnockoutSpec::validate() const {
  if (rounds < 1 || rounds > kMaxKnockoutRounds) {
    invalid("rounds must lie in [1," + std::to_string(kMaxKnockoutRounds) + "]");
  }
  const std::size_t n = players();
  if (win_prob.size() != n) invalid("win probability matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (win_prob[i].size() != n) invalid("win probability matrix must be n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& p = win_prob[i][j];
      if (p.sign() < 0 || p > Rational(1)) invalid("win probability outside [0,1]");
      if (p + win_prob[j][i] != Rational(1)) {
        invalid("p_" + std::to_string(i + 1) + std::to_string(j + 1) + " + p_" +
                std::to_string(j + 1) + std::to_string(i + 1) + " != 1");
      }
    }
  }
  if (const auto* fixed = std::get_if<FixedDraw>(&draw)) {
    if (fixed->bracket.size() != n) invalid("bracket must list every player once");
    std::vector<bool> used(n, false);
    for (std::size_t p : fixed->bracket) {
      if (p >= n || used[p]) invalid("bracket is not a permutation of the players");
      used[p] = true;
    }
  }
}

KnockoutSpec KnockoutSpec::equal_strength(unsigned rounds, Draw draw) {
  KnockoutSpec spec;
  spec.rounds = rounds;
  spec.win_prob = even_win_matrix(std::size_t{1} << rounds);
  spec.draw = std::move(draw);
  return spec;
}

FixedDraw identity_bracket(std::size_t players) {
  FixedDraw d;
  for (std::size_t i = 0; i < players; ++i) d.bracket.push_back(i);
  return d;
}

WinMatrix even_win_matrix(std::size_t players) {
  WinMatrix m(players, std::vector<Rational>(players, Rational(1, 2)));
  for (std::size_t i = 0; i < players; ++i) m[i][i] = Rational(0);
  return m;
}

void set_duel(WinMatrix& m, std::size_t i, std::size_t j, const Rational& p) {
  m.at(i).at(j) = p;
  m.at(j).at(i) = Rational(1) - p;
}

// ---------------------------------------------------------------------------

FiniteJointDistribution round_robin_distribution(const RoundRobinSpec& spec) {
  spec.validate();
  std::map<Point, Rational> current{{Point(spec.players, Rational(0)), Rational(1)}};
  for (const auto& g : spec.games) {
    std::map<Point, Rational> next;
    for (const auto& [s, p] : current) {
      for (const auto& [x, q] : g.law) {
        Point t = s;
        t[g.i] += x;
        t[g.j] += g.total - x;
        next[std::move(t)] += p * q;
      }
    }
    current = std::move(next);
  }
  DistributionBuilder builder(spec.players);
  for (auto& [s, p] : current) builder.add(s, p);
  return std::move(builder).build();
}

namespace {

struct BracketOutcome {
  std::size_t winner;
  Wins wins;  // round-major indicators, length n * rounds
  friend bool operator<(const BracketOutcome& a, const BracketOutcome& b) {
    return std::tie(a.winner, a.wins) < std::tie(b.winner, b.wins);
  }
};

using OutcomeLaw = std::map<BracketOutcome, Rational>;

// Law of (winner, round indicators) for the slot block [lo, lo + 2^round).
OutcomeLaw bracket_block(const KnockoutSpec& spec, const std::vector<std::size_t>& bracket,
                         std::size_t lo, unsigned round) {
  const std::size_t n = spec.players();
  if (round == 0) {
    return {{BracketOutcome{bracket[lo], Wins(n * spec.rounds, 0)}, Rational(1)}};
  }
  const std::size_t half = std::size_t{1} << (round - 1);
  const OutcomeLaw left = bracket_block(spec, bracket, lo, round - 1);
  const OutcomeLaw right = bracket_block(spec, bracket, lo + half, round - 1);
  OutcomeLaw out;
  for (const auto& [l, pl] : left) {
    for (const auto& [r, pr] : right) {
      for (int side = 0; side < 2; ++side) {
        const std::size_t winner = side == 0 ? l.winner : r.winner;
        const std::size_t loser = side == 0 ? r.winner : l.winner;
        const Rational& pw = spec.win_prob[winner][loser];
        if (pw.is_zero()) continue;
        Wins wins = l.wins;
        for (std::size_t k = 0; k < wins.size(); ++k) wins[k] |= r.wins[k];
        wins[(round - 1) * n + winner] = 1;
        out[BracketOutcome{winner, std::move(wins)}] += pl * pr * pw;
      }
    }
  }
  return out;
}

OutcomeLaw fixed_draw_outcomes(const KnockoutSpec& spec) {
  spec.validate();
  const auto* fixed = std::get_if<FixedDraw>(&spec.draw);
  if (!fixed) invalid("fixed-draw builder called with a random draw");
  return bracket_block(spec, fixed->bracket, 0, spec.rounds);
}

}  // namespace

FiniteJointDistribution knockout_fixed_draw_rounds(const KnockoutSpec& spec) {
  const OutcomeLaw outcomes = fixed_draw_outcomes(spec);
  DistributionBuilder builder(spec.players() * spec.rounds);
  for (const auto& [o, p] : outcomes) {
    Point x;
    for (auto w : o.wins) x.emplace_back(static_cast<long>(w));
    builder.add(std::move(x), p);
  }
  return std::move(builder).build();
}

FiniteJointDistribution knockout_fixed_draw(const KnockoutSpec& spec) {
  const OutcomeLaw outcomes = fixed_draw_outcomes(spec);
  const std::size_t n = spec.players();
  DistributionBuilder builder(n);
  for (const auto& [o, p] : outcomes) {
    std::vector<long> s(n, 0);
    for (std::size_t k = 0; k < o.wins.size(); ++k) s[k % n] += o.wins[k];
    builder.add(Point(s.begin(), s.end()), p);
  }
  return std::move(builder).build();
}

namespace {

using Mask = std::uint32_t;

class RandomDrawSolver {
 public:
  explicit RandomDrawSolver(const KnockoutSpec& spec) : spec_(spec), n_(spec.players()) {}

  // Law of the additional wins of the players in `alive`, who all enter the
  // same round.
  const std::map<Wins, Rational>& remaining(Mask alive) {
    if (auto it = remaining_.find(alive); it != remaining_.end()) return it->second;
    std::map<Wins, Rational> law;
    if (std::popcount(alive) == 1) {
      law.emplace(Wins(n_, 0), Rational(1));
    } else {
      for (const auto& [winners, pw] : round_winners(alive)) {
        for (const auto& [tail, pt] : remaining(winners)) {
          Wins w = tail;
          for (std::size_t i = 0; i < n_; ++i) {
            if (winners >> i & 1U) ++w[i];
          }
          law[std::move(w)] += pw * pt;
        }
      }
    }
    return remaining_.emplace(alive, std::move(law)).first->second;
  }

 private:
  // Law of the winner set when `pool` is paired by a uniform perfect matching:
  // the lowest member meets each other member with equal probability.
  const std::map<Mask, Rational>& round_winners(Mask pool) {
    if (auto it = winners_.find(pool); it != winners_.end()) return it->second;
    std::map<Mask, Rational> law;
    if (pool == 0) {
      law.emplace(0, Rational(1));
    } else {
      const unsigned first = static_cast<unsigned>(std::countr_zero(pool));
      const Mask rest = pool & ~(Mask{1} << first);
      const Rational pick(1, std::popcount(rest));
      for (unsigned other = 0; other < n_; ++other) {
        if (!(rest >> other & 1U)) continue;
        const Mask others = rest & ~(Mask{1} << other);
        const auto& sub = round_winners(others);
        for (const auto& [w, pw] : sub) {
          const Rational& p_first = spec_.win_prob[first][other];
          const Rational& p_other = spec_.win_prob[other][first];
          if (!p_first.is_zero()) law[w | Mask{1} << first] += pick * p_first * pw;
          if (!p_other.is_zero()) law[w | Mask{1} << other] += pick * p_other * pw;
        }
      }
    }
    return winners_.emplace(pool, std::move(law)).first->second;
  }

  const KnockoutSpec& spec_;
  std::size_t n_;
  std::unordered_map<Mask, std::map<Wins, Rational>> remaining_;
  std::unordered_map<Mask, std::map<Mask, Rational>> winners_;
};

}  // namespace

FiniteJointDistribution knockout_random_draw(const KnockoutSpec& spec) {
  spec.validate();
  const std::size_t n = spec.players();
  RandomDrawSolver solver(spec);
  const Mask everyone = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  DistributionBuilder builder(n);
  for (const auto& [w, p] : solver.remaining(everyone)) {
    Point x;
    for (auto v : w) x.emplace_back(static_cast<long>(v));
    builder.add(std::move(x), p);
  }
  return std::move(builder).build();
}

FiniteJointDistribution knockout_distribution(const KnockoutSpec& spec) {
  if (std::holds_alternative<FixedDraw>(spec.draw)) return knockout_fixed_draw(spec);
  return knockout_random_draw(spec);
}

FiniteJointDistribution build_distribution(const ModelSpec& spec) {
  return std::visit(
      [](const auto& s) -> FiniteJointDistribution {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, RoundRobinSpec>) {
          return round_robin_distribution(s);
        } else {
          return knockout_distribution(s);
        }
      },
      spec);
}

}  // namespace negdep
