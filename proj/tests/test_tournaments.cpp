#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "negdep/distribution_json.hpp"
#include "negdep/error.hpp"
#include "negdep/fixtures.hpp"
#include "negdep/model_json.hpp"
#include "negdep/tournaments.hpp"
#include "oracle.hpp"

using namespace negdep;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

WinMatrix random_win_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(0, 6);
  WinMatrix w = even_win_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) set_duel(w, i, j, r(num(rng), 6));
  }
  return w;
}

Rational total_mass(const FiniteJointDistribution& d) {
  Rational s;
  for (const auto& a : d.atoms()) s += a.p;
  return s;
}

}  // namespace

TEST(RoundRobin, Example21Marginal) {
  const auto d = round_robin_distribution(example_2_1_spec());
  const auto s3 = oracle::law(marginal(d, {2}));
  const oracle::Law want{{{r(0)}, r(1, 9)}, {{r(3)}, r(2, 9)}, {{r(5)}, r(2, 9)},
                         {{r(6)}, r(1, 9)}, {{r(8)}, r(2, 9)}, {{r(10)}, r(1, 9)}};
  EXPECT_EQ(s3, want);
  for (const auto& a : d.atoms()) EXPECT_EQ(a.x[0] + a.x[1] + a.x[2], r(11));
}

TEST(RoundRobin, PointMassPair) {
  RoundRobinSpec spec{2, {{0, 1, r(3), {{r(3, 2), r(1)}}}}};
  EXPECT_EQ(round_robin_distribution(spec), point_mass({r(3, 2), r(3, 2)}));
}

TEST(RoundRobin, FairCoinsThreePlayers) {
  const std::vector<std::pair<Rational, Rational>> coin{{r(0), r(1, 2)}, {r(1), r(1, 2)}};
  RoundRobinSpec spec{3, {{0, 1, r(1), coin}, {0, 2, r(1), coin}, {1, 2, r(1), coin}}};
  const auto d = round_robin_distribution(spec);
  // Direct enumeration of the 2^3 outcome triples.
  oracle::Law want;
  for (int bits = 0; bits < 8; ++bits) {
    const long x12 = bits & 1, x13 = bits >> 1 & 1, x23 = bits >> 2 & 1;
    want[{r(x12 + x13), r(1 - x12 + x23), r(2 - x13 - x23)}] += r(1, 8);
  }
  EXPECT_EQ(oracle::law(d), want);
  for (std::size_t i = 0; i < 3; ++i) {
    const oracle::Law binom{{{r(0)}, r(1, 4)}, {{r(1)}, r(1, 2)}, {{r(2)}, r(1, 4)}};
    EXPECT_EQ(oracle::law(marginal(d, {i})), binom);
  }
}

TEST(RoundRobin, ConstantSumOnRandomSpecs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 2;
    RoundRobinSpec spec{n, {}};
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational rij(static_cast<long>(1 + rng() % 3));
        spec.games.push_back({i, j, rij, {{r(0), r(1, 3)}, {rij, r(2, 3)}}});
        total += rij;
      }
    }
    const auto d = round_robin_distribution(spec);
    EXPECT_EQ(total_mass(d), r(1));
    for (const auto& a : d.atoms()) {
      EXPECT_EQ(std::accumulate(a.x.begin(), a.x.end(), Rational()), total);
    }
  }
}

TEST(RoundRobin, Errors) {
  RoundRobinSpec out_of_range{2, {{0, 1, r(1), {{r(2), r(1)}}}}};
  EXPECT_EQ(code_of([&] { round_robin_distribution(out_of_range); }), ErrorCode::kSupportOutOfRange);
  RoundRobinSpec missing{3, {{0, 1, r(1), {{r(0), r(1)}}}}};
  EXPECT_EQ(code_of([&] { round_robin_distribution(missing); }), ErrorCode::kInvalidModel);
}

TEST(Knockout, Table1) {
  const auto d = knockout_fixed_draw(example_3_3_spec());
  const long rows[8][4] = {{0, 1, 0, 2}, {0, 1, 2, 0}, {0, 2, 1, 0}, {0, 2, 0, 1},
                           {1, 0, 0, 2}, {1, 0, 2, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}};
  oracle::Law want;
  for (const auto& row : rows) want[{r(row[0]), r(row[1]), r(row[2]), r(row[3])}] = r(1, 8);
  EXPECT_EQ(oracle::law(d), want);
}

TEST(Knockout, Example32) {
  const auto d = knockout_fixed_draw(example_3_2_spec());
  const oracle::Law want{{{r(1), r(0), r(2), r(0)}, r(1, 4)},
                         {{r(0), r(2), r(1), r(0)}, r(1, 4)},
                         {{r(1), r(0), r(0), r(2)}, r(1, 4)},
                         {{r(0), r(2), r(0), r(1)}, r(1, 4)}};
  EXPECT_EQ(oracle::law(d), want);
}

TEST(Knockout, TwoPlayers) {
  for (const Draw& draw : {Draw{identity_bracket(2)}, Draw{RandomDraw{}}}) {
    EXPECT_EQ(knockout_distribution(KnockoutSpec::equal_strength(1, draw)),
              permutation_distribution({r(0), r(1)}));
  }
}

TEST(Knockout, FixedDrawMatchesEnumeration) {
  std::mt19937_64 rng(22);
  for (unsigned rounds : {2u, 3u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = std::size_t{1} << rounds;
      std::vector<std::size_t> bracket(n);
      std::iota(bracket.begin(), bracket.end(), 0);
      std::shuffle(bracket.begin(), bracket.end(), rng);
      KnockoutSpec spec{rounds, random_win_matrix(rng, n), FixedDraw{bracket}};
      EXPECT_EQ(oracle::law(knockout_fixed_draw(spec)), oracle::knockout_fixed(spec.win_prob, bracket));
    }
  }
}

TEST(Knockout, RandomDrawMatchesEnumeration) {
  std::mt19937_64 rng(23);
  for (unsigned rounds : {2u, 3u}) {
    for (int trial = 0; trial < 3; ++trial) {
      const std::size_t n = std::size_t{1} << rounds;
      KnockoutSpec spec{rounds, random_win_matrix(rng, n), RandomDraw{}};
      EXPECT_EQ(oracle::law(knockout_random_draw(spec)), oracle::knockout_random(spec.win_prob));
    }
  }
  EXPECT_EQ(oracle::law(knockout_random_draw(example_3_1_spec())),
            oracle::knockout_random(example_3_1_spec().win_prob));
}

TEST(Knockout, EqualStrengthRandomDrawIsPermutationLaw) {
  const auto d = knockout_random_draw(KnockoutSpec::equal_strength(2, RandomDraw{}));
  EXPECT_EQ(d, permutation_distribution({r(0), r(0), r(1), r(2)}));
}

// Relabelling players permutes the coordinates of the fixed-draw law.
TEST(Knockout, RelabellingCovariance) {
  std::mt19937_64 rng(24);
  const std::size_t n = 8;
  KnockoutSpec spec{3, random_win_matrix(rng, n), identity_bracket(n)};
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  // Player sigma[i] of the relabelled spec plays the role of player i.
  KnockoutSpec relabelled{3, even_win_matrix(n), FixedDraw{}};
  std::vector<std::size_t> bracket(n);
  for (std::size_t i = 0; i < n; ++i) {
    bracket[i] = sigma[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) relabelled.win_prob[sigma[i]][sigma[j]] = spec.win_prob[i][j];
    }
  }
  relabelled.draw = FixedDraw{bracket};
  const auto d = knockout_fixed_draw(spec);
  const auto e = knockout_fixed_draw(relabelled);
  EXPECT_EQ(permute_coordinates(e, sigma), d);
}

TEST(Knockout, RoundIndicatorsSumToScores) {
  const auto spec = KnockoutSpec::equal_strength(3, identity_bracket(8));
  const auto rounds = knockout_fixed_draw_rounds(spec);
  ASSERT_EQ(rounds.dim(), 24u);
  DistributionBuilder b(8);
  for (const auto& a : rounds.atoms()) {
    Point s(8, r(0));
    for (std::size_t k = 0; k < 24; ++k) s[k % 8] += a.x[k];
    b.add(s, a.p);
  }
  EXPECT_EQ(std::move(b).build(), knockout_fixed_draw(spec));
}

TEST(Knockout, Validation) {
  KnockoutSpec bad = KnockoutSpec::equal_strength(2, identity_bracket(4));
  bad.win_prob[0][1] = r(1, 3);
  EXPECT_EQ(code_of([&] { knockout_distribution(bad); }), ErrorCode::kInvalidModel);
  KnockoutSpec dup = KnockoutSpec::equal_strength(2, FixedDraw{{0, 0, 1, 2}});
  EXPECT_EQ(code_of([&] { knockout_distribution(dup); }), ErrorCode::kInvalidModel);
  EXPECT_EQ(code_of([] {
              knockout_distribution(KnockoutSpec::equal_strength(kMaxKnockoutRounds + 1, RandomDraw{}));
            }),
            ErrorCode::kInvalidModel);
}

TEST(ModelJson, RoundTrip) {
  const ModelSpec specs[] = {example_2_1_spec(), example_3_1_spec(), example_3_2_spec(),
                             example_3_3_spec()};
  for (const auto& spec : specs) {
    const auto again = model_from_json(parse_json_text(model_to_json(spec).dump(), "t"));
    EXPECT_EQ(build_distribution(again), build_distribution(spec));
    EXPECT_EQ(model_to_json(again), model_to_json(spec));
  }
}

TEST(ModelJson, Errors) {
  EXPECT_EQ(code_of([] { model_from_json(parse_json_text(R"({"model":"league"})", "t")); }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] {
              model_from_json(parse_json_text(
                  R"({"model":"knockout","ell":1,"win_prob":[["0","1/2"],["1/2","0"]],"draw":{"kind":"fixed","bracket":[1,3]}})",
                  "t"));
            }),
            ErrorCode::kParse);
}
