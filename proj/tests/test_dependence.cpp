#include <random>

#include <gtest/gtest.h>

#include "negdep/dependence.hpp"
#include "negdep/error.hpp"
#include "negdep/fixtures.hpp"
#include "negdep/tournaments.hpp"
#include "oracle.hpp"

using namespace negdep;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

CheckOptions with_variant(TailVariant v) {
  CheckOptions o;
  o.variant = v;
  return o;
}

CheckOptions with_max_j(std::size_t j) {
  CheckOptions o;
  o.max_j = j;
  return o;
}

void expect_witness_ok(const FiniteJointDistribution& d, const Verdict& v) {
  if (v.holds) {
    EXPECT_FALSE(v.witness) << property_name(v.property);
  } else {
    ASSERT_TRUE(v.witness) << property_name(v.property);
    EXPECT_TRUE(recheck(d, *v.witness)) << property_name(v.property);
  }
}

std::vector<FiniteJointDistribution> random_laws(std::uint64_t seed, int count, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteJointDistribution> out;
  for (int k = 0; k < count; ++k) out.push_back(oracle::random_mixed(rng, 2 + k % (max_dim - 1)));
  return out;
}

// Where a witness sits, ignoring the separating upper set, which depends on
// the decider that found it.
std::string location(const Verdict& v) {
  if (!v.witness) return "-";
  if (const auto* w = std::get_if<ConditionalWitness>(&*v.witness)) {
    return w->i.str() + w->j.str() + w->at_x.str() + "|" + w->at_x_star.str();
  }
  return std::to_string(v.witness->index());
}

}  // namespace

TEST(Properties, Names) {
  for (Property p : kAllProperties) EXPECT_EQ(parse_property(property_name(p)), p);
  EXPECT_EQ(parse_property("nrd_1"), Property::kNRD1);
  EXPECT_EQ(parse_property("Nltd"), Property::kNLTD);
  EXPECT_THROW(parse_property("nxd"), Error);
}

// Conditional properties against the oracle, which ranges over every
// disjoint I (not only the complement of J) and a threshold grid that
// includes off-support values.
TEST(Conditional, MatchesOracle) {
  int holds = 0;
  int fails = 0;
  for (const auto& d : random_laws(41, 200, 3)) {
    const std::size_t n = d.dim();
    struct Case {
      Property p;
      TailVariant var;
      oracle::Event e;
      std::size_t max_j;
    };
    const Case cases[] = {
        {Property::kNRD, TailVariant::kDefault, oracle::Event::kEq, n},
        {Property::kNLTD, TailVariant::kDefault, oracle::Event::kLe, n},
        {Property::kNRTD, TailVariant::kDefault, oracle::Event::kGt, n},
        {Property::kNLTD, TailVariant::kStrict, oracle::Event::kLt, n},
        {Property::kNRTD, TailVariant::kWeak, oracle::Event::kGe, n},
        {Property::kNRD1, TailVariant::kDefault, oracle::Event::kEq, 1},
        {Property::kNLTD1, TailVariant::kDefault, oracle::Event::kLe, 1},
        {Property::kNRTD1, TailVariant::kDefault, oracle::Event::kGt, 1},
    };
    for (const auto& c : cases) {
      const Verdict v = check_property(d, c.p, with_variant(c.var));
      ASSERT_EQ(v.holds, oracle::conditional_property(d, c.e, c.max_j))
          << property_name(c.p) << " " << tail_variant_name(c.var) << " on " << d.size() << " atoms";
      expect_witness_ok(d, v);
      (v.holds ? holds : fails)++;
    }
  }
  EXPECT_GT(holds, 20);
  EXPECT_GT(fails, 20);
}

TEST(Association, MatchesOracle) {
  for (const auto& d : random_laws(42, 200, 3)) {
    const Verdict v = check_na(d);
    ASSERT_EQ(v.holds, oracle::negatively_associated(d)) << law_str(d);
    expect_witness_ok(d, v);
  }
}

TEST(Orthant, MatchesOracle) {
  for (const auto& d : random_laws(43, 200, 4)) {
    const Verdict lo = check_nlod(d);
    const Verdict up = check_nuod(d);
    const Verdict both = check_nod(d);
    EXPECT_EQ(lo.holds, oracle::orthant_property(d, oracle::Event::kLe));
    EXPECT_EQ(up.holds, oracle::orthant_property(d, oracle::Event::kGt));
    EXPECT_EQ(both.holds, lo.holds && up.holds);
    expect_witness_ok(d, lo);
    expect_witness_ok(d, up);
    expect_witness_ok(d, both);
  }
}

TEST(Nsmd, SandwichedAndWitnessed) {
  std::mt19937_64 rng(44);
  for (const auto& d : random_laws(44, 100, 3)) {
    const Verdict v = check_nsmd(d);
    expect_witness_ok(d, v);
    if (check_na(d).holds) {
      EXPECT_TRUE(v.holds);
    }
    if (v.holds) {
      EXPECT_TRUE(check_nod(d).holds);
      const auto indep = independent_copy(d);
      for (int k = 0; k < 20; ++k) {
        const long a = rng() % 3, b = rng() % 3;
        auto psi = [&](std::span<const Rational> z) {
          Rational s = Rational(a) * z[0] * z[1] + Rational(b) * z[0] * z[0];
          for (std::size_t i = 2; i < z.size(); ++i) s += z[i] * z[0];
          return s;
        };
        EXPECT_LE(expectation(d, psi), expectation(indep, psi));
      }
    }
  }
}

// Negating every coordinate swaps lower and upper tails and keeps NA/NRD.
TEST(Metamorphic, Negation) {
  for (const auto& d : random_laws(45, 30, 3)) {
    const auto m = negate(d);
    EXPECT_EQ(check_nrd(d).holds, check_nrd(m).holds);
    EXPECT_EQ(check_na(d).holds, check_na(m).holds);
    EXPECT_EQ(check_nltd(m, with_variant(TailVariant::kStrict)).holds, check_nrtd(d).holds);
    EXPECT_EQ(check_nltd(m).holds, check_nrtd(d, with_variant(TailVariant::kWeak)).holds);
    EXPECT_EQ(check_nlod(m).holds, check_nuod(d).holds);
  }
}

TEST(Metamorphic, CoordinatePermutation) {
  for (const auto& d : random_laws(46, 20, 3)) {
    std::vector<std::size_t> perm(d.dim());
    for (std::size_t k = 0; k < d.dim(); ++k) perm[k] = (k + 1) % d.dim();
    const auto e = permute_coordinates(d, perm);
    for (Property p : kAllProperties) {
      EXPECT_EQ(check_property(d, p).holds, check_property(e, p).holds) << property_name(p);
    }
  }
}

TEST(Metamorphic, IndependentLawsAreBoundary) {
  // Product laws satisfy every property with equality, so nothing fails.
  std::mt19937_64 rng(47);
  for (int k = 0; k < 10; ++k) {
    const auto a = oracle::random_distribution(rng, 1, 3);
    const auto b = oracle::random_distribution(rng, 1, 3);
    const auto c = oracle::random_distribution(rng, 1, 3);
    const auto d = product(product(a, b), c);
    for (Property p : kAllProperties) EXPECT_TRUE(check_property(d, p).holds) << property_name(p);
  }
}

// Verify mode may report a different separating set for the same location.
TEST(Determinism, JobsAndVerifyMode) {
  std::vector<FiniteJointDistribution> laws{
      knockout_fixed_draw(example_3_3_spec()),
      round_robin_distribution(example_2_1_spec()),
      permutation_distribution({r(0), r(0), r(1), r(2)}),
      knockout_random_draw(example_3_1_spec()),
  };
  std::mt19937_64 rng(48);
  for (int k = 0; k < 4; ++k) laws.push_back(oracle::random_distribution(rng, 4, 8));
  for (const auto& d : laws) {
    for (Property p : kAllProperties) {
      CheckOptions one;
      CheckOptions many;
      many.jobs = 4;
      CheckOptions verify;
      verify.order_mode = OrderMode::kVerify;
      const Verdict a = check_property(d, p, one);
      EXPECT_EQ(a, check_property(d, p, many)) << property_name(p);
      const Verdict c = check_property(d, p, verify);
      EXPECT_EQ(a.holds, c.holds) << property_name(p);
      EXPECT_EQ(location(a), location(c)) << property_name(p);
      expect_witness_ok(d, a);
      expect_witness_ok(d, c);
    }
  }
}

TEST(Bounds, MaxJ) {
  const auto d = knockout_fixed_draw(example_3_3_spec());
  const Verdict full = check_nrd(d);
  const Verdict one = check_nrd(d, with_max_j(1));
  EXPECT_FALSE(full.holds);
  EXPECT_FALSE(one.holds);
  EXPECT_EQ(full.witness, one.witness);
  EXPECT_LT(check_nrtd(d, with_max_j(1)).stats.index_pairs, check_nrtd(d).stats.index_pairs);
  EXPECT_EQ(check_nrd1(d).witness, one.witness);
  // NA with the smaller block bounded by 1 only examines singleton splits.
  const Verdict na1 = check_na(d, with_max_j(1));
  EXPECT_TRUE(na1.holds);
  EXPECT_LT(na1.stats.index_pairs, check_na(d).stats.index_pairs);
}

TEST(Bounds, UpperSetCap) {
  const auto d = knockout_fixed_draw(KnockoutSpec::equal_strength(3, identity_bracket(8)));
  CheckOptions o;
  o.max_j = 2;
  o.caps.upper_sets = 10;
  try {
    check_na(d, o);
    FAIL() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEnumerationCapExceeded);
  }
}

TEST(Witness, Table1Details) {
  const auto d = knockout_fixed_draw(example_3_3_spec());
  const Verdict v = check_nrd(d);
  ASSERT_TRUE(v.witness);
  const auto& w = std::get<ConditionalWitness>(*v.witness);
  EXPECT_EQ(w.j, IndexSet{0});
  EXPECT_EQ(w.i, (IndexSet{1, 2, 3}));
  EXPECT_EQ(w.at_x.str(), "X1=0");
  EXPECT_EQ(w.at_x_star.str(), "X1=1");
  EXPECT_GT(w.p_at_x_star, w.p_at_x);
  // Tampering with the witness breaks the recheck.
  ConditionalWitness bad = w;
  std::swap(bad.at_x, bad.at_x_star);
  EXPECT_FALSE(recheck(d, Witness{bad}));
}

TEST(StochIncreasing, Families) {
  for (unsigned rounds : {2u, 3u}) {
    for (const auto& fam : knockout_increment_families(rounds)) {
      EXPECT_TRUE(check_stoch_increasing(fam).holds);
    }
  }
  std::map<Point, FiniteJointDistribution> dec{{{r(0)}, point_mass({r(1)})}, {{r(1)}, point_mass({r(0)})}};
  const auto v = check_stoch_increasing(dec);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.theta, Point{r(0)});
  ASSERT_TRUE(v.u);
  EXPECT_TRUE(verify_upper_set_violation(point_mass({r(1)}), point_mass({r(0)}), *v.u));
}
