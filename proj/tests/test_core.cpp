#include <random>

#include <gtest/gtest.h>

#include "negdep/distribution.hpp"
#include "negdep/distribution_json.hpp"
#include "negdep/error.hpp"
#include "negdep/index_set.hpp"
#include "negdep/rational.hpp"
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

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(r(2, 4), r(1, 2));
  EXPECT_EQ(r(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational::parse(" 10/4 ").str(), "5/2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_EQ(Rational::parse("+3/9"), r(1, 3));
  EXPECT_TRUE(r(4, 2).is_integer());
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "0.5", "1e3", "1/-2", "x", "1//2", "/3"}) {
    EXPECT_EQ(code_of([&] { Rational::parse(bad); }), ErrorCode::kParse) << bad;
  }
}

TEST(Rational, RoundTripAndArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int k = 0; k < 500; ++k) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
    }
    EXPECT_EQ(a < b, b > a);
  }
}

TEST(Rational, Unbounded) {
  Rational x(1);
  for (int k = 0; k < 200; ++k) x *= r(3, 2);
  EXPECT_EQ(x * Rational::parse("1") / x, r(1));
  EXPECT_GT(x.str().size(), 30u);
}

TEST(ExtRational, OrderWithInfinities) {
  EXPECT_LT(ExtRational::neg_inf(), ExtRational(r(-1000)));
  EXPECT_LT(ExtRational(r(1000)), ExtRational::pos_inf());
  EXPECT_EQ(ExtRational::parse("-inf"), ExtRational::neg_inf());
  EXPECT_EQ(ExtRational::parse("+inf"), ExtRational::pos_inf());
  EXPECT_EQ(ExtRational::parse("3/6").value(), r(1, 2));
  EXPECT_TRUE((r(5) <=> ExtRational::pos_inf()) < 0);
}

TEST(IndexSet, Basics) {
  const IndexSet s{2, 0};
  EXPECT_EQ(s.str(), "{1,3}");
  EXPECT_EQ(s.complement(4), (IndexSet{1, 3}));
  EXPECT_TRUE(s.disjoint(IndexSet{1}));
  EXPECT_EQ(IndexSet::from_mask(0b101), s);
  EXPECT_EQ(code_of([&] { s.check_range(2); }), ErrorCode::kIndexOutOfRange);
}

TEST(IndexSet, SubsetsBySize) {
  const auto all = subsets_by_size(4, 4);
  EXPECT_EQ(all.size(), 15u);
  for (std::size_t k = 1; k < all.size(); ++k) {
    EXPECT_TRUE(all[k - 1].size() < all[k].size() ||
                (all[k - 1].size() == all[k].size() && all[k - 1] < all[k]));
  }
  EXPECT_EQ(subsets_by_size(4, 2).size(), 10u);
}

TEST(Distribution, Validation) {
  EXPECT_EQ(code_of([] { make_pmf(1, {{{r(0)}, r(1, 2)}}); }), ErrorCode::kMassNotOne);
  EXPECT_EQ(code_of([] { make_pmf(1, {{{r(0)}, r(3, 2)}, {{r(1)}, r(-1, 2)}}); }),
            ErrorCode::kNonpositiveProbability);
  EXPECT_EQ(code_of([] { make_pmf(2, {{{r(0)}, r(1)}}); }), ErrorCode::kDimMismatch);
  const auto d = make_pmf(1, {{{r(1)}, r(1, 4)}, {{r(0)}, r(1, 2)}, {{r(1)}, r(1, 4)}});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.atoms()[0].x, Point{r(0)});
  EXPECT_EQ(d.probability(Point{r(1)}), r(1, 2));
  EXPECT_EQ(d.probability(Point{r(7)}), r(0));
}

TEST(Distribution, ConditioningErrors) {
  const auto d = uniform_on(2, {{r(0), r(1)}, {r(1), r(0)}});
  EXPECT_EQ(code_of([&] { condition(d, ConditioningEvent::equal({0}, {r(5)}), {1}); }),
            ErrorCode::kZeroProbabilityEvent);
  EXPECT_FALSE(try_condition(d, ConditioningEvent::equal({0}, {r(5)}), {1}));
  EXPECT_EQ(code_of([&] { marginal(d, {}); }), ErrorCode::kEmptyIndexSet);
  EXPECT_EQ(code_of([&] { marginal(d, {3}); }), ErrorCode::kIndexOutOfRange);
  const auto c = condition(d, ConditioningEvent::lower({0}, {ExtRational(r(0))}), {1});
  EXPECT_EQ(c, point_mass({r(1)}));
}

TEST(Distribution, EventSemantics) {
  const auto lower = ConditioningEvent::lower({0, 1}, {ExtRational(r(1)), ExtRational::pos_inf()});
  EXPECT_TRUE(lower.contains(Point{r(1), r(100)}));
  EXPECT_FALSE(lower.contains(Point{r(2), r(0)}));
  const auto strict = ConditioningEvent::lower({0}, {ExtRational(r(1))}, true);
  EXPECT_FALSE(strict.contains(Point{r(1)}));
  const auto upper = ConditioningEvent::upper({0}, {ExtRational::neg_inf()});
  EXPECT_TRUE(upper.contains(Point{r(-50)}));
  const auto weak = ConditioningEvent::upper({0}, {ExtRational(r(1))}, false);
  EXPECT_TRUE(weak.contains(Point{r(1)}));
  EXPECT_EQ(lower.str(), "X1<=1, X2<=inf");
}

// Marginal and conditional laws against direct atom sums.
TEST(Distribution, MarginalsAndConditionalsMatchAtomSums) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = oracle::random_distribution(rng, 3, 8);
    const auto l = oracle::law(d);
    for (const auto& idx : oracle::subsets(3)) {
      const auto m = marginal(d, IndexSet(idx));
      EXPECT_EQ(oracle::law(m), oracle::conditional(l, [](const Point&) { return true; }, idx));
    }
    const auto ev = ConditioningEvent::lower({0}, {ExtRational(r(1))});
    const auto want = oracle::conditional(l, [](const Point& x) { return x[0] <= Rational(1); }, {1, 2});
    const auto got = try_condition(d, ev, {1, 2});
    if (want.empty()) {
      EXPECT_FALSE(got);
    } else {
      ASSERT_TRUE(got);
      EXPECT_EQ(oracle::law(*got), want);
    }
  }
}

TEST(Distribution, IndependentCopyAndNegate) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = oracle::random_distribution(rng, 3, 6);
    EXPECT_EQ(oracle::law(independent_copy(d)), oracle::independent(d));
    EXPECT_EQ(negate(negate(d)), d);
    EXPECT_EQ(permute_coordinates(permute_coordinates(d, {1, 2, 0}), {2, 0, 1}), d);
  }
}

TEST(Distribution, PermutationDistribution) {
  for (const auto& v : {std::vector<Rational>{1, 2, 3}, std::vector<Rational>{0, 0, 1, 2},
                        std::vector<Rational>{2, 2, 2}, std::vector<Rational>{0, 1, 1, 2, 5}}) {
    const auto d = permutation_distribution(v);
    EXPECT_EQ(oracle::law(d), oracle::permutation_law(v));
    // Exchangeable: any coordinate permutation leaves the law unchanged.
    std::vector<std::size_t> rev(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) rev[k] = v.size() - 1 - k;
    EXPECT_EQ(permute_coordinates(d, rev), d);
  }
  EXPECT_EQ(permutation_distribution({r(1), r(2), r(3)}).size(), 6u);
  EXPECT_EQ(permutation_distribution({r(0), r(0), r(1), r(2)}).size(), 12u);
}

TEST(Distribution, Expectation) {
  const auto d = uniform_on(2, {{r(0), r(1)}, {r(2), r(3)}});
  EXPECT_EQ(expectation(d, [](std::span<const Rational> x) { return x[0] + x[1]; }), r(3));
  std::map<Point, Rational> table{{{r(0), r(1)}, r(4)}};
  EXPECT_EQ(code_of([&] { expectation(d, table); }), ErrorCode::kUndefinedAtAtom);
  table[{r(2), r(3)}] = r(0);
  EXPECT_EQ(expectation(d, table), r(2));
}

TEST(DistributionJson, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = oracle::random_distribution(rng, 3, 6, 5);
    const auto text = distribution_to_json(d).dump();
    EXPECT_EQ(distribution_from_json(parse_json_text(text, "t")), d);
  }
}

TEST(DistributionJson, Normalizes) {
  const auto d = distribution_from_json(parse_json_text(
      R"({"dim":1,"atoms":[{"x":["2/4"],"p":"2/4"},{"x":[0],"p":"1/2"}]})", "t"));
  EXPECT_EQ(d.atoms()[0].x, Point{r(0)});
  EXPECT_EQ(distribution_to_json(d).dump(),
            R"({"atoms":[{"p":"1/2","x":["0"]},{"p":"1/2","x":["1/2"]}],"dim":1})");
}

TEST(DistributionJson, Errors) {
  EXPECT_EQ(code_of([] { parse_json_text("{", "t"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] {
              distribution_from_json(parse_json_text(R"({"dim":1,"atoms":[{"x":[0.5],"p":"1"}]})", "t"));
            }),
            ErrorCode::kParse);
  EXPECT_EQ(code_of([] {
              distribution_from_json(parse_json_text(R"({"dim":1,"atoms":[{"x":["0"],"p":"1/3"}]})", "t"));
            }),
            ErrorCode::kMassNotOne);
}
