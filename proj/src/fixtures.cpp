#include "negdep/fixtures.hpp"

#include <algorithm>

#include "negdep/conjecture.hpp"
#include "negdep/error.hpp"
#include "negdep/report.hpp"
#include "negdep/stochastic_order.hpp"

namespace negdep {

namespace {

constexpr std::string_view kIds[] = {"ex-2.1",  "ex-3.1",  "ex-3.2",    "ex-3.3",    "thm-3.1",
                                     "thm-3.2", "thm-3.3", "lemma-3.1", "conjecture"};

Rational r(long n, long d = 1) { return Rational(n, d); }

class Recorder {
 public:
  Recorder(FixtureResult& out, const CheckOptions& options) : out_(out), options_(options) {}

  void value(std::string name, const Rational& expected, const Rational& actual) {
    out_.checks.push_back({std::move(name), expected.str(), actual.str()});
  }
  void fact(std::string name, bool actual) {
    out_.checks.push_back({std::move(name), "true", actual ? "true" : "false"});
  }
  void text(std::string name, std::string expected, std::string actual) {
    out_.checks.push_back({std::move(name), std::move(expected), std::move(actual)});
  }

  const Verdict& verdict(const std::string& label, const FiniteJointDistribution& d, Property p,
                         bool expected, std::optional<std::size_t> max_j = std::nullopt) {
    CheckOptions o = options_;
    if (max_j) o.max_j = max_j;
    Verdict v = check_property(d, p, o);
    const std::string name = label + " " + std::string(property_name(p));
    text(name, expected ? "holds" : "fails", v.holds ? "holds" : "fails");
    if (v.witness) fact(name + " witness rechecks", recheck(d, *v.witness));
    out_.verdicts.push_back(std::move(v));
    return out_.verdicts.back();
  }

  const CheckOptions& options() const { return options_; }

 private:
  FixtureResult& out_;
  const CheckOptions& options_;
};

Rational first_coordinate(std::span<const Rational> x) { return x[0]; }

// E[g(X_keep) | ev].
Rational cond_mean(const FiniteJointDistribution& d, const ConditioningEvent& ev,
                   const IndexSet& keep, const FunctionOnSupport& g) {
  return expectation(condition(d, ev, keep), g);
}

ConditioningEvent eq(std::size_t i, const Rational& v) { return ConditioningEvent::equal({i}, {v}); }
ConditioningEvent le(std::size_t i, const Rational& v) {
  return ConditioningEvent::lower({i}, {ExtRational(v)}, false);
}
ConditioningEvent ge(std::size_t i, const Rational& v) {
  return ConditioningEvent::upper({i}, {ExtRational(v)}, false);
}
ConditioningEvent ge2(std::size_t i, const Rational& a, std::size_t j, const Rational& b) {
  return ConditioningEvent::upper({i, j}, {ExtRational(a), ExtRational(b)}, false);
}

Rational cond_prob(const FiniteJointDistribution& d, const ConditioningEvent& given,
                   const ConditioningEvent& target) {
  Rational both;
  Rational base;
  for (const auto& a : d.atoms()) {
    if (!given.contains(a.x)) continue;
    base += a.p;
    if (target.contains(a.x)) both += a.p;
  }
  return both / base;
}

FiniteJointDistribution law_of(std::size_t dim, std::initializer_list<std::pair<Point, Rational>> rows) {
  std::vector<Atom> atoms;
  for (const auto& [x, p] : rows) atoms.push_back({x, p});
  return make_pmf(dim, atoms);
}

void witness_events(Recorder& rec, const Verdict& v, const std::string& label, const std::string& j,
                    const std::string& at_x, const std::string& at_x_star) {
  const auto* w = v.witness ? std::get_if<ConditionalWitness>(&*v.witness) : nullptr;
  rec.text(label + " witness J", j, w ? w->j.str() : "-");
  rec.text(label + " witness x", at_x, w ? w->at_x.str() : "-");
  rec.text(label + " witness x*", at_x_star, w ? w->at_x_star.str() : "-");
}

// ------------------------------------------------------------------ ex-2.1

void run_ex_2_1(Recorder& rec) {
  const auto d = round_robin_distribution(example_2_1_spec());
  rec.value("atoms", r(18), r(static_cast<long>(d.size())));
  const auto s3 = marginal(d, {2});
  const std::pair<long, Rational> pmf[] = {{0, r(1, 9)}, {3, r(2, 9)}, {5, r(2, 9)},
                                           {6, r(1, 9)}, {8, r(2, 9)}, {10, r(1, 9)}};
  for (const auto& [v, p] : pmf) {
    rec.value("P(S3=" + std::to_string(v) + ")", p, s3.probability(Point{r(v)}));
  }
  const FunctionOnSupport f = [](std::span<const Rational> x) { return example_2_1_f(x[0], x[1]); };
  const IndexSet s12{0, 1};
  const std::pair<long, long> cond[] = {{0, 2}, {3, 2}, {5, 1}, {6, 2}, {8, 1}, {10, 1}};
  for (const auto& [v, e] : cond) {
    rec.value("E[f(S1,S2)|S3=" + std::to_string(v) + "]", r(e), cond_mean(d, eq(2, v), s12, f));
  }
  const Rational le5 = cond_mean(d, le(2, 5), s12, f);
  const Rational le6 = cond_mean(d, le(2, 6), s12, f);
  const Rational ge5 = cond_mean(d, ge(2, 5), s12, f);
  const Rational ge6 = cond_mean(d, ge(2, 6), s12, f);
  rec.value("E[f(S1,S2)|S3<=5]", r(8, 5), le5);
  rec.value("E[f(S1,S2)|S3<=6]", r(5, 3), le6);
  rec.value("E[f(S1,S2)|S3>=5]", r(7, 6), ge5);
  rec.value("E[f(S1,S2)|S3>=6]", r(5, 4), ge6);
  rec.fact("E[f|S3=5] < E[f|S3=6]",
           cond_mean(d, eq(2, 5), s12, f) < cond_mean(d, eq(2, 6), s12, f));
  rec.fact("E[f|S3<=5] < E[f|S3<=6]", le5 < le6);
  rec.fact("E[f|S3>=5] < E[f|S3>=6]", ge5 < ge6);
  rec.verdict("S", d, Property::kNA, true);
  rec.verdict("S", d, Property::kNRD, false);
  rec.verdict("S", d, Property::kNLTD, false);
  rec.verdict("S", d, Property::kNRTD, false);
}

// ------------------------------------------------------- ex-3.1 and ex-3.2

void run_small_counterexample(Recorder& rec, const FiniteJointDistribution& d,
                              const FiniteJointDistribution& expected_law,
                              const Rational (&means)[6], bool na_expected) {
  rec.text("law", law_str(expected_law), law_str(d));
  const FunctionOnSupport s = first_coordinate;
  const IndexSet s3{2};
  const Rational m_eq0 = cond_mean(d, eq(0, 0), s3, s);
  const Rational m_eq1 = cond_mean(d, eq(0, 1), s3, s);
  const Rational m_le0 = cond_mean(d, le(0, 0), s3, s);
  const Rational m_le1 = cond_mean(d, le(0, 1), s3, s);
  const Rational m_ge0 = cond_mean(d, ge(0, 0), s3, s);
  const Rational m_ge1 = cond_mean(d, ge(0, 1), s3, s);
  rec.value("E[S3|S1=0]", means[0], m_eq0);
  rec.value("E[S3|S1=1]", means[1], m_eq1);
  rec.value("E[S3|S1<=0]", means[2], m_le0);
  rec.value("E[S3|S1<=1]", means[3], m_le1);
  rec.value("E[S3|S1>=0]", means[4], m_ge0);
  rec.value("E[S3|S1>=1]", means[5], m_ge1);
  rec.fact("E[S3|S1=0] < E[S3|S1=1]", m_eq0 < m_eq1);
  rec.fact("E[S3|S1<=0] < E[S3|S1<=1]", m_le0 < m_le1);
  rec.fact("E[S3|S1>=0] < E[S3|S1>=1]", m_ge0 < m_ge1);
  rec.verdict("S", d, Property::kNA, na_expected);
  for (Property p : {Property::kNRD, Property::kNLTD, Property::kNRTD, Property::kNRD1,
                     Property::kNLTD1, Property::kNRTD1}) {
    rec.verdict("S", d, p, false);
  }
}

void run_ex_3_1(Recorder& rec) {
  const auto d = knockout_random_draw(example_3_1_spec());
  const auto expected = law_of(4, {{{r(1), r(0), r(2), r(0)}, r(1, 3)},
                                   {{r(0), r(2), r(1), r(0)}, r(1, 3)},
                                   {{r(0), r(2), r(0), r(1)}, r(1, 3)}});
  rec.value("P(S3=2|S1=1)", r(1), cond_prob(d, eq(0, 1), eq(2, 2)));
  rec.value("P(S3=0|S1=0)", r(1, 2), cond_prob(d, eq(0, 0), eq(2, 0)));
  rec.value("P(S3=1|S1=0)", r(1, 2), cond_prob(d, eq(0, 0), eq(2, 1)));
  rec.value("E[S3]", r(1), expectation(d, [](std::span<const Rational> x) { return x[2]; }));
  const Rational means[6] = {r(1, 2), r(2), r(1, 2), r(1), r(1), r(2)};
  run_small_counterexample(rec, d, expected, means, false);
}

void run_ex_3_2(Recorder& rec) {
  const auto d = knockout_fixed_draw(example_3_2_spec());
  const auto expected = law_of(4, {{{r(1), r(0), r(2), r(0)}, r(1, 4)},
                                   {{r(0), r(2), r(1), r(0)}, r(1, 4)},
                                   {{r(1), r(0), r(0), r(2)}, r(1, 4)},
                                   {{r(0), r(2), r(0), r(1)}, r(1, 4)}});
  rec.value("P(S3=0|S1=1)", r(1, 2), cond_prob(d, eq(0, 1), eq(2, 0)));
  rec.value("P(S3=2|S1=1)", r(1, 2), cond_prob(d, eq(0, 1), eq(2, 2)));
  rec.value("P(S3=0|S1=0)", r(1, 2), cond_prob(d, eq(0, 0), eq(2, 0)));
  rec.value("P(S3=1|S1=0)", r(1, 2), cond_prob(d, eq(0, 0), eq(2, 1)));
  const Rational means[6] = {r(1, 2), r(1), r(1, 2), r(3, 4), r(3, 4), r(1)};
  run_small_counterexample(rec, d, expected, means, false);
}

// ------------------------------------------------------------------ ex-3.3

FiniteJointDistribution table_1() {
  const long rows[8][4] = {{0, 1, 0, 2}, {0, 1, 2, 0}, {0, 2, 1, 0}, {0, 2, 0, 1},
                           {1, 0, 0, 2}, {1, 0, 2, 0}, {2, 0, 1, 0}, {2, 0, 0, 1}};
  std::vector<Atom> atoms;
  for (const auto& row : rows) atoms.push_back({{r(row[0]), r(row[1]), r(row[2]), r(row[3])}, r(1, 8)});
  return make_pmf(4, atoms);
}

void run_ex_3_3(Recorder& rec) {
  const auto d = knockout_fixed_draw(example_3_3_spec());
  rec.text("law", law_str(table_1()), law_str(d));
  const auto s3 = marginal(d, {2});
  rec.value("P(S3=0)", r(1, 2), s3.probability(Point{r(0)}));
  rec.value("P(S3=1)", r(1, 4), s3.probability(Point{r(1)}));
  rec.value("P(S3=2)", r(1, 4), s3.probability(Point{r(2)}));
  const Rational cond[3][3] = {{r(1, 2), r(1, 4), r(1, 4)}, {r(1, 2), r(0), r(1, 2)},
                               {r(1, 2), r(1, 2), r(0)}};
  for (long x = 0; x <= 2; ++x) {
    for (long y = 0; y <= 2; ++y) {
      rec.value("P(S3=" + std::to_string(y) + "|S1=" + std::to_string(x) + ")", cond[x][y],
                cond_prob(d, eq(0, x), eq(2, y)));
    }
  }
  const FunctionOnSupport s = first_coordinate;
  const Rational m_eq0 = cond_mean(d, eq(0, 0), {2}, s);
  const Rational m_eq1 = cond_mean(d, eq(0, 1), {2}, s);
  const Rational m_le0 = cond_mean(d, le(0, 0), {2}, s);
  const Rational m_le1 = cond_mean(d, le(0, 1), {2}, s);
  rec.value("E[S3|S1=0]", r(3, 4), m_eq0);
  rec.value("E[S3|S1=1]", r(1), m_eq1);
  rec.value("E[S3|S1<=0]", r(3, 4), m_le0);
  rec.value("E[S3|S1<=1]", r(5, 6), m_le1);

  rec.verdict("S", d, Property::kNA, true);
  rec.verdict("S", d, Property::kNSMD, true);
  rec.verdict("S", d, Property::kNRTD, true);
  rec.verdict("S", d, Property::kNOD, true);
  const Verdict& nrd = rec.verdict("S", d, Property::kNRD, false);
  witness_events(rec, nrd, "NRD", "{1}", "X1=0", "X1=1");
  const Verdict& nltd = rec.verdict("S", d, Property::kNLTD, false);
  witness_events(rec, nltd, "NLTD", "{1}", "X1<=0", "X1<=1");

  // The displayed >=_st chains, each link decided by both oracles.
  struct Link {
    std::string label;
    IndexSet keep;
    ConditioningEvent larger;
    ConditioningEvent smaller;
  };
  const Link links[] = {
      {"(S2,S3,S4): S1>=0 vs S1>=1", {1, 2, 3}, ge(0, 0), ge(0, 1)},
      {"(S2,S3,S4): S1>=1 vs S1>=2", {1, 2, 3}, ge(0, 1), ge(0, 2)},
      {"(S3,S4): S1>=0,S2>=0 vs S1>=1,S2>=0", {2, 3}, ge2(0, 0, 1, 0), ge2(0, 1, 1, 0)},
      {"(S2,S4): S1>=0,S3>=0 vs S1>=1,S3>=0", {1, 3}, ge2(0, 0, 2, 0), ge2(0, 1, 2, 0)},
      {"(S2,S4): S1>=1,S3>=0 vs S1>=1,S3>=1", {1, 3}, ge2(0, 1, 2, 0), ge2(0, 1, 2, 1)},
      {"(S2,S4): S1>=1,S3>=0 vs S1>=2,S3>=0", {1, 3}, ge2(0, 1, 2, 0), ge2(0, 2, 2, 0)},
      {"(S2,S4): S1>=2,S3>=0 vs S1>=2,S3>=1", {1, 3}, ge2(0, 2, 2, 0), ge2(0, 2, 2, 1)},
  };
  for (const auto& link : links) {
    const auto big = condition(d, link.larger, link.keep);
    const auto small = condition(d, link.smaller, link.keep);
    const auto by_sets = st_leq_uppersets(small, big, rec.options().caps.upper_sets);
    const auto by_flow = st_leq_coupling(small, big);
    rec.fact(link.label + " (upper sets)", by_sets.holds);
    rec.fact(link.label + " (coupling)",
             by_flow.holds && by_flow.coupling && verify_coupling(small, big, *by_flow.coupling));
  }

  // Strictness variants agree with the default on this law.
  for (TailVariant var : {TailVariant::kStrict, TailVariant::kWeak}) {
    CheckOptions o = rec.options();
    o.variant = var;
    for (Property p : {Property::kNLTD, Property::kNRTD}) {
      rec.text(std::string(property_name(p)) + " variant " + std::string(tail_variant_name(var)),
               p == Property::kNRTD ? "holds" : "fails",
               check_property(d, p, o).holds ? "holds" : "fails");
    }
  }
}

// ----------------------------------------------------------------- theorems

std::vector<Rational> knockout_multiset(unsigned rounds) {
  std::vector<Rational> v;
  for (unsigned k = 0; k < rounds; ++k) {
    for (std::size_t c = 0; c < (std::size_t{1} << (rounds - k - 1)); ++c) v.emplace_back(k);
  }
  v.emplace_back(rounds);
  return v;
}

void run_thm_3_1(Recorder& rec) {
  const auto d2 = knockout_random_draw(KnockoutSpec::equal_strength(2, RandomDraw{}));
  const auto perm2 = permutation_distribution(knockout_multiset(2));
  rec.text("l=2 law", law_str(perm2), law_str(d2));
  for (Property p : {Property::kNRD, Property::kNLTD, Property::kNRTD}) {
    rec.verdict("l=2", d2, p, true);
  }
  const auto d3 = knockout_random_draw(KnockoutSpec::equal_strength(3, RandomDraw{}));
  rec.value("l=3 atoms", r(840), r(static_cast<long>(d3.size())));
  bool shape = true;
  auto sorted_multiset = knockout_multiset(3);
  std::sort(sorted_multiset.begin(), sorted_multiset.end());
  for (const auto& a : d3.atoms()) {
    Point x = a.x;
    std::sort(x.begin(), x.end());
    shape = shape && x == sorted_multiset && a.p == r(1, 840);
  }
  rec.fact("l=3 atoms are arrangements of (0,0,0,0,1,1,2,3) with mass 1/840", shape);
  for (Property p : {Property::kNRD1, Property::kNLTD1, Property::kNRTD1}) {
    rec.verdict("l=3", d3, p, true);
  }
}

void run_stoch_increasing(Recorder& rec, unsigned rounds) {
  const auto families = knockout_increment_families(rounds);
  bool all = true;
  for (const auto& fam : families) {
    all = all && check_stoch_increasing(fam, rec.options().order_mode, rec.options().caps).holds;
  }
  rec.fact("l=" + std::to_string(rounds) + " increments stochastically increasing", all);
}

void run_thm_3_2(Recorder& rec) {
  const auto d4 = knockout_fixed_draw(example_3_3_spec());
  rec.verdict("l=2", d4, Property::kNA, true);
  rec.verdict("l=2", d4, Property::kNSMD, true);
  const auto d8 = knockout_fixed_draw(KnockoutSpec::equal_strength(3, identity_bracket(8)));
  rec.verdict("l=3 maxJ=2", d8, Property::kNA, true, 2);
  run_stoch_increasing(rec, 2);
  run_stoch_increasing(rec, 3);
}

void run_thm_3_3(Recorder& rec) {
  const auto d4 = knockout_fixed_draw(example_3_3_spec());
  rec.verdict("l=2", d4, Property::kNRTD, true);
  const auto d8 = knockout_fixed_draw(KnockoutSpec::equal_strength(3, identity_bracket(8)));
  rec.verdict("l=3 maxJ=2", d8, Property::kNRTD, true, 2);
}

void run_lemma_3_1(Recorder& rec) {
  long vectors = 0;
  long failures = 0;
  std::string first_failure = "-";
  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Rational> values;
      for (std::size_t k = 0, c = code; k < n; ++k, c /= 3) values.emplace_back(static_cast<long>(c % 3));
      const auto d = permutation_distribution(values);
      ++vectors;
      for (Property p : {Property::kNRD, Property::kNLTD, Property::kNRTD}) {
        if (!check_property(d, p, rec.options()).holds) {
          if (failures++ == 0) first_failure = point_str(values) + " " + std::string(property_name(p));
        }
      }
    }
  }
  rec.value("value vectors checked", r(9 + 27 + 81), r(vectors));
  rec.value("failures", r(0), r(failures));
  rec.text("first failure", "-", first_failure);
  for (const auto& values :
       {std::vector<Rational>{1, 2, 3, 4, 5}, std::vector<Rational>{0, 0, 1, 1, 2}}) {
    const auto d = permutation_distribution(values);
    for (Property p : {Property::kNRD, Property::kNLTD, Property::kNRTD}) {
      rec.verdict("perm" + point_str(values), d, p, true);
    }
  }
}

void run_conjecture(Recorder& rec) {
  for (const auto& values : {std::vector<Rational>{1, 2, 3}, std::vector<Rational>{1, 2, 3, 4},
                             std::vector<Rational>{0, 0, 1, 2}}) {
    const auto res = test_conjecture(values, rec.options());
    rec.text("conjecture on " + point_str(values), "HOLDS-ON-INSTANCE",
             res.holds_on_instance ? "HOLDS-ON-INSTANCE" : "COUNTEREXAMPLE");
  }
}

}  // namespace

RoundRobinSpec example_2_1_spec() {
  const std::vector<std::pair<Rational, Rational>> u = {{0, r(1, 3)}, {2, r(1, 3)}, {5, r(1, 3)}};
  RoundRobinSpec spec;
  spec.players = 3;
  spec.games.push_back({0, 1, r(1), {{0, r(1, 2)}, {1, r(1, 2)}}});
  spec.games.push_back({0, 2, r(5), u});
  spec.games.push_back({1, 2, r(5), u});
  return spec;
}

Rational example_2_1_f(const Rational& a, const Rational& b) {
  return std::min(a, b) >= Rational(2) ? Rational(2) : Rational(1);
}

namespace {

KnockoutSpec deterministic_four(Draw draw) {
  KnockoutSpec spec{2, even_win_matrix(4), std::move(draw)};
  set_duel(spec.win_prob, 0, 1, 1);
  set_duel(spec.win_prob, 0, 2, 0);
  set_duel(spec.win_prob, 0, 3, 0);
  set_duel(spec.win_prob, 1, 2, 1);
  set_duel(spec.win_prob, 1, 3, 1);
  set_duel(spec.win_prob, 2, 3, 1);
  return spec;
}

}  // namespace

KnockoutSpec example_3_1_spec() { return deterministic_four(RandomDraw{}); }

KnockoutSpec example_3_2_spec() {
  KnockoutSpec spec = deterministic_four(identity_bracket(4));
  set_duel(spec.win_prob, 0, 1, r(1, 2));
  set_duel(spec.win_prob, 2, 3, r(1, 2));
  return spec;
}

KnockoutSpec example_3_3_spec() { return KnockoutSpec::equal_strength(2, identity_bracket(4)); }

std::vector<std::map<Point, FiniteJointDistribution>> knockout_increment_families(unsigned rounds) {
  const std::size_t n = std::size_t{1} << rounds;
  const auto ind = knockout_fixed_draw_rounds(KnockoutSpec::equal_strength(rounds, identity_bracket(n)));
  std::vector<std::map<Point, FiniteJointDistribution>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned k = 1; k < rounds; ++k) {
      // Joint law of (S_i^(k), X_i^(k+1)).
      DistributionBuilder pair(2);
      for (const auto& a : ind.atoms()) {
        Rational s;
        for (unsigned q = 0; q < k; ++q) s += a.x[q * n + i];
        pair.add({s, a.x[k * n + i]}, a.p);
      }
      const auto joint = std::move(pair).build();
      std::map<Point, FiniteJointDistribution> fam;
      const auto grid = support_grid(joint);
      for (const auto& theta : grid[0]) {
        fam.emplace(Point{theta}, condition(joint, ConditioningEvent::equal({0}, {theta}), {1}));
      }
      out.push_back(std::move(fam));
    }
  }
  return out;
}

bool FixtureResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok(); });
}

std::span<const std::string_view> fixture_ids() { return kIds; }

FixtureResult run_fixture(std::string_view id, const CheckOptions& options) {
  FixtureResult out;
  out.id = std::string(id);
  Recorder rec(out, options);
  if (id == "ex-2.1") {
    run_ex_2_1(rec);
  } else if (id == "ex-3.1") {
    run_ex_3_1(rec);
  } else if (id == "ex-3.2") {
    run_ex_3_2(rec);
  } else if (id == "ex-3.3") {
    run_ex_3_3(rec);
  } else if (id == "thm-3.1") {
    run_thm_3_1(rec);
  } else if (id == "thm-3.2") {
    run_thm_3_2(rec);
  } else if (id == "thm-3.3") {
    run_thm_3_3(rec);
  } else if (id == "lemma-3.1") {
    run_lemma_3_1(rec);
  } else if (id == "conjecture") {
    run_conjecture(rec);
  } else {
    throw Error(ErrorCode::kParse, "unknown fixture '" + std::string(id) + "'");
  }
  return out;
}

std::string law_str(const FiniteJointDistribution& d) {
  std::string out;
  for (const auto& a : d.atoms()) {
    if (!out.empty()) out += ' ';
    out += point_str(a.x) + ":" + a.p.str();
  }
  return out;
}

nlohmann::json fixture_to_json(const FixtureResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}});
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  return {{"fixture", r.id}, {"passed", r.passed()}, {"checks", checks}, {"verdicts", verdicts}};
}

}  // namespace negdep
