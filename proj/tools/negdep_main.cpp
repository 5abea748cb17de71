#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "negdep/conjecture.hpp"
#include "negdep/distribution_json.hpp"
#include "negdep/error.hpp"
#include "negdep/fixtures.hpp"
#include "negdep/model_json.hpp"
#include "negdep/report.hpp"
#include "negdep/tournaments.hpp"

namespace {

using namespace negdep;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

EnumerationCaps caps_from(const std::string& spec) {
  EnumerationCaps caps = EnumerationCaps::from_environment();
  return spec.empty() ? caps : caps.with_overrides(spec);
}

TailVariant variant_from(const std::string& name) {
  if (name.empty() || name == "default") return TailVariant::kDefault;
  if (name == "strict") return TailVariant::kStrict;
  if (name == "weak") return TailVariant::kWeak;
  throw Error(ErrorCode::kParse, "unknown variant '" + name + "' (strict|weak)");
}

std::string verdict_line(const Verdict& v) {
  std::string line = std::string(property_name(v.property)) + (v.holds ? " holds" : " fails");
  if (v.witness) line += ": " + witness_to_json(*v.witness).dump();
  return line;
}

struct BuildArgs {
  std::string spec;
  std::string out;
};

int run_build(const BuildArgs& a) {
  const ModelSpec spec = model_from_json(parse_json_text(read_file(a.spec), a.spec));
  const FiniteJointDistribution d = build_distribution(spec);
  Rational mass;
  for (const auto& atom : d.atoms()) mass += atom.p;
  write_output(a.out, dump_json(distribution_to_json(d)));
  (a.out.empty() ? std::cerr : std::cout)
      << "atoms: " << d.size() << ", dim: " << d.dim() << ", total mass: " << mass
      << (mass == Rational(1) ? " (exact)" : " (MISMATCH)") << "\n";
  return kExitHolds;
}

struct CheckArgs {
  std::string dist;
  std::string props = "na,nod,nsmd,nrd,nltd,nrtd";
  std::optional<std::size_t> max_j;
  std::string caps;
  std::string variant;
  unsigned jobs = default_jobs();
  std::string out;
  bool timings = false;
  bool verify = false;
};

int run_check(const CheckArgs& a) {
  const FiniteJointDistribution d =
      distribution_from_json(parse_json_text(read_file(a.dist), a.dist));
  std::vector<Property> props;
  for (const auto& name : split(a.props, ',')) props.push_back(parse_property(name));
  if (props.empty()) throw Error(ErrorCode::kParse, "no properties selected");

  CheckOptions options;
  options.max_j = a.max_j;
  options.caps = caps_from(a.caps);
  options.variant = variant_from(a.variant);
  options.order_mode = a.verify ? OrderMode::kVerify : OrderMode::kFast;
  options.jobs = std::max(1u, a.jobs);

  Report report;
  report.input_digest = input_digest(d);
  report.dim = d.dim();
  report.atoms = d.size();
  report.caps = options.caps;
  report.max_j = options.max_j;
  report.variant = options.variant;
  report.order_mode = options.order_mode;

  int code = kExitHolds;
  for (Property p : props) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      report.verdicts.push_back(check_property(d, p, options));
    } catch (const Error& e) {
      report.error = std::string(property_name(p)) + ": " +
                     std::string(error_code_name(e.code())) + ": " + e.what();
      code = kExitError;
    }
    if (a.timings) {
      report.timings_ms[std::string(property_name(p))] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    if (code == kExitError) break;
    if (!report.verdicts.back().holds) code = kExitFails;
  }

  write_output(a.out, dump_json(report_to_json(report)));
  if (!a.out.empty()) {
    for (const auto& v : report.verdicts) std::cout << verdict_line(v) << "\n";
  }
  if (report.error) std::cerr << "error: " << *report.error << "\n";
  return code;
}

struct ReproduceArgs {
  std::string fixture;
  unsigned jobs = default_jobs();
  std::string out;
};

int run_reproduce(const ReproduceArgs& a) {
  std::vector<std::string_view> ids;
  if (a.fixture == "all") {
    for (auto id : fixture_ids()) ids.push_back(id);
  } else {
    ids.push_back(a.fixture);
  }
  CheckOptions options;
  options.caps = EnumerationCaps::from_environment();
  options.jobs = std::max(1u, a.jobs);

  nlohmann::json all = nlohmann::json::array();
  bool passed = true;
  for (auto id : ids) {
    const FixtureResult r = run_fixture(id, options);
    std::size_t bad = 0;
    for (const auto& c : r.checks) bad += c.ok() ? 0 : 1;
    std::cout << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size()
              << " checks";
    if (bad > 0) std::cout << ", " << bad << " mismatched";
    std::cout << ")\n";
    for (const auto& c : r.checks) {
      if (!c.ok()) {
        std::cout << "  " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
      }
    }
    passed = passed && r.passed();
    all.push_back(fixture_to_json(r));
  }
  if (!a.out.empty()) write_output(a.out, dump_json(all));
  return passed ? kExitHolds : kExitFails;
}

struct ConjectureArgs {
  std::string values;
  std::optional<std::size_t> n;
  std::size_t max_n = kDefaultConjectureMaxN;
  std::string caps;
  unsigned jobs = default_jobs();
  std::string out;
};

int run_conjecture(const ConjectureArgs& a) {
  std::vector<Rational> values;
  if (!a.values.empty()) {
    for (const auto& v : split(a.values, ',')) values.push_back(Rational::parse(v));
  } else {
    const std::size_t n = a.n.value_or(3);
    for (std::size_t k = 1; k <= n; ++k) values.emplace_back(static_cast<long>(k));
  }
  CheckOptions options;
  options.caps = caps_from(a.caps);
  options.jobs = std::max(1u, a.jobs);
  const ConjectureResult r = test_conjecture(values, options, a.max_n);
  const auto j = conjecture_to_json(r);
  if (!a.out.empty()) write_output(a.out, dump_json(j));
  std::cout << j.at("result").get<std::string>() << " values=" << point_str(values)
            << " partitions=" << r.partitions << " comparisons=" << r.comparisons << "\n";
  if (r.counterexample) std::cout << j.at("counterexample").dump(2) << "\n";
  return r.holds_on_instance ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact negative-dependence checks for finite distributions and tournament models"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* cmd_build = app.add_subcommand("build", "Build the score distribution of a model spec");
  cmd_build->add_option("spec", build.spec, "Model spec JSON")->required();
  cmd_build->add_option("-o,--output", build.out, "Distribution JSON (default: stdout)");

  CheckArgs check;
  auto* cmd_check = app.add_subcommand("check", "Check dependence properties of a distribution");
  cmd_check->add_option("dist", check.dist, "Distribution JSON")->required();
  cmd_check->add_option("--props", check.props,
                        "Comma list of na,nsmd,nod,nlod,nuod,nrd,nltd,nrtd,nrd1,nltd1,nrtd1");
  cmd_check->add_option("--max-j", check.max_j, "Bound on |J| (and on the smaller NA block)");
  cmd_check->add_option("--caps", check.caps, "upper_sets=N,lp_vars=M");
  cmd_check->add_option("--variant", check.variant, "Tail strictness: strict or weak");
  cmd_check->add_option("--jobs", check.jobs, "Worker threads");
  cmd_check->add_option("-o,--output", check.out, "Report JSON (default: stdout)");
  cmd_check->add_flag("--timings", check.timings, "Record wall-clock time per property");
  cmd_check->add_flag("--verify", check.verify, "Cross-check every order query with all deciders");

  ReproduceArgs repro;
  auto* cmd_repro = app.add_subcommand("reproduce", "Re-derive a built-in fixture");
  cmd_repro->add_option("fixture", repro.fixture, "Fixture id or 'all'")->required();
  cmd_repro->add_option("--jobs", repro.jobs, "Worker threads");
  cmd_repro->add_option("-o,--output", repro.out, "Detailed JSON results");

  ConjectureArgs conj;
  auto* cmd_conj = app.add_subcommand("conjecture", "Exhaustive conjecture test on one vector");
  auto* opt_values = cmd_conj->add_option("--values", conj.values, "Comma list of rationals");
  cmd_conj->add_option("-n", conj.n, "Use values 1..n")->excludes(opt_values);
  cmd_conj->add_option("--max-n", conj.max_n, "Size guard");
  cmd_conj->add_option("--caps", conj.caps, "upper_sets=N,lp_vars=M");
  cmd_conj->add_option("--jobs", conj.jobs, "Worker threads");
  cmd_conj->add_option("-o,--output", conj.out, "Result JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (cmd_build->parsed()) return run_build(build);
    if (cmd_check->parsed()) return run_check(check);
    if (cmd_repro->parsed()) return run_reproduce(repro);
    if (cmd_conj->parsed()) return run_conjecture(conj);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
