#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "nestconf/birkhoff.h"
#include "nestconf/buchberger.h"
#include "nestconf/families.h"
#include "nestconf/io.h"
#include "nestconf/normality.h"
#include "nestconf/properties.h"
#include "nestconf/toric.h"

using namespace nestconf;

namespace {

// Exit codes
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

// Input problems surface as exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::CertifiedGB: return kOk;
    case VerdictStatus::CertifiedNotGB: return kNegative;
    case VerdictStatus::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

void print_verdict(std::ostream& out, const VerificationVerdict& v, const std::vector<std::string>& names) {
  out << to_string(v.status);
  if (v.status != VerdictStatus::CertifiedGB) out << " check=" << v.failed_check;
  if (v.failure_witness)
    out << " witness=" << format_monomial(v.failure_witness->lead(), names) << " - "
        << format_monomial(v.failure_witness->tail(), names);
  out << '\n';
  if (!v.diagnostics.empty()) out << "# " << v.diagnostics << '\n';
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::vector<Configuration> read_configs(const std::vector<std::string>& paths) {
  std::vector<Configuration> out;
  for (const auto& p : paths) out.push_back(read_configuration_file(p));
  return out;
}

GroebnerBasis grevlex_basis(const Configuration& a) {
  return toric_groebner(a, MonomialOrder::graded_revlex(a.size()));
}

int cmd_toric_gb(const std::string& path, const std::string& order_text) {
  Configuration a = read_configuration_file(path);
  MonomialOrder order = MonomialOrder::graded_revlex(a.size());
  try {
    order = parse_order(order_text, a.size());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  GroebnerBasis g = toric_groebner(a, order);
  std::cout << format_binomials(g.elements, plain_names(a.size()));
  std::cout << "max_deg=" << g.max_degree() << " count=" << g.elements.size() << '\n';
  return kOk;
}

int cmd_nested_build(const std::vector<std::string>& paths, const std::string& out_path, bool variables) {
  auto configs = read_configs(paths);
  Configuration outer = configs.front();
  configs.erase(configs.begin());
  NestedConfiguration n = build_nested(outer, configs);
  std::string text;
  if (variables) {
    for (std::size_t v = 0; v < n.size(); ++v) text += display(n.variables[v]) + ' ' + to_string(n.config.columns[v]) + '\n';
  } else {
    Configuration points = n.point_configuration();
    text = "# variables=" + std::to_string(n.size()) + " points=" + std::to_string(points.size()) + '\n';
    text += format_configuration(points);
  }
  emit(text, out_path);
  return kOk;
}

int cmd_nested_gb(const std::vector<std::string>& paths, const std::string& family, bool verify,
                  const std::string& out_path) {
  auto configs = read_configs(paths);
  Configuration outer = configs.front();
  configs.erase(configs.begin());
  NestedConfiguration n = build_nested(outer, configs);
  GroebnerBasis g0 = grevlex_basis(outer);
  std::vector<GroebnerBasis> gi;
  for (const auto& b : configs) gi.push_back(grevlex_basis(b));
  Family f;
  if (family == "pcase") {
    f = family_pcase(n, g0);
  } else if (family == "maincase") {
    f = family_maincase(n, g0, gi);
  } else {
    std::vector<std::vector<MarkedBinomial>> h;
    for (const auto& g : gi) h.push_back(g.elements);
    f = family_generators(n, g0.elements, h);
  }
  const auto names = nested_names(n);
  DegreeStats st = degree_stats(f.binomials);
  emit(format_binomials(f.binomials, names), out_path);
  std::cout << "max_deg=" << st.max_degree << " count=" << f.size() << " squarefree_initial=" << st.initial_squarefree
            << '\n';
  if (!verify) return kOk;
  VerificationVerdict v = verify_marked_gb(f.binomials, n.config);
  print_verdict(std::cout, v, names);
  return exit_code(v.status);
}

int cmd_normality_check(const std::string& path, std::optional<Exponent> bound) {
  Configuration a = read_configuration_file(path);
  NormalityResult r = is_normal(a, bound);
  std::cout << to_string(r.status);
  switch (r.status) {
    case NormalityStatus::Normal:
      std::cout << " method=" << r.method;
      if (r.order) std::cout << " order=" << r.order->describe();
      if (r.method != "squarefree-initial") std::cout << " bound=" << r.bound << " certifying_bound=" << r.certifying_bound;
      std::cout << '\n';
      return kOk;
    case NormalityStatus::NotNormal:
      std::cout << " witness=" << to_string(*r.witness) << '\n';
      return kNegative;
    case NormalityStatus::UnknownUpTo:
      std::cout << " bound=" << r.bound << " certifying_bound=" << r.certifying_bound << '\n';
      return kInconclusive;
  }
  return kInconclusive;
}

int cmd_normality_holes(const std::string& path, std::optional<Exponent> bound) {
  Configuration a = read_configuration_file(path);
  std::cout << format_hole_report(find_holes(a, bound.value_or(default_normality_bound(a))));
  return kOk;
}

int cmd_birkhoff_pipeline(std::size_t n, bool with_linear) {
  BirkhoffReport r = birkhoff_pipeline(n);
  std::cout << "n=" << n << " variables=" << r.variables << " points=" << r.points << " family=" << r.family.size()
            << " max_deg=" << r.stats.max_degree << '\n';
  NestedConfiguration nc = birkhoff_nested(n);
  const auto names = nested_names(nc);
  if (r.variable_verdict) {
    std::cout << "variables: ";
    print_verdict(std::cout, *r.variable_verdict, names);
  }
  std::cout << "points: ";
  print_verdict(std::cout, r.verdict, names);
  if (with_linear) {
    // diagnostic: the family plus x_{123M} - x_{456M} on the variable list
    auto completed = r.family.binomials;
    auto linear = birkhoff_linear_relations(n);
    completed.insert(completed.end(), linear.begin(), linear.end());
    std::cout << "variables+linear(" << linear.size() << "): ";
    print_verdict(std::cout, verify_marked_gb(completed, nc.config), names);
  }
  std::cout << to_string(r.verdict.status) << " quadratic=" << (r.stats.is_quadratic ? "true" : "false") << '\n';
  VerdictStatus worst = r.verdict.status;
  if (r.variable_verdict && r.variable_verdict->status != VerdictStatus::CertifiedGB)
    worst = r.variable_verdict->status;
  return exit_code(worst);
}

int cmd_verify(const std::string& family_path, const std::string& spec_path) {
  const std::string spec = read_file(spec_path);
  Configuration a;
  std::vector<std::string> names;
  if (spec.find("outer:") != std::string::npos) {
    NestedConfiguration n = read_nested_spec_file(spec_path);
    a = n.config;
    names = nested_names(n);
  } else {
    a = parse_configuration(spec, spec_path);
    names = plain_names(a.size());
  }
  auto family = parse_binomials(read_file(family_path), names, family_path);
  VerificationVerdict v = verify_marked_gb(family, a);
  print_verdict(std::cout, v, names);
  return exit_code(v.status);
}

int cmd_random_check(std::uint64_t seed, std::size_t count, const std::string& suite) {
  std::mt19937_64 rng(seed);
  InstanceShape shape;
  bool failed = false;
  auto report = [&](const char* name, const SuiteTally& t, const char* special = nullptr) {
    std::cout << name << " pass=" << t.pass << " fail=" << t.fail << " skip=" << t.skip;
    if (special) std::cout << ' ' << special << '=' << t.special;
    std::cout << '\n';
    for (const auto& f : t.failures) std::cout << "  " << f << '\n';
    failed = failed || t.fail > 0 || t.pass == 0;
  };
  if (suite == "all" || suite == "maincase") report("maincase", run_maincase_suite(rng, shape, count), "equality");
  if (suite == "all" || suite == "normality") report("normality", run_normality_suite(rng, shape, count));
  if (suite == "all" || suite == "sort-split") report("sort-split", run_sort_split_suite(rng, shape, count));
  if (suite == "all" || suite == "membership") report("membership", run_membership_suite(rng, shape, count), "members");
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested configurations: toric ideals, Groebner families and normality"};
  app.require_subcommand(1);

  auto* toric = app.add_subcommand("toric", "toric ideals of configurations")->require_subcommand(1);
  auto* toric_gb = toric->add_subcommand("gb", "reduced Groebner basis of I_A");
  std::string config_path, order_text = "grevlex";
  toric_gb->add_option("config", config_path, "configuration file")->required();
  toric_gb->add_option("--order", order_text, "lex | grlex | grevlex | weight:<csv>");

  auto* nested = app.add_subcommand("nested", "nested configurations")->require_subcommand(1);
  auto* nested_build = nested->add_subcommand("build", "columns of A(B1,...,Bd)");
  std::vector<std::string> config_paths;
  std::string out_path;
  bool variables = false;
  nested_build->add_option("configs", config_paths, "A then B1 ... Bd")->required()->expected(2, -1);
  nested_build->add_option("--out", out_path, "write to a file instead of stdout");
  nested_build->add_flag("--variables", variables, "list every variable with its column");
  auto* nested_gb = nested->add_subcommand("gb", "marked family for A(B1,...,Bd)");
  std::string family = "maincase";
  bool verify = false;
  nested_gb->add_option("configs", config_paths, "A then B1 ... Bd")->required()->expected(2, -1);
  nested_gb->add_option("--family", family, "pcase | maincase | generators")
      ->check(CLI::IsMember({"pcase", "maincase", "generators"}));
  nested_gb->add_flag("--verify", verify, "verify the family against the oracle");
  nested_gb->add_option("--out", out_path, "write the family to a file");

  auto* normality = app.add_subcommand("normality", "normality of K[A]")->require_subcommand(1);
  std::optional<Exponent> bound;
  auto* normality_check = normality->add_subcommand("check", "decide normality");
  normality_check->add_option("config", config_path, "configuration file")->required();
  normality_check->add_option("--bound", bound, "degree bound for the hole search")->check(CLI::PositiveNumber);
  auto* normality_holes = normality->add_subcommand("holes", "list holes up to a degree");
  normality_holes->add_option("config", config_path, "configuration file")->required();
  normality_holes->add_option("--bound", bound, "degree bound")->check(CLI::PositiveNumber);

  auto* birkhoff = app.add_subcommand("birkhoff", "multiples of the 3x3 Birkhoff polytope")->require_subcommand(1);
  std::size_t multiple = 2;
  auto* birkhoff_pipe = birkhoff->add_subcommand("pipeline", "build and verify the quadratic family");
  birkhoff_pipe->add_option("-n", multiple, "multiple")->required()->check(CLI::Range(1, 6));
  bool with_linear = false;
  birkhoff_pipe->add_flag("--with-linear", with_linear, "also verify the family plus the degree-one relations");
  auto* birkhoff_pts = birkhoff->add_subcommand("points", "lattice points of n B3");
  birkhoff_pts->add_option("-n", multiple, "multiple")->required()->check(CLI::Range(1, 12));
  auto* birkhoff_fam = birkhoff->add_subcommand("family", "the quadratic family on the multiset variables");
  birkhoff_fam->add_option("-n", multiple, "multiple")->required()->check(CLI::Range(1, 6));

  auto* verify_cmd = app.add_subcommand("verify", "verify marked families")->require_subcommand(1);
  auto* verify_gb = verify_cmd->add_subcommand("marked-gb", "verify a binomial file");
  std::string family_path, spec_path;
  verify_gb->add_option("family", family_path, "binomial file")->required();
  verify_gb->add_option("spec", spec_path, "nested spec (.nest) or configuration file")->required();

  auto* random_check = app.add_subcommand("random-check", "randomized property suites");
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::string suite = "all";
  random_check->add_option("--seed", seed, "random seed");
  random_check->add_option("--count", count, "counted cases per suite");
  random_check->add_option("--suite", suite, "all | maincase | normality | sort-split | membership")
      ->check(CLI::IsMember({"all", "maincase", "normality", "sort-split", "membership"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*toric_gb) return cmd_toric_gb(config_path, order_text);
    if (*nested_build) return cmd_nested_build(config_paths, out_path, variables);
    if (*nested_gb) return cmd_nested_gb(config_paths, family, verify, out_path);
    if (*normality_check) return cmd_normality_check(config_path, bound);
    if (*normality_holes) return cmd_normality_holes(config_path, bound);
    if (*birkhoff_pipe) return cmd_birkhoff_pipeline(multiple, with_linear);
    if (*birkhoff_pts) {
      std::cout << format_points(birkhoff_multiple_points(multiple));
      return kOk;
    }
    if (*birkhoff_fam) {
      std::cout << format_binomials(family_birkhoff(multiple).binomials, nested_names(birkhoff_nested(multiple)));
      return kOk;
    }
    if (*verify_gb) return cmd_verify(family_path, spec_path);
    if (*random_check) return cmd_random_check(seed, count, suite);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
