// One PASS/FAIL line per acceptance criterion. Exits nonzero when any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "nestconf/birkhoff.h"
#include "nestconf/families.h"
#include "nestconf/io.h"
#include "nestconf/normality.h"
#include "nestconf/properties.h"
#include "nestconf/toric.h"

using namespace nestconf;

namespace {

// Pinned limits
constexpr double kB3Seconds = 1.0;
constexpr double kBirkhoffSeconds = 300.0;
constexpr double kPointsSeconds = 1.0;
constexpr std::size_t kMaincaseInstances = 25;
constexpr std::size_t kNormalityInstances = 25;
constexpr std::size_t kSortSplitCases = 10000;
constexpr std::size_t kMembershipCases = 1000;
constexpr std::uint64_t kSeed = 20240611;

const std::string data_dir = NESTCONF_TEST_DATA;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << x;
  return s.str();
}

void criterion_1() {
  Configuration b3 = read_configuration_file(data_dir + "/b3.cfg");
  auto t0 = Clock::now();
  GroebnerBasis g = toric_groebner(b3, MonomialOrder::graded_revlex(b3.size()));
  double dt = seconds_since(t0);
  const std::vector<MarkedBinomial> want = {MarkedBinomial::make({1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1})};
  bool ok = b3.columns == permutation_configuration(3).columns && g.elements == want && dt < kB3Seconds;
  std::string text = format_binomials(g.elements, plain_names(6));
  if (!text.empty()) text.pop_back();
  report(1, ok, "gb={" + text + "} time=" + fixed(dt) + "s");
}

void criterion_2() {
  NestedConfiguration n = read_nested_spec_file(data_dir + "/pair.nest");
  // golden matrix, rows u1 u2 v1 v2
  const Exponent golden[4][11] = {{4, 3, 2, 1, 0, 2, 1, 0, 2, 1, 0},
                                  {0, 1, 2, 3, 4, 0, 1, 2, 0, 1, 2},
                                  {0, 0, 0, 0, 0, 2, 2, 2, 1, 1, 1},
                                  {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2}};
  std::multiset<ExponentVector> want;
  for (int c = 0; c < 11; ++c) want.insert({golden[0][c], golden[1][c], golden[2][c], golden[3][c]});
  Configuration points = n.point_configuration();
  std::multiset<ExponentVector> got(points.columns.begin(), points.columns.end());
  report(2, got == want,
         "variables=" + std::to_string(n.size()) + " distinct columns=" + std::to_string(points.size()) +
             " match golden 4x11 up to column order=" + (got == want ? "yes" : "no"));
}

void criterion_3() {
  bool ok = true;
  std::string detail;
  for (std::size_t m : {2, 3}) {
    auto t0 = Clock::now();
    NestedConfiguration n = birkhoff_nested(m);
    Family f = family_birkhoff(m);
    auto to = Clock::now();
    GroebnerBasis oracle = toric_groebner(n.config, MonomialOrder::graded_revlex(n.size()));
    double oracle_time = seconds_since(to);
    VerifyOptions options;
    options.oracle = &oracle;
    VerificationVerdict v = verify_marked_gb(f.binomials, n.config, options);
    DegreeStats st = degree_stats(f.binomials);
    // the same family with variables of equal column identified
    BirkhoffReport points = birkhoff_pipeline(m, {}, false);
    double dt = seconds_since(t0);
    bool here = v.status == VerdictStatus::CertifiedGB && st.max_degree == 2 && dt < kBirkhoffSeconds;
    ok = ok && here;
    detail += "n=" + std::to_string(m) + ": variables=" + std::to_string(n.size()) +
              " family=" + std::to_string(f.size()) + " max_deg=" + std::to_string(st.max_degree) +
              " oracle=" + std::to_string(oracle.elements.size()) + " (deg " + std::to_string(oracle.max_degree()) +
              ", " + fixed(oracle_time) + "s) verdict=" + to_string(v.status);
    if (v.status != VerdictStatus::CertifiedGB) detail += "/" + v.failed_check;
    if (points.points != n.size())
      detail += " points=" + std::to_string(points.points) + " point-verdict=" + to_string(points.verdict.status) +
                (points.verdict.status != VerdictStatus::CertifiedGB ? "/" + points.verdict.failed_check : "");
    // Diagnostic only, never part of the verdict above: the same family with
    // the degree-one relations of equal variables added.
    auto linear = birkhoff_linear_relations(m);
    if (!linear.empty()) {
      auto completed = f.binomials;
      completed.insert(completed.end(), linear.begin(), linear.end());
      VerificationVerdict c = verify_marked_gb(completed, n.config, options);
      detail += " [diagnostic: plus " + std::to_string(linear.size()) + " linear relation(s): " + to_string(c.status) + "]";
    }
    detail += " time=" + fixed(dt) + "s; ";
  }
  report(3, ok, detail);
}

void criterion_4() {
  Configuration b1 = read_configuration_file(data_dir + "/gap.cfg");
  HoleReport holes = find_holes(b1, default_normality_bound(b1));
  bool hole_ok = !holes.holes.empty() && holes.holes.front().point == ExponentVector{2, 1};
  NestedConfiguration n = read_nested_spec_file(data_dir + "/gap_square.nest");
  Configuration points = n.point_configuration();
  std::set<ExponentVector> want, got(points.columns.begin(), points.columns.end());
  for (Exponent i = 0; i <= 8; ++i) want.insert({i, 2});
  NormalityResult r = is_normal(n.config);
  bool ok = hole_ok && got == want && points.size() == 9 && r.status == NormalityStatus::Normal &&
            r.method == "squarefree-initial";
  report(4, ok,
         "first hole=" + (holes.holes.empty() ? std::string("none") : to_string(holes.holes.front().point)) +
             " A(B1) columns=" + std::to_string(points.size()) + " u^i v^2 (i=0..8)=" + (got == want ? "yes" : "no") +
             " is_normal=" + to_string(r.status) + " via " + r.method);
}

void criterion_5() {
  Configuration a = read_configuration_file(data_dir + "/gap_w.cfg");
  constexpr Exponent bound = 10;
  HoleReport r = find_holes(a, bound);
  std::set<ExponentVector> want, got;
  for (Exponent alpha = 0; alpha < bound; ++alpha) want.insert({2, 1, alpha});
  for (const auto& h : r.holes) got.insert(h.point);
  bool ok = got == want && r.pattern_flag;
  report(5, ok, "holes=" + std::to_string(r.holes.size()) + " equal (2,1,a) a=0..9: " + (got == want ? "yes" : "no") +
                    " pattern_flag=" + (r.pattern_flag ? "set" : "unset"));
}

// Independent oracle: every 3 x 3 nonnegative matrix with all margins n.
std::set<ExponentVector> magic_squares(Exponent n) {
  std::set<ExponentVector> out;
  for (Exponent a = 0; a <= n; ++a)
    for (Exponent b = 0; a + b <= n; ++b)
      for (Exponent d = 0; d <= n; ++d)
        for (Exponent e = 0; d + e <= n; ++e) {
          Exponent c = n - a - b, f = n - d - e, g = n - a - d, h = n - b - e, i = n - c - f;
          if (g < 0 || h < 0 || i < 0 || g + h + i != n) continue;
          out.insert({a, b, c, d, e, f, g, h, i});
        }
  return out;
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  const std::size_t expected[] = {6, 21, 55};
  for (std::size_t n = 1; n <= 3; ++n) {
    auto t0 = Clock::now();
    auto pts = birkhoff_multiple_points(n);
    double dt = seconds_since(t0);
    std::set<ExponentVector> got;
    for (const auto& p : pts) got.insert(p.entries);
    auto want = magic_squares(static_cast<Exponent>(n));
    bool here = pts.size() == expected[n - 1] && got.size() == pts.size() && got == want && dt < kPointsSeconds;
    ok = ok && here;
    detail += "n=" + std::to_string(n) + ":" + std::to_string(pts.size()) + "/" + std::to_string(want.size()) + " (" +
              fixed(dt) + "s) ";
  }
  report(6, ok, detail);
}

void criterion_7() {
  std::mt19937_64 rng(kSeed);
  SuiteTally t = run_maincase_suite(rng, InstanceShape{}, kMaincaseInstances);
  bool ok = t.fail == 0 && t.pass >= kMaincaseInstances;
  report(7, ok,
         "instances pass=" + std::to_string(t.pass) + " fail=" + std::to_string(t.fail) +
             " skipped=" + std::to_string(t.skip) + " squarefree-equality cases=" + std::to_string(t.special) +
             (t.failures.empty() ? "" : " first failure: " + t.failures.front()));
}

void criterion_8() {
  std::mt19937_64 rng(kSeed + 1);
  SuiteTally t = run_normality_suite(rng, InstanceShape{}, kNormalityInstances);
  bool ok = t.fail == 0 && t.pass >= kNormalityInstances;
  report(8, ok,
         "instances Normal=" + std::to_string(t.pass) + " not Normal=" + std::to_string(t.fail) +
             " skipped=" + std::to_string(t.skip) + (t.failures.empty() ? "" : " first failure: " + t.failures.front()));
}

void criterion_9() {
  std::mt19937_64 rng(kSeed + 2);
  SuiteTally s = run_sort_split_suite(rng, InstanceShape{}, kSortSplitCases);
  SuiteTally m = run_membership_suite(rng, InstanceShape{}, kMembershipCases);
  bool ok = s.fail == 0 && s.pass == kSortSplitCases && m.fail == 0 && m.pass == kMembershipCases;
  std::string first = !s.failures.empty() ? s.failures.front() : !m.failures.empty() ? m.failures.front() : "";
  report(9, ok,
         "sort_split " + std::to_string(s.pass) + "/" + std::to_string(s.pass + s.fail) + ", membership " +
             std::to_string(m.pass) + "/" + std::to_string(m.pass + m.fail) + " (members " + std::to_string(m.special) +
             ")" + (first.empty() ? "" : " first failure: " + first));
}

void criterion_10() {
  NestedConfiguration n = birkhoff_nested(2);
  Family f = family_birkhoff(2);
  GroebnerBasis oracle = toric_groebner(n.config, MonomialOrder::graded_revlex(n.size()));
  VerifyOptions options;
  options.oracle = &oracle;
  std::size_t detected = 0;
  for (std::size_t drop = 0; drop < f.size(); ++drop) {
    auto mutated = f.binomials;
    mutated.erase(mutated.begin() + static_cast<std::ptrdiff_t>(drop));
    VerificationVerdict v = verify_marked_gb(mutated, n.config, options);
    if (v.status == VerdictStatus::CertifiedNotGB && v.failure_witness) ++detected;
  }
  report(10, detected == f.size(),
         "single deletions detected " + std::to_string(detected) + "/" + std::to_string(f.size()));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
