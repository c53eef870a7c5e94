// Acceptance checks, one printed line each. Runs the verification suites at
// pinned scales, filters the assertions each criterion is about, and adds
// two direct checks (the strong Fejer sum bound and the end-to-end CLI run).
// Exits nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "walsh/counterexamples.hpp"
#include "walsh/dyadic_core.hpp"
#include "walsh/hardy_norms.hpp"
#include "walsh/operators.hpp"
#include "walsh/suites.hpp"
#include "walsh/table.hpp"

using namespace walsh;

namespace {

// Frozen bound for the strong Fejer sum ratio at N = 14, n_max = 2^13,
// measured by tools/calibrate (0.8621) and widened by 5 percent.
constexpr double kStrongSumMaxRatio = 0.9052;

int g_failures = 0;

void criterion(int number, bool pass, const std::string& text, double seconds = -1.0) {
  std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << "  "
            << text;
  if (seconds >= 0.0) std::cout << " [" << format_double(seconds) << " s]";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

bool all_pass(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (!r.pass()) return false;
  return true;
}

// True if at least one assertion matches the prefix and all matching ones pass.
bool prefix_pass(const std::vector<SuiteResult>& results, const std::string& prefix) {
  bool seen = false;
  for (const SuiteResult& r : results) {
    for (const Assertion& a : r.assertions) {
      if (a.name.rfind(prefix, 0) != 0) continue;
      seen = true;
      if (!a.pass) return false;
    }
  }
  return seen;
}

double now_seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<index_t> alternating_masks(int max_top) {
  std::vector<index_t> out;
  index_t v = 1;
  while (top_bit(v) <= max_top) {
    out.push_back(v);
    v = (v << 2) | 1;
    if (top_bit(v) > max_top) break;
  }
  return out;
}

}  // namespace

int main() {
  {
    SuiteOptions opt;
    opt.resolution = 10;
    opt.max_n = 512;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SuiteResult> results;
    for (const char* name : {"lemma0", "lemma1", "lemma3", "lemma4"})
      for (SuiteResult& r : run_suite(name, opt)) results.push_back(std::move(r));
    double secs = now_seconds(t0);
    criterion(1, all_pass(results) && secs < 60.0,
              "kernel decomposition identities exact for all n <= 512 at N = 10",
              secs);
  }

  SuiteOptions defaults;
  {
    std::vector<SuiteResult> lemma2 = run_suite("lemma2", defaults);
    criterion(2, prefix_pass(lemma2, "two_sided"),
              "V(n)/8 <= L(n) <= V(n) for every n in [1, 4096]");
    criterion(3, prefix_pass(lemma2, "cesaro"),
              "averaged statistics: errors shrink along {2^10, 2^14, 2^18, 2^20} "
              "and end below the frozen thresholds");
  }
  {
    std::vector<SuiteResult> lemma7 = run_suite("lemma7", defaults);
    criterion(4, all_pass(lemma7),
              "run lower bound for n K_n holds for every run of every n <= 1024 "
              "at N = 12");
  }
  {
    SuiteOptions opt;
    opt.resolution = 8;
    std::vector<SuiteResult> watari = run_suite("watari", opt);
    criterion(5, all_pass(watari),
              "two-sided modulus bounds on ||f - S_{2^n} f||_p for 100 seeded "
              "functions at N = 8, all n <= 8, p in {1, 2}");
  }
  {
    SuiteOptions opt;
    opt.resolution = 14;
    std::vector<SuiteResult> ex = run_suite("example221", opt);
    criterion(6, prefix_pass(ex, "spectrum") && prefix_pass(ex, "partial_sum"),
              "block spectrum law exact and partial-sum law within 1e-10 for "
              "three-atom builds at N = 14");
  }
  {
    SuiteOptions opt;
    opt.resolution = 14;
    std::vector<SuiteResult> t41 = run_suite("thm41", opt);
    std::vector<SuiteResult> t51 = run_suite("thm51", opt);
    criterion(7, prefix_pass(t41, "dichotomy") && prefix_pass(t51, "dichotomy"),
              "bounded/divergent dichotomy across pow2, pow2_plus_half, "
              "pow2_plus1 for partial sums (p = 1/2) and Fejer means (p = 1/3), "
              "k = 3..11 at N = 14");
  }
  std::vector<SuiteResult> t532 = run_suite("thm532", defaults);
  criterion(8, prefix_pass(t532, "atom_norm"),
            "||2^m (D_{2^{m+1}} - D_{2^m})||_{H_{1/2}} = 1 exactly for m <= 12");
  criterion(9, prefix_pass(t532, "block"),
            "block-averaged strong Fejer sums grow and stay above the frozen "
            "multiple of log m for m = 4..10");
  {
    const int N = 14;
    const index_t n_max = index_t{1} << 13;
    std::mt19937_64 rng(defaults.seed);
    std::uniform_int_distribution<int> lev(0, N - 2);
    std::uniform_int_distribution<point_t> pt(0, (point_t{1} << N) - 1);
    double worst = 0.0;
    for (int s = 0; s < 3; ++s) {
      StrongSumSource src;
      src.f = make_random_atom(0.5, lev(rng), pt(rng), N, rng);
      ExperimentTable t =
          strong_sum_experiment(0.5, OperatorKind::fejer, src, n_max, N);
      for (std::size_t r = 0; r < t.rows.size(); ++r)
        worst = std::max(worst, t.at(r, "ratio"));
    }
    LambdaSchedule s1 = LambdaSchedule::parse("thm422b", 0.5, Phi::constant());
    OperatorConfig plus1 = OperatorConfig::named("pow2_plus1", 1, N - 2);
    ExampleMartingale em1 =
        build_example_martingale(0.5, s1.filter(plus1.indices), s1, N);
    StrongSumSource src1;
    src1.f = em1.f;
    ExperimentTable t1 =
        strong_sum_experiment(0.5, OperatorKind::fejer, src1, n_max, N);
    for (std::size_t r = 0; r < t1.rows.size(); ++r)
      worst = std::max(worst, t1.at(r, "ratio"));
    LambdaSchedule s2 = LambdaSchedule::parse("thm423b", 0.5, Phi::constant());
    ExampleMartingale em2 =
        build_example_martingale(0.5, s2.filter(alternating_masks(N - 2)), s2, N);
    StrongSumSource src2;
    src2.f = em2.f;
    ExperimentTable t2 =
        strong_sum_experiment(0.5, OperatorKind::fejer, src2, n_max, N);
    for (std::size_t r = 0; r < t2.rows.size(); ++r)
      worst = std::max(worst, t2.at(r, "ratio"));
    criterion(10, worst <= kStrongSumMaxRatio,
              "damped strong Fejer sums bounded by " +
                  format_double(kStrongSumMaxRatio) +
                  " * ||f||^p (measured max " + format_double(worst) +
                  ") over atoms and builds, n <= 2^13 at N = 14");
  }
  {
    auto t0 = std::chrono::steady_clock::now();
#ifdef WALSHCLI_PATH
    std::string cmd = std::string(WALSHCLI_PATH) +
                      " verify all --resolution 12 > acceptance_cli_out.txt 2>&1";
    int rc = std::system(cmd.c_str());
#ifndef _WIN32
    if (rc != -1) rc = WEXITSTATUS(rc);
#endif
    double secs = now_seconds(t0);
    criterion(11, rc == 0 && secs < 600.0,
              "cli 'verify all --resolution 12' exits 0 in under 10 minutes", secs);
    std::remove("acceptance_cli_out.txt");
#else
    criterion(11, false, "cli path not wired into the build");
#endif
  }

  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
