// Command line front end: kernel dumps, Lebesgue constant reports, the
// verification suites and the divergence/convergence experiments, with CSV
// or JSON output.
//
// Exit codes: 0 success, 1 failed assertion, 2 usage error, 3 resolution or
// memory limit, 4 output I/O failure.

#include <cstdint>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "walsh/counterexamples.hpp"
#include "walsh/dyadic_core.hpp"
#include "walsh/kernels.hpp"
#include "walsh/operators.hpp"
#include "walsh/suites.hpp"
#include "walsh/table.hpp"
#include "walsh/types.hpp"

namespace {

using namespace walsh;

void write_table(const ExperimentTable& t, const std::string& out,
                 const std::string& format) {
  if (out.empty()) {
    std::cout << (format == "json" ? to_json(t) : to_csv(t));
    return;
  }
  emit(t, format, out);
  std::cerr << "wrote " << out << "\n";
}

ExperimentTable function_table(const DyadicFunction& f, const std::string& name) {
  ExperimentTable t;
  t.name = name;
  t.columns = {"x", "value"};
  for (std::size_t x = 0; x < f.size(); ++x)
    t.add_row({static_cast<double>(x), f.values[x]});
  t.metadata["resolution"] = std::to_string(f.resolution);
  return t;
}

struct KernelArgs {
  std::string kind = "dirichlet";
  std::uint64_t n = 1;
  int resolution = 12;
  std::string method;
  std::string out, format = "csv";
};

int cmd_kernel(const KernelArgs& a) {
  DyadicFunction f;
  std::string method = a.method;
  if (a.kind == "dirichlet") {
    if (method.empty()) method = "recursive";
    DirichletMethod m;
    if (method == "direct")
      m = DirichletMethod::direct;
    else if (method == "lemma1")
      m = DirichletMethod::lemma1;
    else if (method == "recursive")
      m = DirichletMethod::recursive;
    else
      throw std::invalid_argument("dirichlet method must be direct, lemma1 or recursive");
    f = dirichlet(a.n, a.resolution, m);
  } else {
    if (method.empty()) method = "lemma3";
    if (method == "closed") {
      if (a.n == 0 || (a.n & (a.n - 1)) != 0)
        throw std::invalid_argument("closed form needs n = 2^m");
      f = fejer_pow2_closed(top_bit(a.n), a.resolution);
    } else {
      FejerMethod m;
      if (method == "direct")
        m = FejerMethod::direct;
      else if (method == "weighted")
        m = FejerMethod::weighted;
      else if (method == "lemma3")
        m = FejerMethod::lemma3;
      else
        throw std::invalid_argument("fejer method must be direct, weighted, lemma3 or closed");
      f = fejer_kernel(a.n, a.resolution, m);
    }
  }
  ExperimentTable t = function_table(f, a.kind + "_kernel");
  t.metadata["n"] = std::to_string(a.n);
  t.metadata["method"] = method;
  write_table(t, a.out, a.format);
  return 0;
}

struct LebesgueArgs {
  std::uint64_t n = 0;
  std::uint64_t sweep_max = 0;
  std::uint64_t cesaro_max = 0;
  std::string out, format = "csv";
};

int cmd_lebesgue(const LebesgueArgs& a) {
  int modes = (a.n != 0) + (a.sweep_max != 0) + (a.cesaro_max != 0);
  if (modes != 1)
    throw std::invalid_argument("pick exactly one of --n, --sweep-max, --cesaro-max");
  ExperimentTable t;
  if (a.n != 0) {
    t.name = "lebesgue_constant";
    t.columns = {"n", "l1_norm", "shell_formula", "variation"};
    t.add_row({static_cast<double>(a.n), lebesgue_constant(a.n),
               lebesgue_constant_closed(a.n), static_cast<double>(variation(a.n))});
  } else if (a.sweep_max != 0) {
    t.name = "lebesgue_sweep";
    t.columns = {"n", "l1_norm", "variation"};
    for (index_t n = 1; n <= a.sweep_max; ++n)
      t.add_row({static_cast<double>(n), lebesgue_constant_closed(n),
                 static_cast<double>(variation(n))});
  } else {
    t = lebesgue_cesaro(a.cesaro_max);
  }
  write_table(t, a.out, a.format);
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int resolution = 12;
  std::uint64_t seed = 20200926;
  int jobs = 1;
  std::uint64_t max_n = 0;
  std::string out, format = "csv";
};

int cmd_verify(const VerifyArgs& a) {
  if (!is_suite_name(a.suite))
    throw std::invalid_argument("unknown suite: " + a.suite);
  SuiteOptions opt;
  opt.resolution = a.resolution;
  opt.seed = a.seed;
  opt.jobs = a.jobs;
  opt.max_n = a.max_n;
  std::vector<SuiteResult> results = run_suite(a.suite, opt);
  std::size_t passed = 0, failed = 0;
  for (const SuiteResult& r : results) {
    for (const Assertion& as : r.assertions) {
      std::cout << (as.pass ? "PASS" : "FAIL") << " [" << r.name << "] "
                << as.name << ": " << format_double(as.value) << " "
                << as.relation << " " << format_double(as.bound) << "\n";
      (as.pass ? passed : failed) += 1;
    }
    std::cout << "suite " << r.name << ": "
              << (r.pass() ? "pass" : "FAIL") << " ("
              << r.assertions.size() << " assertions, "
              << format_double(r.seconds) << " s)\n";
  }
  std::cout << "total: " << passed << " passed, " << failed
            << " failed (resolution " << a.resolution << ", seed " << a.seed
            << ")\n";
  if (!a.out.empty()) emit(suite_report(results, opt), a.format, a.out);
  return failed == 0 ? 0 : 1;
}

struct ExperimentArgs {
  std::string kind;
  double p = 0.5;
  std::string family = "pow2_plus1";
  int k_min = 1, k_max = 0;
  std::string schedule = "thm422b";
  std::string phi = "constant";
  double phi_param = 1.0;
  std::string op = "";
  std::string norm = "weak";
  int resolution = 14;
  std::uint64_t n_max = 0;
  int samples = 12;
  std::uint64_t seed = 20200926;
  int m_min = 4, m_max = 10;
  bool halfnorm = false;
  std::string out, format = "csv";
};

Phi parse_phi(const std::string& name, double param) {
  if (name == "constant") return Phi::constant();
  if (name == "power") return Phi::power(param);
  if (name == "log_power") return Phi::log_power(param);
  throw std::invalid_argument("phi must be constant, power or log_power");
}

NormKind parse_norm(const std::string& name) {
  if (name == "weak") return NormKind::weak_lp;
  if (name == "lp") return NormKind::lp;
  if (name == "hp") return NormKind::hp;
  throw std::invalid_argument("norm must be weak, lp or hp");
}

int cmd_experiment(const ExperimentArgs& a) {
  int k_max = a.k_max > 0 ? a.k_max : a.resolution - 2;
  OperatorKind op;
  if (a.op == "partial-sum")
    op = OperatorKind::partial_sum;
  else if (a.op == "fejer" || a.op.empty())
    op = OperatorKind::fejer;
  else
    throw std::invalid_argument("operator must be partial-sum or fejer");
  Phi phi = parse_phi(a.phi, a.phi_param);

  ExperimentTable t;
  if (a.kind == "divergence") {
    LambdaSchedule sched = LambdaSchedule::parse(a.schedule, a.p, phi);
    t = divergence_experiment(a.p, OperatorConfig::named(a.family, a.k_min, k_max),
                              sched, op, parse_norm(a.norm), a.resolution);
  } else if (a.kind == "upper-bound") {
    t = upper_bound_experiment(a.p, op, a.resolution, a.samples, a.seed);
  } else if (a.kind == "norm-convergence") {
    LambdaSchedule sched = LambdaSchedule::parse(a.schedule, a.p, phi);
    t = norm_convergence_experiment(a.p,
                                    OperatorConfig::named(a.family, a.k_min, k_max),
                                    sched, op, a.resolution);
  } else if (a.kind == "strong-sum") {
    StrongSumSource src;
    if (a.halfnorm) {
      src.kind = StrongSumSource::Kind::halfnorm_atoms;
      src.m_min = a.m_min;
      src.m_max = a.m_max;
    } else {
      LambdaSchedule sched = LambdaSchedule::parse(a.schedule, a.p, phi);
      OperatorConfig fam = OperatorConfig::named(a.family, a.k_min, k_max);
      ExampleMartingale em =
          build_example_martingale(a.p, sched.filter(fam.indices), sched, a.resolution);
      src.f = em.f;
    }
    index_t n_max = a.n_max ? a.n_max : index_t{1} << (a.resolution - 1);
    t = strong_sum_experiment(a.p, op, src, n_max, a.resolution);
  } else {
    throw std::invalid_argument(
        "experiment kind must be divergence, upper-bound, norm-convergence or strong-sum");
  }
  write_table(t, a.out, a.format);
  return 0;
}

struct ReportArgs {
  std::vector<std::uint64_t> n_list;
  int resolution = 12;
  std::string out, format = "csv";
};

int cmd_report(const ReportArgs& a) {
  std::vector<index_t> ns(a.n_list.begin(), a.n_list.end());
  if (ns.empty()) ns = {1, 3, 5, 13, 21, 64, 85, 341};
  ExperimentTable t;
  t.name = "kernel_bounds";
  t.columns = {"n", "l1_norm", "variation", "lower_ok", "upper_ok", "max_ratio"};
  for (const KernelReport& r : kernel_bounds_report(ns, a.resolution))
    t.add_row({static_cast<double>(r.n), r.l1_norm,
               static_cast<double>(r.variation), r.lower_bound_ok ? 1.0 : 0.0,
               r.upper_bound_ok ? 1.0 : 0.0, r.max_ratio});
  t.metadata["resolution"] = std::to_string(a.resolution);
  write_table(t, a.out, a.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walsh-Fourier kernels, Hardy space quasi-norms and divergence "
               "experiments on the dyadic group"};
  app.require_subcommand(1);

  KernelArgs ka;
  CLI::App* kernel = app.add_subcommand("kernel", "evaluate a kernel on the cell grid");
  kernel->add_option("--kind", ka.kind, "dirichlet or fejer")
      ->check(CLI::IsMember({"dirichlet", "fejer"}));
  kernel->add_option("--n", ka.n, "kernel index")->required();
  kernel->add_option("--resolution", ka.resolution, "grid level N, cells = 2^N");
  kernel->add_option("--method", ka.method,
                     "dirichlet: direct|lemma1|recursive, fejer: direct|weighted|lemma3|closed");
  kernel->add_option("--out", ka.out, "output path (default stdout)");
  kernel->add_option("--format", ka.format)->check(CLI::IsMember({"csv", "json"}));

  LebesgueArgs la;
  CLI::App* leb = app.add_subcommand("lebesgue", "Lebesgue constants L(n) = ||D_n||_1");
  leb->add_option("--n", la.n, "single index");
  leb->add_option("--sweep-max", la.sweep_max, "table for n = 1..max");
  leb->add_option("--cesaro-max", la.cesaro_max,
                  "averaged statistics (1/(n log n)) sum_{k<=n} V(k) and L(k)");
  leb->add_option("--out", la.out);
  leb->add_option("--format", la.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("suite", va.suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(allowed));
  verify->add_option("--resolution", va.resolution);
  verify->add_option("--seed", va.seed);
  verify->add_option("--jobs", va.jobs, "suites run in parallel (only for 'all')");
  verify->add_option("--max-n", va.max_n, "override per-suite index caps");
  verify->add_option("--out", va.out, "also write the assertion table");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"csv", "json"}));

  ExperimentArgs ea;
  CLI::App* exp = app.add_subcommand("experiment", "martingale experiments");
  exp->add_option("kind", ea.kind, "divergence|upper-bound|norm-convergence|strong-sum")
      ->required()
      ->check(CLI::IsMember({"divergence", "upper-bound", "norm-convergence",
                             "strong-sum"}));
  exp->add_option("--p", ea.p, "quasi-norm exponent");
  exp->add_option("--family", ea.family, "pow2|pow2_plus1|pow2_plus_half");
  exp->add_option("--k-min", ea.k_min);
  exp->add_option("--k-max", ea.k_max, "default resolution - 2");
  exp->add_option("--schedule", ea.schedule, "coefficient rule, e.g. thm422b");
  exp->add_option("--phi", ea.phi, "constant|power|log_power");
  exp->add_option("--phi-param", ea.phi_param);
  exp->add_option("--operator", ea.op, "partial-sum|fejer");
  exp->add_option("--norm", ea.norm, "weak|lp|hp");
  exp->add_option("--resolution", ea.resolution);
  exp->add_option("--n-max", ea.n_max);
  exp->add_option("--samples", ea.samples);
  exp->add_option("--seed", ea.seed);
  exp->add_option("--m-min", ea.m_min);
  exp->add_option("--m-max", ea.m_max);
  exp->add_flag("--halfnorm", ea.halfnorm,
                "strong-sum source: the exponent-1/2 atoms f_m");
  exp->add_option("--out", ea.out);
  exp->add_option("--format", ea.format)->check(CLI::IsMember({"csv", "json"}));

  ReportArgs ra;
  CLI::App* report = app.add_subcommand("report", "kernel bound report");
  report->add_option("--n-list", ra.n_list, "indices to report")->delimiter(',');
  report->add_option("--resolution", ra.resolution);
  report->add_option("--out", ra.out);
  report->add_option("--format", ra.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(ka);
    if (leb->parsed()) return cmd_lebesgue(la);
    if (verify->parsed()) return cmd_verify(va);
    if (exp->parsed()) return cmd_experiment(ea);
    if (report->parsed()) return cmd_report(ra);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const resolution_error& e) {
    std::cerr << "resolution limit: " << e.what() << "\n";
    return 3;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
