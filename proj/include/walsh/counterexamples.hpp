#pragma once

#include <string>
#include <vector>

#include "walsh/operators.hpp"
#include "walsh/table.hpp"
#include "walsh/types.hpp"

namespace walsh {

// Growth functions Phi used to damp divergence statistics. Restricted to a
// named family so experiment configs stay serializable.
struct Phi {
  enum class Family { constant, power, log_power };
  Family family = Family::constant;
  double param = 1.0;  // exponent beta for power, gamma for log_power

  double value(double n) const;
  std::string describe() const;

  static Phi constant();
  static Phi power(double beta);
  static Phi log_power(double gamma);
};

// Coefficient rules lambda_k for the two-level-atom martingales. Each kind
// is tied to one sharpness construction; gap() is the subsequence filter the
// construction needs and lambda() the coefficient at a surviving index.
struct LambdaSchedule {
  enum class Kind {
    thm411b,  // Phi^{1/2}(a) / 2^{d(a)(1/p-1)/2}
    thm412b,  // Phi^{1/2}(a) / V^{1/2}(a)
    thm422b,  // 2^{-(1/p-1) d(a)}
    thm423b,  // 1 / V(a)
    thm511b,  // Phi^{1/2}(a) / V(a)
    thm512b,  // Phi^{1/2}(a) / 2^{d(a)(1/p-2)/2}
    thm521b,  // 1 / V^2(a)
    thm522b,  // 2^{-(1/p-2) d(a)}
    thm531b,  // Phi^{1/2p}(2^{|a|+1}) / 2^{|a|(1/p-1)}
  };
  Kind kind = Kind::thm422b;
  double p = 0.5;
  Phi phi;

  double lambda(index_t alpha) const;
  // Greedy filter enforcing the construction's gap condition, e.g.
  // V^2(a_k) <= V(a_{k+1}) or 2 d(a_k) <= d(a_{k+1}).
  std::vector<index_t> filter(const std::vector<index_t>& candidates) const;
  std::string describe() const;

  static LambdaSchedule parse(const std::string& kind_name, double p, Phi phi);
};

// f = sum_k lambda_k a_k with a_k the scaled two-level difference atom at
// block |alpha_k|. Built functions carry their expected block spectrum.
struct ExampleMartingale {
  DyadicFunction f;
  SpectralVector spectrum;          // analyze(f), for convenience
  std::vector<index_t> alphas;      // included terms, |alpha|+1 <= N
  std::vector<double> lambdas;
  std::size_t truncated = 0;        // terms dropped by the resolution cap
  double p = 1.0;

  // Coefficient law: lambda_k 2^{(1/p-1)|alpha_k|} on block
  // [2^{|alpha_k|}, 2^{|alpha_k|+1}), zero elsewhere.
  SpectralVector expected_spectrum(int N) const;

  // Partial-sum law at j: inside block k the sum is
  // S_{2^{|a_k|}} f + lambda_k 2^{(1/p-1)|a_k|} w_{2^{|a_k|}} D_{j - 2^{|a_k|}},
  // between blocks it freezes at the last completed block boundary.
  DyadicFunction expected_partial_sum(index_t j, int N) const;

  // Tail bound driving the modulus law: (sum_{|a_k| >= n} |lambda_k|^p)^{1/p}.
  double tail_sum(int n) const;
};

ExampleMartingale build_example_martingale(double p,
                                           const std::vector<index_t>& alphas,
                                           const LambdaSchedule& schedule,
                                           int N);

// The exponent-1/2 atoms f_m = 2^m (D_{2^{m+1}} - D_{2^m}).
DyadicFunction halfnorm_atom(int m, int N);

enum class NormKind { weak_lp, lp, hp };

// Rows (k, m_k, ||T_{m_k} f / Phi(m_k)||, theoretical rate). The martingale
// is built from the schedule over the family filtered by the gap condition.
ExperimentTable divergence_experiment(double p, const OperatorConfig& family,
                                      const LambdaSchedule& schedule,
                                      OperatorKind kind, NormKind norm, int N);

// max over random samples and indices of ||T_n f||_{H_p} / (rate(n) ||f||_{H_p})
// per index row, where rate is the operator growth envelope
// (2^{d(n)(1/p-1)} for partial sums at p < 1, V(n) at p = 1,
//  V^2(n) at p = 1/2 for Fejer, 2^{d(n)(1/p-2)} for Fejer at p < 1/2).
ExperimentTable upper_bound_experiment(double p, OperatorKind kind, int N,
                                       int samples, std::uint64_t seed);

// Rows (k, m_k, ||T_{m_k} f - f||_{H_p}, rate(m_k) * omega_{H_p}(2^{-low}, f)).
ExperimentTable norm_convergence_experiment(double p, const OperatorConfig& family,
                                            const LambdaSchedule& schedule,
                                            OperatorKind kind, int N);

// Strong summability statistics.
//   fejer_hardy: rows (n, (1/log^{[1/2+p]} n) sum_{m<=n} ||sigma_m f||_{H_p}^p / m^{2-2p})
//   block_average: rows (m, (1/2^{m+1}) sum_{k=2^m+1}^{2^{m+1}-1} ||sigma_k f_m||_{1/2}^{1/2})
struct StrongSumSource {
  enum class Kind { given_function, halfnorm_atoms };
  Kind kind = Kind::given_function;
  DyadicFunction f;       // given_function
  int m_min = 4, m_max = 10;  // halfnorm_atoms
};

ExperimentTable strong_sum_experiment(double p, OperatorKind kind,
                                      const StrongSumSource& source,
                                      index_t n_max, int N);

// Incremental sweep core: hp-norm (or other norm) of sigma_m f for every
// m in [1, n_max], one O(2^N) update per step.
std::vector<double> fejer_norm_sweep(const DyadicFunction& f, index_t n_max,
                                     double p, NormKind norm);

// Same sweep for partial sums S_m f.
std::vector<double> partial_sum_norm_sweep(const DyadicFunction& f, index_t n_max,
                                           double p, NormKind norm);

}  // namespace walsh
