#ifndef FMEAN_STATS_HPP
#define FMEAN_STATS_HPP

#include <array>
#include <span>
#include <vector>

#include "fmean/mean_function.hpp"
#include "fmean/sampling.hpp"

namespace fmean {

// f^{-1}( (1/N) sum f(X_k) ), the empirical f-mean of a sample.
double empirical_f_mean(const MeanFunction& f, std::span<const double> sample);

struct UnbiasednessPair {
  double lhs;  // E_f[ m_hat_N ] by exact enumeration over all N-tuples
  double rhs;  // E_f[X]
};

// f-unbiasedness of the empirical f-mean, verified by exact enumeration with
// product weights over all |Omega|^N sample tuples (capped at 10^6 tuples).
// Note this is E_f of the estimator, not its classical expectation.
UnbiasednessPair f_unbiasedness_check(const MeanFunction& f, const FiniteProbSpace& space,
                                      const RandomVariable& X, std::size_t N);

struct LlnRow {
  std::size_t n;
  double error;  // |m_hat_n - E_f[X]|
};

struct LlnReport {
  std::vector<LlnRow> rows;
  double mu_f;     // E_f[X]
  double sigma_f;  // sd of f(X)
  double bound;    // delta-method tolerance 4 sigma_f / (|f'(mu_f)| sqrt(n_max))
  bool passed;     // final error within the bound
};

// Running empirical f-mean along one seeded i.i.d. path, reported at the given
// increasing checkpoints. The final checkpoint must come in under the
// delta-method bound, with f' estimated by central difference. A degenerate
// source (sigma_f = 0) short-circuits to exact zeros.
LlnReport lln_diagnostic(const MeanFunction& f, const SamplerSpec& spec,
                         std::span<const std::size_t> checkpoints);

struct CltReport {
  std::size_t n_replicates;
  std::size_t n_per_replicate;
  double mu_f;          // E_f[X]
  double sigma_f;       // sd of f(X); must be positive
  double ks_statistic;  // one-sample KS distance to N(0,1)
  double threshold;     // asymptotic 1% critical value 1.63 / sqrt(n_replicates)
  // Quantiles of the standardized sums at
  // {0, 0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 1}.
  std::array<double, 9> quantiles;
  bool passed;
};

// Standardized replicate sums Z = sum(f(X_k) - E[f(X)]) / (sigma_f sqrt(n)),
// tested against N(0,1) with the one-sample Kolmogorov-Smirnov statistic.
// Sums are centered on the J-scale at E[f(X)] = f(mu_f), which is what makes
// Z asymptotically standard normal. Each replicate draws from its own stream.
CltReport clt_check(const MeanFunction& f, const SamplerSpec& spec, std::size_t n_replicates,
                    std::size_t n_per_replicate);

// sup_z |F_hat(z) - Phi(z)| for the empirical CDF of the samples.
double ks_statistic_vs_normal(std::vector<double> samples);

}  // namespace fmean

#endif  // FMEAN_STATS_HPP
