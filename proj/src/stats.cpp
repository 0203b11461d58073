#include "fmean/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fmean/conditional.hpp"
#include "fmean/errors.hpp"

namespace fmean {

namespace {

std::vector<double> f_values(const MeanFunction& f, const RandomVariable& X) {
  std::vector<double> out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) out[i] = f.value(X[i]);
  return out;
}

// Central-difference derivative, shrinking the step until both stencil points
// lie inside the (open) domain. f is strictly increasing, so the result is
// positive wherever the stencil is sane.
double derivative_at(const MeanFunction& f, double x) {
  double h = 1e-6 * std::max(1.0, std::fabs(x));
  for (int i = 0; i < 60 && !(f.domain().contains(x - h) && f.domain().contains(x + h)); ++i)
    h *= 0.5;
  if (!(f.domain().contains(x - h) && f.domain().contains(x + h)))
    throw numeric_error("derivative stencil for " + f.label() + " left the domain at x=" +
                        std::to_string(x));
  return (f.value(x + h) - f.value(x - h)) / (2.0 * h);
}

}  // namespace

double empirical_f_mean(const MeanFunction& f, std::span<const double> sample) {
  if (sample.empty()) throw validation_error("empirical f-mean of an empty sample");
  double acc = 0.0;
  for (double x : sample) acc += f.value(x);
  return f.invert(acc / static_cast<double>(sample.size()));
}

UnbiasednessPair f_unbiasedness_check(const MeanFunction& f, const FiniteProbSpace& space,
                                      const RandomVariable& X, std::size_t N) {
  if (N == 0) throw validation_error("f-unbiasedness check needs a sample size of at least 1");
  if (X.size() != space.n_outcomes())
    throw validation_error("variable and space sizes disagree");
  const std::size_t n = space.n_outcomes();
  double tuples = 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    tuples *= static_cast<double>(n);
    if (tuples > 1e6)
      throw validation_error("f-unbiasedness enumeration exceeds 10^6 tuples");
  }

  const std::vector<double> fv = f_values(f, X);

  // Odometer over all N-tuples of outcomes; each tuple contributes its product
  // probability times f of the empirical f-mean it induces.
  std::vector<std::size_t> idx(N, 0);
  double acc = 0.0;
  while (true) {
    double w = 1.0;
    double s = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
      w *= space.prob(idx[k]);
      s += fv[idx[k]];
    }
    if (w > 0.0) acc += w * f.value(f.invert(s / static_cast<double>(N)));
    std::size_t pos = 0;
    while (pos < N && ++idx[pos] == n) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == N) break;
  }

  return {f.invert(acc), f_expectation(f, space, X)};
}

LlnReport lln_diagnostic(const MeanFunction& f, const SamplerSpec& spec,
                         std::span<const std::size_t> checkpoints) {
  if (checkpoints.empty()) throw validation_error("LLN diagnostic needs checkpoints");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0) throw validation_error("LLN checkpoints must be positive");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw validation_error("LLN checkpoints must be strictly increasing");
  }
  if (checkpoints.back() > spec.n)
    throw validation_error("LLN checkpoints exceed the sample size");

  LlnReport report;
  report.mu_f = f_expectation(f, spec.space, spec.variable);
  report.sigma_f = std::sqrt(f_variance(f, spec.space, spec.variable));

  const std::size_t n_max = checkpoints.back();
  if (report.sigma_f == 0.0) {
    // Degenerate source: every draw has the same f-value, the running f-mean
    // is identically mu_f and no sampling is needed.
    for (std::size_t n : checkpoints) report.rows.push_back({n, 0.0});
    report.bound = 0.0;
    report.passed = true;
    return report;
  }

  report.bound = 4.0 * report.sigma_f /
                 (derivative_at(f, report.mu_f) * std::sqrt(static_cast<double>(n_max)));

  const std::vector<double> fv = f_values(f, spec.variable);
  DiscreteSampler sampler(spec.space, spec.seed);
  double sum = 0.0;
  std::size_t next = 0;
  for (std::size_t k = 0; k < n_max; ++k) {
    sum += fv[sampler.draw_index(0, k)];
    if (k + 1 == checkpoints[next]) {
      const double m = f.invert(sum / static_cast<double>(k + 1));
      report.rows.push_back({k + 1, std::fabs(m - report.mu_f)});
      ++next;
    }
  }
  report.passed = report.rows.back().error <= report.bound;
  return report;
}

CltReport clt_check(const MeanFunction& f, const SamplerSpec& spec, std::size_t n_replicates,
                    std::size_t n_per_replicate) {
  if (n_replicates < 2) throw validation_error("CLT check needs at least 2 replicates");
  if (n_per_replicate == 0) throw validation_error("CLT check needs a positive replicate size");

  CltReport report;
  report.n_replicates = n_replicates;
  report.n_per_replicate = n_per_replicate;
  report.mu_f = f_expectation(f, spec.space, spec.variable);
  report.sigma_f = std::sqrt(f_variance(f, spec.space, spec.variable));
  if (report.sigma_f == 0.0)
    throw validation_error("CLT check needs a non-degenerate f(X)");

  const std::vector<double> fv = f_values(f, spec.variable);
  const double mu_j = f.value(report.mu_f);  // E[f(X)], the centering constant
  const double scale = report.sigma_f * std::sqrt(static_cast<double>(n_per_replicate));

  // Replicate r draws from stream r, so replicates are independent and any
  // worker partitioning of r would reproduce the same values.
  DiscreteSampler sampler(spec.space, spec.seed);
  std::vector<double> z(n_replicates);
  for (std::size_t r = 0; r < n_replicates; ++r) {
    double s = 0.0;
    for (std::size_t k = 0; k < n_per_replicate; ++k)
      s += fv[sampler.draw_index(r, k)] - mu_j;
    z[r] = s / scale;
  }

  std::vector<double> sorted = z;
  std::sort(sorted.begin(), sorted.end());
  static constexpr double kProbs[9] = {0.0, 0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99, 1.0};
  for (std::size_t q = 0; q < 9; ++q) {
    const double pos = kProbs[q] * static_cast<double>(n_replicates - 1);
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    report.quantiles[q] =
        i + 1 < n_replicates ? (1.0 - frac) * sorted[i] + frac * sorted[i + 1] : sorted[i];
  }

  report.ks_statistic = ks_statistic_vs_normal(std::move(z));
  report.threshold = 1.63 / std::sqrt(static_cast<double>(n_replicates));
  report.passed = report.ks_statistic <= report.threshold;
  return report;
}

double ks_statistic_vs_normal(std::vector<double> samples) {
  if (samples.empty()) throw validation_error("KS statistic of an empty sample");
  std::sort(samples.begin(), samples.end());
  const auto n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double c = standard_normal_cdf(samples[i]);
    d = std::max(d, std::max(c - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - c));
  }
  return d;
}

}  // namespace fmean
