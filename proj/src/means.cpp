#include "fmean/means.hpp"

#include <cmath>
#include <sstream>

#include "fmean/errors.hpp"

namespace fmean {

PointSet::PointSet(std::vector<std::vector<double>> pts) : points(std::move(pts)), dim(0) {
  if (points.empty()) throw validation_error("point set must be nonempty");
  dim = points.front().size();
  if (dim == 0) throw validation_error("points must have dimension >= 1");
  for (const auto& p : points) {
    if (p.size() != dim) throw validation_error("points must share one dimension");
  }
}

WeightedDiscreteDistribution::WeightedDiscreteDistribution(std::vector<Atom> atoms)
    : WeightedDiscreteDistribution(std::move(atoms), {}) {}

WeightedDiscreteDistribution::WeightedDiscreteDistribution(std::vector<Atom> atoms,
                                                           std::vector<double> weights)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw validation_error("distribution must have at least one atom");
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!std::isfinite(a.value)) throw validation_error("atom values must be finite");
    if (!(a.prob >= 0.0)) throw validation_error("atom probabilities must be nonnegative");
    total += a.prob;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "atom probabilities sum to " << total << ", expected 1 within 1e-12";
    throw validation_error(os.str());
  }
  if (!weights.empty()) {
    if (weights.size() != atoms_.size()) {
      throw validation_error("weights and atoms must have equal length");
    }
    double mass = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!(weights[i] >= 0.0)) throw validation_error("weights must be nonnegative");
      mass += weights[i] * atoms_[i].prob;
    }
    if (!(mass > 0.0)) throw validation_error("weighted mass must be positive");
    weights_ = std::move(weights);
  }
}

double f_distance(const MeanFunction& f, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw validation_error("f_distance requires equal dimensions");
  if (x.empty()) throw validation_error("f_distance requires dimension >= 1");
  double sq = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = f.value(x[k]) - f.value(y[k]);
    sq += d * d;
  }
  return std::sqrt(sq);
}

std::vector<double> f_mean_points(const MeanFunction& f, const PointSet& pts) {
  const std::size_t n = pts.points.size();
  std::vector<double> mean(pts.dim);
  for (std::size_t k = 0; k < pts.dim; ++k) {
    double acc = 0.0;
    for (const auto& p : pts.points) acc += f.value(p[k]);
    mean[k] = f.invert(acc / static_cast<double>(n));
  }
  return mean;
}

double weighted_f_mean(const MeanFunction& f, std::span<const double> values,
                       std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw validation_error("values and weights must have equal length");
  }
  if (values.empty()) throw validation_error("weighted mean of an empty collection");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(weights[k] >= 0.0)) throw validation_error("weights must be nonnegative");
    num += weights[k] * f.value(values[k]);
    den += weights[k];
  }
  if (!(den > 0.0)) throw validation_error("weights must have positive total");
  return f.invert(num / den);
}

double weighted_distribution_f_mean(const MeanFunction& f, const WeightedDiscreteDistribution& dist) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < dist.atoms().size(); ++i) {
    const auto& a = dist.atoms()[i];
    const double w = dist.weight(i);
    num += w * f.value(a.value) * a.prob;
    den += w * a.prob;
  }
  if (!(den > 0.0)) throw validation_error("weighted probability mass must be positive");
  return f.invert(num / den);
}

}  // namespace fmean
