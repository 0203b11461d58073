#ifndef FMEAN_MEANS_HPP
#define FMEAN_MEANS_HPP

#include <optional>
#include <span>
#include <vector>

#include "fmean/mean_function.hpp"

namespace fmean {

// A nonempty set of d-vectors, all of the same dimension.
struct PointSet {
  explicit PointSet(std::vector<std::vector<double>> pts);

  std::vector<std::vector<double>> points;
  std::size_t dim;
};

// Atoms of a discrete distribution on I, with optional positive weights.
// Probabilities must be nonnegative and sum to 1 within 1e-12; when weights
// are present, at least one atom must carry positive weighted mass.
class WeightedDiscreteDistribution {
 public:
  struct Atom {
    double value;
    double prob;
  };

  explicit WeightedDiscreteDistribution(std::vector<Atom> atoms);
  WeightedDiscreteDistribution(std::vector<Atom> atoms, std::vector<double> weights);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool has_weights() const { return weights_.has_value(); }
  double weight(std::size_t i) const { return weights_ ? (*weights_)[i] : 1.0; }

 private:
  std::vector<Atom> atoms_;
  std::optional<std::vector<double>> weights_;
};

// The f-distorted distance sqrt(sum_k (f(x^k) - f(y^k))^2). It is the
// Euclidean distance of the componentwise transformed points, hence a metric.
double f_distance(const MeanFunction& f, std::span<const double> x, std::span<const double> y);

// Componentwise f-mean of a point set: the unique minimizer over I^d of the
// summed squared f-distance to the points.
std::vector<double> f_mean_points(const MeanFunction& f, const PointSet& pts);

// f^{-1}( sum w_k f(x_k) / sum w_k ). Weights must be nonnegative with
// positive total.
double weighted_f_mean(const MeanFunction& f, std::span<const double> values,
                       std::span<const double> weights);

// f^{-1}( sum w(x_i) f(x_i) p_i / sum w(x_i) p_i ).
double weighted_distribution_f_mean(const MeanFunction& f, const WeightedDiscreteDistribution& dist);

}  // namespace fmean

#endif  // FMEAN_MEANS_HPP
