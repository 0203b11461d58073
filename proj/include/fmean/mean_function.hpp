#ifndef FMEAN_MEAN_FUNCTION_HPP
#define FMEAN_MEAN_FUNCTION_HPP

#include <string>
#include <vector>

#include "fmean/interval.hpp"

namespace fmean {

enum class Convexity { concave, convex, neither };

std::string to_string(Convexity c);

// A strictly increasing continuous map f: I -> J from the built-in catalog,
// together with its inverse f^{-1}: J -> I.
//
// Names accepted by make():
//   identity                 f(x) = x                on R
//   power      (a != 0)      f(x) = x^a              on (0, inf)
//   neg_inverse               f(x) = -1/x             on (0, inf)
//   cara       (a > 0)       f(x) = 1 - e^{-ax}      on (0, inf)
//   exp        (a != 0)      f(x) = e^{ax}           on R
//   log                      f(x) = ln x             on (0, inf)
//   sinh                     f(x) = sinh x           on R
//   normal_cdf               f(x) = Phi(x)           on R
//
// Entries whose textbook form is decreasing (power and exp with a < 0) are
// stored negated, so every catalog map is strictly increasing; negation is an
// order-reversing affine change that leaves the induced means unchanged.
//
// All entries carry a closed-form inverse except normal_cdf, whose quantile is
// computed by bracketed bisection to an interval width of 1e-13.
class MeanFunction {
 public:
  static MeanFunction make(const std::string& name, const std::vector<double>& params = {});

  double value(double x) const;   // f(x); x must lie in domain()
  double invert(double y) const;  // f^{-1}(y); y must lie in codomain()

  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }
  const Interval& domain() const { return domain_; }
  const Interval& codomain() const { return codomain_; }
  Convexity convexity() const { return convexity_; }
  bool has_closed_inverse() const { return closed_inverse_; }
  std::string label() const;  // e.g. "power(a=0.5)"

 private:
  enum class Kind { identity, power, neg_inverse, cara, exp_rate, logarithm, hyperbolic_sine, normal_cdf };

  MeanFunction(Kind kind, std::string name, std::vector<double> params, double a,
               Interval domain, Interval codomain, Convexity cx, bool closed_inverse);

  double eval_unchecked(double x) const;
  double bisect_invert(double y) const;

  Kind kind_;
  std::string name_;
  std::vector<double> params_;
  double a_;  // parameter when the entry takes one
  Interval domain_;
  Interval codomain_;
  Convexity convexity_;
  bool closed_inverse_;
};

// Phi, the N(0,1) cumulative distribution function, evaluated through erfc.
double standard_normal_cdf(double x);

// The names make() accepts, in catalog order.
const std::vector<std::string>& mean_function_names();

}  // namespace fmean

#endif  // FMEAN_MEAN_FUNCTION_HPP
