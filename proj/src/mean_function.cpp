#include "fmean/mean_function.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fmean/errors.hpp"

namespace fmean {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_param_count(const std::string& name, const std::vector<double>& params, std::size_t n) {
  if (params.size() != n) {
    std::ostringstream os;
    os << "mean function '" << name << "' takes " << n << " parameter(s), got " << params.size();
    throw validation_error(os.str());
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw validation_error("mean function parameter must be finite");
  }
}

}  // namespace

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::concave: return "concave";
    case Convexity::convex: return "convex";
    default: return "neither";
  }
}

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

MeanFunction::MeanFunction(Kind kind, std::string name, std::vector<double> params, double a,
                           Interval domain, Interval codomain, Convexity cx, bool closed_inverse)
    : kind_(kind),
      name_(std::move(name)),
      params_(std::move(params)),
      a_(a),
      domain_(domain),
      codomain_(codomain),
      convexity_(cx),
      closed_inverse_(closed_inverse) {}

MeanFunction MeanFunction::make(const std::string& name, const std::vector<double>& params) {
  const Interval reals = Interval::real_line();
  const Interval positives = Interval::positive_half_line();

  if (name == "identity") {
    require_param_count(name, params, 0);
    return MeanFunction(Kind::identity, name, {}, 0.0, reals, reals, Convexity::neither, true);
  }
  if (name == "power") {
    require_param_count(name, params, 1);
    const double a = params[0];
    if (a == 0.0) throw validation_error("power requires a nonzero exponent");
    Convexity cx;
    if (a < 1.0) cx = Convexity::concave;  // covers a < 0, where -x^a is concave
    else if (a > 1.0) cx = Convexity::convex;
    else cx = Convexity::neither;  // a == 1 is affine
    // For a < 0 the stored map is -x^a with codomain (-inf, 0).
    const Interval codomain = a > 0.0 ? positives : Interval(-kInf, 0.0);
    return MeanFunction(Kind::power, name, params, a, positives, codomain, cx, true);
  }
  if (name == "neg_inverse") {
    require_param_count(name, params, 0);
    return MeanFunction(Kind::neg_inverse, name, {}, 0.0, positives, Interval(-kInf, 0.0),
                        Convexity::concave, true);
  }
  if (name == "cara") {
    require_param_count(name, params, 1);
    const double a = params[0];
    if (a <= 0.0) throw validation_error("cara requires a > 0");
    return MeanFunction(Kind::cara, name, params, a, positives, Interval(0.0, 1.0),
                        Convexity::concave, true);
  }
  if (name == "exp") {
    require_param_count(name, params, 1);
    const double a = params[0];
    if (a == 0.0) throw validation_error("exp requires a nonzero rate");
    // For a < 0 the stored map is -e^{ax} with codomain (-inf, 0).
    const Interval codomain = a > 0.0 ? positives : Interval(-kInf, 0.0);
    const Convexity cx = a > 0.0 ? Convexity::convex : Convexity::concave;
    return MeanFunction(Kind::exp_rate, name, params, a, reals, codomain, cx, true);
  }
  if (name == "log") {
    require_param_count(name, params, 0);
    return MeanFunction(Kind::logarithm, name, {}, 0.0, positives, reals, Convexity::concave, true);
  }
  if (name == "sinh") {
    require_param_count(name, params, 0);
    return MeanFunction(Kind::hyperbolic_sine, name, {}, 0.0, reals, reals, Convexity::neither, true);
  }
  if (name == "normal_cdf") {
    require_param_count(name, params, 0);
    return MeanFunction(Kind::normal_cdf, name, {}, 0.0, reals, Interval(0.0, 1.0),
                        Convexity::neither, false);
  }
  throw validation_error("unknown mean function '" + name + "'");
}

double MeanFunction::eval_unchecked(double x) const {
  switch (kind_) {
    case Kind::identity: return x;
    case Kind::power: return a_ > 0.0 ? std::pow(x, a_) : -std::pow(x, a_);
    case Kind::neg_inverse: return -1.0 / x;
    case Kind::cara: return -std::expm1(-a_ * x);
    case Kind::exp_rate: return a_ > 0.0 ? std::exp(a_ * x) : -std::exp(a_ * x);
    case Kind::logarithm: return std::log(x);
    case Kind::hyperbolic_sine: return std::sinh(x);
    case Kind::normal_cdf: return standard_normal_cdf(x);
  }
  return 0.0;  // unreachable
}

double MeanFunction::value(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream os;
    os << label() << ": argument " << x << " outside domain " << domain_.str();
    throw validation_error(os.str());
  }
  return eval_unchecked(x);
}

double MeanFunction::invert(double y) const {
  if (!codomain_.contains(y)) {
    const bool boundary = codomain_.on_open_boundary(y);
    std::ostringstream os;
    os << label() << ": value " << y << (boundary ? " on the boundary of" : " outside")
       << " codomain " << codomain_.str();
    throw out_of_codomain(os.str(), boundary);
  }
  switch (kind_) {
    case Kind::identity: return y;
    case Kind::power: return a_ > 0.0 ? std::pow(y, 1.0 / a_) : std::pow(-y, 1.0 / a_);
    case Kind::neg_inverse: return -1.0 / y;
    case Kind::cara: return -std::log1p(-y) / a_;
    case Kind::exp_rate: return a_ > 0.0 ? std::log(y) / a_ : std::log(-y) / a_;
    case Kind::logarithm: return std::exp(y);
    case Kind::hyperbolic_sine: return std::asinh(y);
    case Kind::normal_cdf: return bisect_invert(y);
  }
  return 0.0;  // unreachable
}

// Bracketed monotone bisection, refined until the bracket width drops below
// 1e-13. The initial bracket [-10, 10] is doubled outward as needed.
double MeanFunction::bisect_invert(double y) const {
  double lo = -10.0, hi = 10.0;
  int guard = 0;
  while (eval_unchecked(lo) >= y && guard++ < 64) lo -= (hi - lo);
  while (eval_unchecked(hi) <= y && guard++ < 64) hi += (hi - lo);
  if (guard >= 64) {
    throw numeric_error(label() + ": failed to bracket inverse");
  }
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket no longer splittable
    if (eval_unchecked(mid) < y) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string MeanFunction::label() const {
  if (params_.empty()) return name_;
  std::ostringstream os;
  os << name_ << "(a=" << params_[0] << ")";
  return os.str();
}

const std::vector<std::string>& mean_function_names() {
  static const std::vector<std::string> names = {
      "identity", "power", "neg_inverse", "cara", "exp", "log", "sinh", "normal_cdf"};
  return names;
}

}  // namespace fmean
