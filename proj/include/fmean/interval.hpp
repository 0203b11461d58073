#ifndef FMEAN_INTERVAL_HPP
#define FMEAN_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "fmean/errors.hpp"

namespace fmean {

// An interval of the extended real line. Endpoints may be infinite; finite
// endpoints are open or closed per the flags. Membership is decidable for
// every finite real.
class Interval {
 public:
  Interval(double lo, double hi, bool lo_open = true, bool hi_open = true)
      : lo_(lo), hi_(hi), lo_open_(lo_open), hi_open_(hi_open) {
    if (std::isnan(lo) || std::isnan(hi)) {
      throw validation_error("interval endpoints must not be NaN");
    }
    if (!(lo < hi)) {
      throw validation_error("interval requires lo < hi");
    }
  }

  static Interval real_line() {
    const double inf = std::numeric_limits<double>::infinity();
    return Interval(-inf, inf);
  }

  static Interval open(double lo, double hi) { return Interval(lo, hi, true, true); }

  static Interval positive_half_line() {
    return Interval(0.0, std::numeric_limits<double>::infinity());
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  bool contains(double x) const {
    if (std::isnan(x)) return false;
    const bool above = lo_open_ ? (x > lo_) : (x >= lo_);
    const bool below = hi_open_ ? (x < hi_) : (x <= hi_);
    return above && below;
  }

  // True when y coincides with a finite endpoint excluded by openness.
  bool on_open_boundary(double y) const {
    if (lo_open_ && std::isfinite(lo_) && y == lo_) return true;
    if (hi_open_ && std::isfinite(hi_) && y == hi_) return true;
    return false;
  }

  std::string str() const {
    std::ostringstream os;
    os << (lo_open_ ? '(' : '[');
    if (std::isinf(lo_)) os << "-inf"; else os << lo_;
    os << ", ";
    if (std::isinf(hi_)) os << "inf"; else os << hi_;
    os << (hi_open_ ? ')' : ']');
    return os.str();
  }

 private:
  double lo_, hi_;
  bool lo_open_, hi_open_;
};

}  // namespace fmean

#endif  // FMEAN_INTERVAL_HPP
