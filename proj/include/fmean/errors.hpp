#ifndef FMEAN_ERRORS_HPP
#define FMEAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fmean {

// Invalid construction or a violated precondition. The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure on structurally valid input. The CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Inversion target outside the codomain. at_boundary() distinguishes a value
// sitting exactly on an excluded endpoint from one strictly outside the closure.
class out_of_codomain : public numeric_error {
 public:
  out_of_codomain(const std::string& what, bool at_boundary)
      : numeric_error(what), at_boundary_(at_boundary) {}
  bool at_boundary() const { return at_boundary_; }

 private:
  bool at_boundary_;
};

}  // namespace fmean

#endif  // FMEAN_ERRORS_HPP
