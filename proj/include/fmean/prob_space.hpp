#ifndef FMEAN_PROB_SPACE_HPP
#define FMEAN_PROB_SPACE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fmean/interval.hpp"

namespace fmean {

// Finite probability space: outcome probabilities, nonnegative, summing to 1
// within 1e-12. Drift beyond the tolerance is an error, never renormalized.
class FiniteProbSpace {
 public:
  explicit FiniteProbSpace(std::vector<double> probs);
  static FiniteProbSpace uniform(std::size_t n_outcomes);

  std::size_t n_outcomes() const { return probs_.size(); }
  double prob(std::size_t outcome) const { return probs_[outcome]; }
  const std::vector<double>& probs() const { return probs_; }

  double expectation(std::span<const double> values) const;

 private:
  std::vector<double> probs_;
};

// A partition of the outcomes into disjoint nonempty blocks covering all of
// them. On a finite space this is exactly a sub-sigma-algebra.
class Partition {
 public:
  Partition(std::size_t n_outcomes, std::vector<std::vector<std::size_t>> blocks);
  static Partition trivial(std::size_t n_outcomes);
  static Partition singletons(std::size_t n_outcomes);

  std::size_t n_outcomes() const { return n_outcomes_; }
  std::size_t n_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t outcome) const { return block_of_[outcome]; }

 private:
  std::size_t n_outcomes_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// A real value per outcome, all inside the tagged interval.
struct RandomVariable {
  RandomVariable(std::vector<double> values, Interval domain_tag);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t outcome) const { return values[outcome]; }

  std::vector<double> values;
  Interval domain_tag;
};

// True iff every block of `fine` is contained in some block of `coarse`,
// i.e. `fine` generates the larger sigma-algebra.
bool refine_check(const Partition& coarse, const Partition& fine);

// True iff X is constant on every block of G.
bool is_measurable(const RandomVariable& X, const Partition& G);

}  // namespace fmean

#endif  // FMEAN_PROB_SPACE_HPP
