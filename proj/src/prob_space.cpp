#include "fmean/prob_space.hpp"

#include <cmath>
#include <sstream>

#include "fmean/errors.hpp"

namespace fmean {

FiniteProbSpace::FiniteProbSpace(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw validation_error("probability space needs at least one outcome");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw validation_error("outcome probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "outcome probabilities sum to " << total << ", expected 1 within 1e-12";
    throw validation_error(os.str());
  }
}

FiniteProbSpace FiniteProbSpace::uniform(std::size_t n_outcomes) {
  if (n_outcomes == 0) throw validation_error("probability space needs at least one outcome");
  return FiniteProbSpace(std::vector<double>(n_outcomes, 1.0 / static_cast<double>(n_outcomes)));
}

double FiniteProbSpace::expectation(std::span<const double> values) const {
  if (values.size() != probs_.size()) {
    throw validation_error("expectation: value count does not match outcome count");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) acc += probs_[i] * values[i];
  return acc;
}

Partition::Partition(std::size_t n_outcomes, std::vector<std::vector<std::size_t>> blocks)
    : n_outcomes_(n_outcomes), blocks_(std::move(blocks)) {
  if (n_outcomes_ == 0) throw validation_error("partition over an empty outcome set");
  block_of_.assign(n_outcomes_, SIZE_MAX);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw validation_error("partition blocks must be nonempty");
    for (std::size_t outcome : blocks_[b]) {
      if (outcome >= n_outcomes_) {
        throw validation_error("partition block references an outcome out of range");
      }
      if (block_of_[outcome] != SIZE_MAX) {
        throw validation_error("partition blocks must be disjoint");
      }
      block_of_[outcome] = b;
    }
  }
  for (std::size_t i = 0; i < n_outcomes_; ++i) {
    if (block_of_[i] == SIZE_MAX) throw validation_error("partition blocks must cover all outcomes");
  }
}

Partition Partition::trivial(std::size_t n_outcomes) {
  std::vector<std::size_t> all(n_outcomes);
  for (std::size_t i = 0; i < n_outcomes; ++i) all[i] = i;
  return Partition(n_outcomes, {all});
}

Partition Partition::singletons(std::size_t n_outcomes) {
  std::vector<std::vector<std::size_t>> blocks(n_outcomes);
  for (std::size_t i = 0; i < n_outcomes; ++i) blocks[i] = {i};
  return Partition(n_outcomes, std::move(blocks));
}

RandomVariable::RandomVariable(std::vector<double> vals, Interval tag)
    : values(std::move(vals)), domain_tag(tag) {
  if (values.empty()) throw validation_error("random variable needs at least one outcome");
  for (double v : values) {
    if (!domain_tag.contains(v)) {
      std::ostringstream os;
      os << "random variable value " << v << " outside " << domain_tag.str();
      throw validation_error(os.str());
    }
  }
}

bool refine_check(const Partition& coarse, const Partition& fine) {
  if (coarse.n_outcomes() != fine.n_outcomes()) {
    throw validation_error("refine_check: partitions over different outcome counts");
  }
  for (const auto& block : fine.blocks()) {
    const std::size_t host = coarse.block_of(block.front());
    for (std::size_t outcome : block) {
      if (coarse.block_of(outcome) != host) return false;
    }
  }
  return true;
}

bool is_measurable(const RandomVariable& X, const Partition& G) {
  if (X.size() != G.n_outcomes()) {
    throw validation_error("is_measurable: variable and partition sizes differ");
  }
  for (const auto& block : G.blocks()) {
    const double head = X[block.front()];
    for (std::size_t outcome : block) {
      if (X[outcome] != head) return false;
    }
  }
  return true;
}

}  // namespace fmean
