#include "fmean/sampling.hpp"

#include <algorithm>

#include "fmean/errors.hpp"
#include "fmean/philox.hpp"

namespace fmean {

DiscreteSampler::DiscreteSampler(const FiniteProbSpace& space, std::uint64_t seed) : seed_(seed) {
  cumulative_.resize(space.n_outcomes());
  double acc = 0.0;
  for (std::size_t i = 0; i < space.n_outcomes(); ++i) {
    acc += space.prob(i);
    cumulative_[i] = acc;
  }
  cumulative_.back() = 1.0;  // a uniform in [0,1) always lands
}

std::size_t DiscreteSampler::draw_index(std::uint64_t stream, std::uint64_t index) const {
  const double u = philox_uniform(seed_, stream, index);
  return static_cast<std::size_t>(
      std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

std::vector<double> sample(const SamplerSpec& spec) {
  if (spec.n == 0) throw validation_error("sampler requires n >= 1");
  if (spec.variable.size() != spec.space.n_outcomes()) {
    throw validation_error("sampler variable and space sizes differ");
  }
  const DiscreteSampler sampler(spec.space, spec.seed);
  std::vector<double> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    out[i] = spec.variable[sampler.draw_index(0, i)];
  }
  return out;
}

}  // namespace fmean
