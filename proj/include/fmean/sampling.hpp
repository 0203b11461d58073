#ifndef FMEAN_SAMPLING_HPP
#define FMEAN_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "fmean/prob_space.hpp"

namespace fmean {

// i.i.d. draws of one random variable: the source law, a seed, and a size.
struct SamplerSpec {
  FiniteProbSpace space;
  RandomVariable variable;
  std::uint64_t seed;
  std::size_t n;
};

// Inverse-CDF sampling of a finite distribution driven by Philox uniforms.
// draw(stream, index) is a pure function of (seed, stream, index), so
// replicates and workers can address disjoint streams independently.
class DiscreteSampler {
 public:
  DiscreteSampler(const FiniteProbSpace& space, std::uint64_t seed);

  std::size_t draw_index(std::uint64_t stream, std::uint64_t index) const;

 private:
  std::vector<double> cumulative_;
  std::uint64_t seed_;
};

// spec.n i.i.d. draws of the variable under the space's law; bit-reproducible
// for a fixed seed.
std::vector<double> sample(const SamplerSpec& spec);

}  // namespace fmean

#endif  // FMEAN_SAMPLING_HPP
