#ifndef FMEAN_PHILOX_HPP
#define FMEAN_PHILOX_HPP

#include <array>
#include <cstdint>

namespace fmean {

// Philox4x32-10 counter-based generator.
//   Salmon, Moraes, Dror, Shaw. "Parallel random numbers: as easy as 1, 2, 3."
//   SC 2011. https://www.thesalmons.org/john/random123/papers/random123sc11.pdf
//
// A 128-bit counter and a 64-bit key map to four 32-bit words through ten
// rounds with a bumped key. Draws are addressed as (seed, stream, index):
// the key carries the seed, the counter carries stream and index. Distinct
// triples give independent words, so any partition of the index space across
// workers reproduces exactly the same numbers.
namespace philox {

inline constexpr std::uint32_t kW32A = 0x9E3779B9u;
inline constexpr std::uint32_t kW32B = 0xBB67AE85u;
inline constexpr std::uint32_t kM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kM4x32B = 0xCD9E8D57u;

inline void one_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kM4x32A) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kM4x32B) * ctr[2];
  const std::array<std::uint32_t, 4> next = {
      static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
      static_cast<std::uint32_t>(p1),
      static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
      static_cast<std::uint32_t>(p0)};
  ctr = next;
}

inline std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                          std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW32A;
      key[1] += kW32B;
    }
    one_round(ctr, key);
  }
  return ctr;
}

}  // namespace philox

inline std::uint64_t philox_word64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                            static_cast<std::uint32_t>(seed >> 32)};
  const auto words = philox::block(ctr, key);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

// Uniform draw in [0, 1) with 53 random bits.
inline double philox_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return static_cast<double>(philox_word64(seed, stream, index) >> 11) * 0x1.0p-53;
}

}  // namespace fmean

#endif  // FMEAN_PHILOX_HPP
