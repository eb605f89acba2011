#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace hdc {

// Philox4x32-10 counter-based generator. Purely a function of (key, counter),
// so any partition of the sample index space across workers yields the same
// stream; there is no generator state to carry or hand off.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const std::array<std::uint32_t, 4> next = {
          static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
          static_cast<std::uint32_t>(p1),
          static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
          static_cast<std::uint32_t>(p0)};
      ctr = next;
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// Addressable random words: word (i, slot) is a pure function of the seed,
// the 64-bit sample index and a small per-sample slot, so an operation that
// needs m uniforms per sample reads slots 0..m-1 of its index.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Two independent 64-bit words per (index, slot-pair) block.
  std::array<std::uint64_t, 2> words(std::uint64_t index,
                                     std::uint32_t pair_slot) const {
    const auto out = Philox4x32::block(
        {static_cast<std::uint32_t>(index),
         static_cast<std::uint32_t>(index >> 32), pair_slot, 0u},
        {static_cast<std::uint32_t>(seed_),
         static_cast<std::uint32_t>(seed_ >> 32)});
    return {out[0] | (static_cast<std::uint64_t>(out[1]) << 32),
            out[2] | (static_cast<std::uint64_t>(out[3]) << 32)};
  }

  static double to_unit(std::uint64_t w) {  // [0, 1), 53 random bits
    return static_cast<double>(w >> 11) * 0x1.0p-53;
  }

  // Fills out[0..count) with uniforms from consecutive slots of `index`.
  void fill_uniform(std::uint64_t index, double* out, std::size_t count,
                    std::uint32_t base_pair = 0) const {
    for (std::size_t i = 0; i < count; i += 2) {
      const auto w = words(index, base_pair + static_cast<std::uint32_t>(i / 2));
      out[i] = to_unit(w[0]);
      if (i + 1 < count) out[i + 1] = to_unit(w[1]);
    }
  }

 private:
  std::uint64_t seed_;
};

// Box-Muller pair from two uniforms; u1 is pushed away from 0 by using 1-u.
inline std::array<double, 2> gaussian_pair(double u1, double u2) {
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

}  // namespace hdc
