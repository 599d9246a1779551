#pragma once

// Counter-based randomness (Philox4x32-10). Every variate in the project is
// addressed by the tuple (master seed, sample index, role, draw index), so any
// single Monte Carlo sample can be replayed bit-exactly regardless of worker
// count or scheduling, and workers share no mutable state.

#include <array>
#include <cstdint>

namespace fpt {

// One keyed block of the Philox4x32-10 bijection.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 2>& key,
                                        std::array<std::uint32_t, 4> ctr);

// Inverse standard-normal CDF (Wichura-style rational minimax, full double
// accuracy). p must lie in (0, 1).
double inverse_normal_cdf(double p);

// Independent sub-stream tags. Each (sample, role) pair owns an unbounded
// sequence of draws indexed from 0.
enum class Role : std::uint32_t {
  GridCount = 0,
  GridTimes = 1,
  Euler = 2,
  ExitMain = 3,
  ExitCorrection = 4,
  Terminal = 5,
  Bridge = 6,
  Baseline = 7,
  EulerAux = 8,
};

class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t sample_index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        lo_(static_cast<std::uint32_t>(sample_index)),
        hi_(static_cast<std::uint32_t>(sample_index >> 32)) {}

  // Uniform on (0, 1), never returning the endpoints.
  double uniform(Role role, std::uint32_t draw) const;

  // Standard normal via inverse CDF: exactly one draw consumed per variate.
  double normal(Role role, std::uint32_t draw) const;

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t lo_, hi_;
};

}  // namespace fpt
