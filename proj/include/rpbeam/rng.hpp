// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_RNG_HPP_
#define RPBEAM_RNG_HPP_

#include <cstdint>
#include <cmath>

#include "rpbeam/types.hpp"

namespace rpbeam {

// splitmix64 step; fully specified so streams are identical on every
// platform (std::normal_distribution is implementation-defined and
// therefore avoided throughout).
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-derived stream: (seed, stream_id) -> independent generator.
// Streams are order-independent, so parallel consumers stay reproducible.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed) : state_(seed) {
    // Scramble once so small seeds do not start in a low-entropy state.
    (void)splitmix64(state_);
  }

  static RandomStream substream(uint64_t seed, uint64_t stream_id) {
    uint64_t a = seed;
    uint64_t b = stream_id ^ 0xd1b54a32d192ed03ULL;
    uint64_t mixed = splitmix64(a) ^ splitmix64(b);
    return RandomStream(mixed);
  }

  uint64_t next_u64() { return splitmix64(state_); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via the Marsaglia polar method (sqrt/log only; no
  // trig, which keeps draws bit-stable across libm builds in practice).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  cdouble complex_normal() {
    // Circularly symmetric, unit total variance.
    const double re = normal();
    const double im = normal();
    return cdouble(re * M_SQRT1_2, im * M_SQRT1_2);
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rpbeam

#endif  // RPBEAM_RNG_HPP_
