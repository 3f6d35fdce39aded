// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_AUDIO_IO_HPP_
#define RPBEAM_AUDIO_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rpbeam/types.hpp"

namespace rpbeam {

struct AudioBuffer {
  std::vector<std::vector<double>> samples;  // per channel
  int sample_rate = 0;

  int channels() const { return static_cast<int>(samples.size()); }
  size_t length() const { return samples.empty() ? 0 : samples[0].size(); }
};

enum class WavFormat { kPcm16, kFloat32 };

struct WavWriteStats {
  int64_t clipped = 0;  // PCM16 samples clamped to full scale
};

// RIFF/WAVE reader for PCM16 and IEEE float32, any channel count.
// expected_rate != 0 enforces the sample rate (no resampling).
AudioBuffer read_wav(const std::string& path, int expected_rate = 0);

WavWriteStats write_wav(const std::string& path, const AudioBuffer& buf,
                        WavFormat format);

// Deterministic mono test signals. White noise is unit-variance before
// peak normalization into [-1, 1].
AudioBuffer generate_white_noise(double seconds, int sample_rate, uint64_t seed);
AudioBuffer generate_tone(double freq_hz, double seconds, int sample_rate,
                          double amplitude = 0.5);

// kind: "white_noise" or "tone:<freq_hz>".
AudioBuffer generate(const std::string& kind, double seconds, int sample_rate,
                     uint64_t seed);

}  // namespace rpbeam

#endif  // RPBEAM_AUDIO_IO_HPP_
