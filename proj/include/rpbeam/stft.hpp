// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_STFT_HPP_
#define RPBEAM_STFT_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rpbeam/types.hpp"

namespace rpbeam {

enum class Window { kHann, kSqrtHann, kRect };

Window window_from_string(const std::string& name);
std::string to_string(Window w);

struct StftConfig {
  int frame_length = 512;
  int hop = 256;
  Window window = Window::kSqrtHann;
  int fft_size = 512;
  int sample_rate = 16000;
};

// Throws InvalidArgument unless frame/hop/fft/rate are consistent
// (hop divides frame_length, fft_size >= frame_length, ...).
void validate(const StftConfig& cfg);

// Periodic window of the given length.
std::vector<double> make_window(Window w, int length);

// Overlap-add profile of analysis*synthesis over one hop period in
// steady state; reconstruction divides by its mean.
std::vector<double> overlap_add_profile(const StftConfig& cfg);
double cola_constant(const StftConfig& cfg);
// Max relative deviation of the profile from its mean; a pair is
// reconstruction-capable when this is <= 1e-12.
double cola_deviation(const StftConfig& cfg);

// Complex STFT coefficients, indexed (channel, frame, bin).
struct SpectrogramTensor {
  std::vector<cdouble> data;
  int channels = 0;
  int frames = 0;
  int bins = 0;
  StftConfig config;

  SpectrogramTensor() = default;
  SpectrogramTensor(int channels, int frames, int bins, StftConfig cfg);

  cdouble& at(int c, int i, int k) {
    return data[(static_cast<size_t>(c) * frames + i) * bins + k];
  }
  const cdouble& at(int c, int i, int k) const {
    return data[(static_cast<size_t>(c) * frames + i) * bins + k];
  }

  // channels x frames slice at one bin.
  Eigen::MatrixXcd bin_matrix(int k) const;
};

using MultichannelSamples = std::vector<std::vector<double>>;

// Windowed short-time analysis; ceil((len - frame)/hop) + 1 frames, the
// last frame zero-padded. Linear in the input.
SpectrogramTensor analyze(const MultichannelSamples& signal,
                          const StftConfig& cfg);

// Weighted overlap-add resynthesis. Requires a reconstruction-capable
// window pair; output has (frames-1)*hop + frame_length samples and
// matches the analyzed signal away from the first/last half frame.
MultichannelSamples synthesize(const SpectrogramTensor& spec);

}  // namespace rpbeam

#endif  // RPBEAM_STFT_HPP_
