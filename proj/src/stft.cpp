// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/stft.hpp"

#include <algorithm>
#include <cmath>

#include "rpbeam/fft.hpp"

namespace rpbeam {

Window window_from_string(const std::string& name) {
  if (name == "hann") return Window::kHann;
  if (name == "sqrt_hann") return Window::kSqrtHann;
  if (name == "rect") return Window::kRect;
  throw InvalidArgument("unknown window: " + name);
}

std::string to_string(Window w) {
  switch (w) {
    case Window::kHann: return "hann";
    case Window::kSqrtHann: return "sqrt_hann";
    case Window::kRect: return "rect";
  }
  return "?";
}

void validate(const StftConfig& cfg) {
  if (cfg.frame_length <= 0) throw InvalidArgument("stft: frame_length must be positive");
  if (cfg.hop <= 0) throw InvalidArgument("stft: hop must be positive");
  if (cfg.frame_length % cfg.hop != 0)
    throw InvalidArgument("stft: hop must divide frame_length");
  if (cfg.fft_size < cfg.frame_length)
    throw InvalidArgument("stft: fft_size must be >= frame_length");
  if (cfg.sample_rate <= 0) throw InvalidArgument("stft: sample_rate must be positive");
}

std::vector<double> make_window(Window w, int length) {
  std::vector<double> win(length);
  for (int n = 0; n < length; ++n) {
    // Periodic Hann so shifted copies tile exactly.
    const double hann = 0.5 - 0.5 * std::cos(2.0 * M_PI * n / length);
    switch (w) {
      case Window::kHann: win[n] = hann; break;
      case Window::kSqrtHann: win[n] = std::sqrt(hann); break;
      case Window::kRect: win[n] = 1.0; break;
    }
  }
  return win;
}

std::vector<double> overlap_add_profile(const StftConfig& cfg) {
  validate(cfg);
  // Analysis and synthesis use the same window.
  const std::vector<double> win = make_window(cfg.window, cfg.frame_length);
  const int shifts = cfg.frame_length / cfg.hop;
  std::vector<double> profile(cfg.hop, 0.0);
  for (int n = 0; n < cfg.hop; ++n)
    for (int j = 0; j < shifts; ++j)
      profile[n] += win[n + j * cfg.hop] * win[n + j * cfg.hop];
  return profile;
}

double cola_constant(const StftConfig& cfg) {
  const std::vector<double> p = overlap_add_profile(cfg);
  double sum = 0.0;
  for (double v : p) sum += v;
  return sum / p.size();
}

double cola_deviation(const StftConfig& cfg) {
  const std::vector<double> p = overlap_add_profile(cfg);
  double mean = 0.0;
  for (double v : p) mean += v;
  mean /= p.size();
  if (mean <= 0.0) return 1.0;
  double dev = 0.0;
  for (double v : p) dev = std::max(dev, std::abs(v - mean));
  return dev / mean;
}

SpectrogramTensor::SpectrogramTensor(int channels, int frames, int bins,
                                     StftConfig cfg)
    : data(static_cast<size_t>(channels) * frames * bins, cdouble(0.0, 0.0)),
      channels(channels),
      frames(frames),
      bins(bins),
      config(cfg) {}

Eigen::MatrixXcd SpectrogramTensor::bin_matrix(int k) const {
  Eigen::MatrixXcd m(channels, frames);
  for (int c = 0; c < channels; ++c)
    for (int i = 0; i < frames; ++i) m(c, i) = at(c, i, k);
  return m;
}

SpectrogramTensor analyze(const MultichannelSamples& signal,
                          const StftConfig& cfg) {
  validate(cfg);
  if (signal.empty() || signal[0].empty())
    throw InvalidArgument("analyze: empty signal");
  const size_t len = signal[0].size();
  for (const auto& ch : signal)
    if (ch.size() != len) throw ShapeMismatch("analyze: channel length mismatch");
  if (len < static_cast<size_t>(cfg.frame_length))
    throw InvalidArgument("analyze: signal shorter than one frame");

  const int frames =
      static_cast<int>((len - cfg.frame_length + cfg.hop - 1) / cfg.hop) + 1;
  const int bins = cfg.fft_size / 2 + 1;
  SpectrogramTensor spec(static_cast<int>(signal.size()), frames, bins, cfg);

  const std::vector<double> win = make_window(cfg.window, cfg.frame_length);
  RealFft fft(cfg.fft_size);
  std::vector<double> buf(cfg.fft_size);
  std::vector<cdouble> coef(bins);

  for (int c = 0; c < spec.channels; ++c) {
    const std::vector<double>& x = signal[c];
    for (int i = 0; i < frames; ++i) {
      const size_t start = static_cast<size_t>(i) * cfg.hop;
      std::fill(buf.begin(), buf.end(), 0.0);
      const size_t avail = std::min<size_t>(cfg.frame_length, len - start);
      for (size_t n = 0; n < avail; ++n) buf[n] = x[start + n] * win[n];
      fft.forward(buf.data(), coef.data());
      for (int k = 0; k < bins; ++k) spec.at(c, i, k) = coef[k];
    }
  }
  return spec;
}

MultichannelSamples synthesize(const SpectrogramTensor& spec) {
  const StftConfig& cfg = spec.config;
  validate(cfg);
  if (spec.bins != cfg.fft_size / 2 + 1)
    throw ShapeMismatch("synthesize: bins inconsistent with fft_size");
  if (cola_deviation(cfg) > 1e-12)
    throw InvalidArgument("synthesize: window/hop pair does not overlap-add to a constant");
  const double cola = cola_constant(cfg);

  const size_t out_len =
      static_cast<size_t>(spec.frames - 1) * cfg.hop + cfg.frame_length;
  MultichannelSamples out(spec.channels, std::vector<double>(out_len, 0.0));

  const std::vector<double> win = make_window(cfg.window, cfg.frame_length);
  RealFft fft(cfg.fft_size);
  std::vector<cdouble> coef(spec.bins);
  std::vector<double> frame(cfg.fft_size);

  for (int c = 0; c < spec.channels; ++c) {
    for (int i = 0; i < spec.frames; ++i) {
      for (int k = 0; k < spec.bins; ++k) coef[k] = spec.at(c, i, k);
      fft.inverse(coef.data(), frame.data());
      const size_t start = static_cast<size_t>(i) * cfg.hop;
      for (int n = 0; n < cfg.frame_length; ++n)
        out[c][start + n] += frame[n] * win[n];
    }
    for (double& v : out[c]) v /= cola;
  }
  return out;
}

}  // namespace rpbeam
