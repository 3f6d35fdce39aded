// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/room.hpp"

#include <algorithm>
#include <cmath>

#include "rpbeam/fft.hpp"
#include "rpbeam/rng.hpp"

namespace rpbeam {

namespace {

constexpr int kSincHalfWidth = 40;  // 81-tap interpolation kernel
constexpr double kMaxRirSeconds = 1.0;

double windowed_sinc(double u) {
  if (std::abs(u) > kSincHalfWidth) return 0.0;
  const double w = 0.5 * (1.0 + std::cos(M_PI * u / (kSincHalfWidth + 1)));
  if (u == 0.0) return w;
  return w * std::sin(M_PI * u) / (M_PI * u);
}

bool inside_closed(const RoomSpec& room, const Position& p) {
  for (int a = 0; a < 3; ++a)
    if (p[a] < 0.0 || p[a] > room.dimensions[a]) return false;
  return true;
}

double distance(const Position& a, const Position& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Per-axis mirror image: coordinate, reflections off the low/high wall.
struct AxisImage {
  double coord;
  int hits_low;
  int hits_high;
  int order() const { return hits_low + hits_high; }
};

std::vector<AxisImage> axis_images(double x, double length, int max_order) {
  std::vector<AxisImage> images;
  for (int n = -(max_order / 2 + 1); n <= max_order / 2 + 1; ++n) {
    // Even parity: 2nL + x, |n| bounces off each wall.
    AxisImage even{2.0 * n * length + x, std::abs(n), std::abs(n)};
    if (even.order() <= max_order) images.push_back(even);
    // Odd parity: 2nL - x.
    AxisImage odd{2.0 * n * length - x, 0, 0};
    if (n >= 1) {
      odd.hits_low = n - 1;
      odd.hits_high = n;
    } else {
      odd.hits_low = 1 - n;
      odd.hits_high = -n;
    }
    if (odd.order() <= max_order) images.push_back(odd);
  }
  return images;
}

}  // namespace

void validate(const RoomSpec& room) {
  for (double d : room.dimensions)
    if (d <= 0.0) throw InvalidArgument("room: dimensions must be positive");
  for (double a : room.absorption)
    if (a < 0.0 || a > 1.0)
      throw InvalidArgument("room: absorption must lie in [0, 1]");
  if (room.max_order < 0) throw InvalidArgument("room: max_order must be >= 0");
  if (room.speed_of_sound <= 0.0)
    throw InvalidArgument("room: speed of sound must be positive");
}

double matched_radius(int n, double freq_hz, double speed_of_sound) {
  if (n < 2) throw InvalidArgument("matched_radius: need at least 2 elements");
  if (freq_hz <= 0.0) throw InvalidArgument("matched_radius: frequency must be positive");
  const double spacing = speed_of_sound / (2.0 * freq_hz);
  return spacing / (2.0 * std::sin(M_PI / n));
}

std::vector<Position> circular_array(const Position& center, double radius, int n) {
  if (n < 1) throw InvalidArgument("circular_array: need at least 1 element");
  if (radius < 0.0) throw InvalidArgument("circular_array: negative radius");
  std::vector<Position> pts(n);
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * M_PI * i / n;
    pts[i] = {center[0] + radius * std::cos(phi),
              center[1] + radius * std::sin(phi), center[2]};
  }
  return pts;
}

std::vector<ImageSource> image_sources(const RoomSpec& room, const Position& source) {
  validate(room);
  if (!inside_closed(room, source))
    throw InvalidArgument("image_sources: source outside room");

  // Amplitude reflection factor from energy absorption.
  std::array<double, 6> refl;
  for (int w = 0; w < 6; ++w) refl[w] = std::sqrt(1.0 - room.absorption[w]);

  const auto xi = axis_images(source[0], room.dimensions[0], room.max_order);
  const auto yi = axis_images(source[1], room.dimensions[1], room.max_order);
  const auto zi = axis_images(source[2], room.dimensions[2], room.max_order);

  std::vector<ImageSource> images;
  for (const auto& ix : xi) {
    for (const auto& iy : yi) {
      const int oxy = ix.order() + iy.order();
      if (oxy > room.max_order) continue;
      for (const auto& iz : zi) {
        const int order = oxy + iz.order();
        if (order > room.max_order) continue;
        double amp = 1.0;
        amp *= std::pow(refl[0], ix.hits_low) * std::pow(refl[1], ix.hits_high);
        amp *= std::pow(refl[2], iy.hits_low) * std::pow(refl[3], iy.hits_high);
        amp *= std::pow(refl[4], iz.hits_low) * std::pow(refl[5], iz.hits_high);
        if (amp == 0.0 && order > 0) continue;
        images.push_back({{ix.coord, iy.coord, iz.coord}, amp, order});
      }
    }
  }
  return images;
}

std::vector<double> image_source_rir(const RoomSpec& room, const Position& source,
                                     const Position& mic, int sample_rate) {
  if (!inside_closed(room, mic))
    throw InvalidArgument("image_source_rir: mic outside room");
  if (distance(source, mic) == 0.0)
    throw DegenerateInput("image_source_rir: source and mic coincide");

  const auto images = image_sources(room, source);

  double max_delay = 0.0;
  for (const auto& im : images)
    max_delay = std::max(max_delay, distance(im.pos, mic) / room.speed_of_sound);
  int length = static_cast<int>(std::ceil(max_delay * sample_rate)) +
               2 * kSincHalfWidth + 2;
  length = std::min<int>(length, static_cast<int>(kMaxRirSeconds * sample_rate));

  std::vector<double> rir(length, 0.0);
  for (const auto& im : images) {
    const double d = distance(im.pos, mic);
    if (d == 0.0) throw DegenerateInput("image_source_rir: zero-length path");
    const double amp = im.amplitude / (4.0 * M_PI * d);
    const double delay = d * sample_rate / room.speed_of_sound;
    const int lo = std::max(0, static_cast<int>(std::floor(delay)) - kSincHalfWidth);
    const int hi = std::min<int>(length - 1,
                                 static_cast<int>(std::floor(delay)) + kSincHalfWidth + 1);
    for (int n = lo; n <= hi; ++n) rir[n] += amp * windowed_sinc(n - delay);
  }
  return rir;
}

AcousticChannel build_channel(const RoomSpec& room,
                              const std::vector<ArraySpec>& arrays,
                              const std::vector<Position>& sources,
                              int sample_rate, int fft_size) {
  validate(room);
  if (sources.empty()) throw InvalidArgument("build_channel: no sources");
  if (arrays.empty()) throw InvalidArgument("build_channel: no arrays");
  if (sample_rate <= 0) throw InvalidArgument("build_channel: bad sample rate");
  if (fft_size < 2) throw InvalidArgument("build_channel: bad fft size");

  AcousticChannel ch;
  ch.sample_rate = sample_rate;
  ch.fft_size = fft_size;
  for (const auto& arr : arrays) {
    if (arr.num_elements < 1)
      throw InvalidArgument("build_channel: array needs elements");
    const auto pts = circular_array(arr.center, arr.radius, arr.num_elements);
    for (const auto& p : pts) {
      if (!inside_closed(room, p))
        throw InvalidArgument("build_channel: array element outside room");
      ch.mic_positions.push_back(p);
    }
  }
  for (const auto& s : sources) {
    if (!inside_closed(room, s))
      throw InvalidArgument("build_channel: source outside room");
    ch.source_positions.push_back(s);
  }
  ch.num_mics = static_cast<int>(ch.mic_positions.size());
  ch.num_sources = static_cast<int>(ch.source_positions.size());

  ch.rir.assign(ch.num_mics, std::vector<std::vector<double>>(ch.num_sources));
  for (int m = 0; m < ch.num_mics; ++m)
    for (int j = 0; j < ch.num_sources; ++j)
      ch.rir[m][j] = image_source_rir(room, ch.source_positions[j],
                                      ch.mic_positions[m], sample_rate);

  const int bins = ch.bins();
  ch.atf.assign(bins, Eigen::MatrixXcd(ch.num_mics, ch.num_sources));
  RealFft fft(fft_size);
  std::vector<double> buf(fft_size);
  std::vector<cdouble> coef(bins);
  for (int m = 0; m < ch.num_mics; ++m) {
    for (int j = 0; j < ch.num_sources; ++j) {
      std::fill(buf.begin(), buf.end(), 0.0);
      const auto& r = ch.rir[m][j];
      const size_t n = std::min<size_t>(r.size(), fft_size);
      std::copy(r.begin(), r.begin() + n, buf.begin());
      fft.forward(buf.data(), coef.data());
      for (int k = 0; k < bins; ++k) ch.atf[k](m, j) = coef[k];
    }
  }
  return ch;
}

MixtureSignals simulate_mixture(const AcousticChannel& channel,
                                const std::vector<AudioBuffer>& sources,
                                double noise_std, uint64_t seed) {
  if (static_cast<int>(sources.size()) != channel.num_sources)
    throw ShapeMismatch("simulate_mixture: source count mismatch");
  if (sources.empty()) throw InvalidArgument("simulate_mixture: no sources");
  const size_t len = sources[0].length();
  for (const auto& s : sources) {
    if (s.sample_rate != channel.sample_rate)
      throw InvalidArgument("simulate_mixture: sample-rate mismatch");
    if (s.length() != len)
      throw ShapeMismatch("simulate_mixture: source length mismatch");
    if (s.channels() != 1)
      throw InvalidArgument("simulate_mixture: sources must be mono");
  }

  MixtureSignals out;
  out.mics.assign(channel.num_mics, std::vector<double>(len, 0.0));
  out.noise.assign(channel.num_mics, std::vector<double>(len, 0.0));
  out.source_images.assign(
      channel.num_sources,
      std::vector<std::vector<double>>(channel.num_mics,
                                       std::vector<double>(len, 0.0)));

  for (int j = 0; j < channel.num_sources; ++j) {
    for (int m = 0; m < channel.num_mics; ++m) {
      const auto conv = fft_convolve(sources[j].samples[0], channel.rir[m][j]);
      auto& image = out.source_images[j][m];
      const size_t n = std::min(len, conv.size());
      std::copy(conv.begin(), conv.begin() + n, image.begin());
    }
  }

  for (int m = 0; m < channel.num_mics; ++m) {
    if (noise_std > 0.0) {
      RandomStream rng = RandomStream::substream(seed, 0x6e6f6973ULL + m);
      for (size_t i = 0; i < len; ++i) out.noise[m][i] = noise_std * rng.normal();
    }
    auto& y = out.mics[m];
    for (size_t i = 0; i < len; ++i) {
      double acc = 0.0;
      for (int j = 0; j < channel.num_sources; ++j)
        acc += out.source_images[j][m][i];
      y[i] = acc + out.noise[m][i];
    }
  }
  return out;
}

}  // namespace rpbeam
