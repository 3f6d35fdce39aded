// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RPBEAM_ROOM_HPP_
#define RPBEAM_ROOM_HPP_

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "rpbeam/audio_io.hpp"
#include "rpbeam/types.hpp"

namespace rpbeam {

using Position = std::array<double, 3>;

struct RoomSpec {
  Position dimensions{5.0, 4.0, 4.0};
  // Energy absorption per wall: x=0, x=L, y=0, y=L, z=0, z=L.
  std::array<double, 6> absorption{0.35, 0.35, 0.35, 0.35, 0.35, 0.35};
  int max_order = 10;
  double speed_of_sound = 343.0;

  void set_uniform_absorption(double a) { absorption.fill(a); }
};

void validate(const RoomSpec& room);

struct ArraySpec {
  Position center{0.0, 0.0, 0.0};
  double radius = 0.1;
  int num_elements = 1;
};

// Inter-element spacing c/(2*freq) bent into a circle of n elements.
double matched_radius(int n, double freq_hz, double speed_of_sound = 343.0);

// n equally spaced points on the horizontal circle.
std::vector<Position> circular_array(const Position& center, double radius, int n);

struct ImageSource {
  Position pos;
  double amplitude;  // product of wall reflection factors
  int order;
};

// Mirror images of `source` up to room.max_order total reflections.
// Amplitude excludes the 1/(4*pi*d) spreading term.
std::vector<ImageSource> image_sources(const RoomSpec& room, const Position& source);

// Shoebox impulse response: attenuated, fractionally delayed pulses
// (81-tap Hann-windowed sinc) from every image source.
std::vector<double> image_source_rir(const RoomSpec& room, const Position& source,
                                     const Position& mic, int sample_rate);

struct AcousticChannel {
  int num_mics = 0;
  int num_sources = 0;
  int sample_rate = 0;
  int fft_size = 0;
  std::vector<Position> mic_positions;
  std::vector<Position> source_positions;
  // rir[m][j]: impulse response from source j to mic m.
  std::vector<std::vector<std::vector<double>>> rir;
  // atf[k]: num_mics x num_sources transfer gains at bin k; the one-sided
  // DFT of each rir truncated/zero-padded to fft_size.
  std::vector<Eigen::MatrixXcd> atf;

  int bins() const { return fft_size / 2 + 1; }
};

AcousticChannel build_channel(const RoomSpec& room,
                              const std::vector<ArraySpec>& arrays,
                              const std::vector<Position>& sources,
                              int sample_rate, int fft_size);

struct MixtureSignals {
  // mics[m]: observed mixture at mic m.
  std::vector<std::vector<double>> mics;
  // source_images[j][m]: clean image of source j at mic m.
  std::vector<std::vector<std::vector<double>>> source_images;
  // noise[m]: additive sensor noise at mic m.
  std::vector<std::vector<double>> noise;
};

// Convolves each source through the channel and adds per-mic white
// noise of the given standard deviation; components are returned
// separately and sum to the mixture sample-exactly.
MixtureSignals simulate_mixture(const AcousticChannel& channel,
                                const std::vector<AudioBuffer>& sources,
                                double noise_std, uint64_t seed);

}  // namespace rpbeam

#endif  // RPBEAM_ROOM_HPP_
