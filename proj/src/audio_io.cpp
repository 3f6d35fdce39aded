// Copyright 2026 The rpbeam Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "rpbeam/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "rpbeam/rng.hpp"

namespace rpbeam {

namespace {

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 24) & 0xff);
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

void put_tag(std::vector<uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioBuffer read_wav(const std::string& path, int expected_rate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_wav: cannot open " + path);
  std::vector<uint8_t> raw((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
  if (raw.size() < 44 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0)
    throw IoError("read_wav: not a RIFF/WAVE file: " + path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const uint8_t* data = nullptr;
  size_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const char* tag = reinterpret_cast<const char*>(raw.data() + pos);
    const uint32_t chunk_len = read_u32(raw.data() + pos + 4);
    const size_t body = pos + 8;
    if (body + chunk_len > raw.size())
      throw IoError("read_wav: truncated chunk in " + path);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw IoError("read_wav: malformed fmt chunk");
      format = read_u16(raw.data() + body);
      channels = read_u16(raw.data() + body + 2);
      rate = read_u32(raw.data() + body + 4);
      bits = read_u16(raw.data() + body + 14);
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data = raw.data() + body;
      data_len = chunk_len;
    }
    pos = body + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (data == nullptr) throw IoError("read_wav: missing data chunk");
  if (channels == 0) throw IoError("read_wav: zero channels");
  const bool pcm16 = (format == 1 && bits == 16);
  const bool f32 = (format == 3 && bits == 32);
  if (!pcm16 && !f32)
    throw IoError("read_wav: unsupported codec (want PCM16 or float32)");
  if (expected_rate != 0 && static_cast<int>(rate) != expected_rate)
    throw IoError("read_wav: sample rate " + std::to_string(rate) +
                  " does not match required " + std::to_string(expected_rate));

  const size_t bytes_per_sample = pcm16 ? 2 : 4;
  const size_t total = data_len / (bytes_per_sample * channels);

  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(rate);
  buf.samples.assign(channels, std::vector<double>(total));
  for (size_t i = 0; i < total; ++i) {
    for (int c = 0; c < channels; ++c) {
      const uint8_t* p = data + (i * channels + c) * bytes_per_sample;
      if (pcm16) {
        const int16_t v = static_cast<int16_t>(p[0] | (p[1] << 8));
        buf.samples[c][i] = v / 32768.0;
      } else {
        float v;
        std::memcpy(&v, p, 4);
        buf.samples[c][i] = v;
      }
    }
  }
  return buf;
}

WavWriteStats write_wav(const std::string& path, const AudioBuffer& buf,
                        WavFormat format) {
  if (buf.samples.empty()) throw InvalidArgument("write_wav: no channels");
  const size_t len = buf.length();
  for (const auto& ch : buf.samples) {
    if (ch.size() != len) throw ShapeMismatch("write_wav: ragged channels");
    for (double v : ch)
      if (!std::isfinite(v)) throw InvalidArgument("write_wav: non-finite sample");
  }

  const int channels = buf.channels();
  const bool pcm16 = format == WavFormat::kPcm16;
  const uint16_t bits = pcm16 ? 16 : 32;
  const uint32_t byte_rate = buf.sample_rate * channels * bits / 8;
  const uint32_t data_len = static_cast<uint32_t>(len * channels * bits / 8);

  std::vector<uint8_t> out;
  out.reserve(44 + data_len);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_len);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, pcm16 ? 1 : 3);
  put_u16(out, static_cast<uint16_t>(channels));
  put_u32(out, static_cast<uint32_t>(buf.sample_rate));
  put_u32(out, byte_rate);
  put_u16(out, static_cast<uint16_t>(channels * bits / 8));
  put_u16(out, bits);
  put_tag(out, "data");
  put_u32(out, data_len);

  WavWriteStats stats;
  for (size_t i = 0; i < len; ++i) {
    for (int c = 0; c < channels; ++c) {
      const double v = buf.samples[c][i];
      if (pcm16) {
        double scaled = std::round(v * 32768.0);
        if (scaled > 32767.0) { scaled = 32767.0; ++stats.clipped; }
        if (scaled < -32768.0) { scaled = -32768.0; ++stats.clipped; }
        const int16_t q = static_cast<int16_t>(scaled);
        out.push_back(q & 0xff);
        out.push_back((q >> 8) & 0xff);
      } else {
        const float f = static_cast<float>(v);
        uint8_t b[4];
        std::memcpy(b, &f, 4);
        out.insert(out.end(), b, b + 4);
      }
    }
  }

  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("write_wav: cannot open " + path);
  os.write(reinterpret_cast<const char*>(out.data()),
           static_cast<std::streamsize>(out.size()));
  if (!os) throw IoError("write_wav: short write to " + path);
  return stats;
}

AudioBuffer generate_white_noise(double seconds, int sample_rate, uint64_t seed) {
  if (seconds <= 0.0) throw InvalidArgument("generate: seconds must be positive");
  const size_t n = static_cast<size_t>(std::llround(seconds * sample_rate));
  if (n == 0) throw InvalidArgument("generate: zero-length signal");
  RandomStream rng(seed);
  AudioBuffer buf;
  buf.sample_rate = sample_rate;
  buf.samples.assign(1, std::vector<double>(n));
  double peak = 0.0;
  for (size_t i = 0; i < n; ++i) {
    buf.samples[0][i] = rng.normal();
    peak = std::max(peak, std::abs(buf.samples[0][i]));
  }
  if (peak > 0.999) {
    const double scale = 0.999 / peak;
    for (double& v : buf.samples[0]) v *= scale;
  }
  return buf;
}

AudioBuffer generate_tone(double freq_hz, double seconds, int sample_rate,
                          double amplitude) {
  if (seconds <= 0.0) throw InvalidArgument("generate: seconds must be positive");
  if (freq_hz <= 0.0 || freq_hz >= sample_rate / 2.0)
    throw InvalidArgument("generate: tone frequency out of range");
  const size_t n = static_cast<size_t>(std::llround(seconds * sample_rate));
  if (n == 0) throw InvalidArgument("generate: zero-length signal");
  AudioBuffer buf;
  buf.sample_rate = sample_rate;
  buf.samples.assign(1, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    buf.samples[0][i] = amplitude * std::sin(2.0 * M_PI * freq_hz * i / sample_rate);
  return buf;
}

AudioBuffer generate(const std::string& kind, double seconds, int sample_rate,
                     uint64_t seed) {
  if (kind == "white_noise") return generate_white_noise(seconds, sample_rate, seed);
  if (kind.rfind("tone:", 0) == 0) {
    const double freq = std::stod(kind.substr(5));
    return generate_tone(freq, seconds, sample_rate);
  }
  throw InvalidArgument("generate: unknown kind '" + kind + "'");
}

}  // namespace rpbeam
