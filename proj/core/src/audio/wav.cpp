// core/src/audio/wav.cpp

// Copyright 2026  AGAIN-VC C++ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "againvc/audio/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "againvc/errors.hpp"

namespace againvc {

namespace {

uint32_t read_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& s, uint32_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>((v >> 8) & 0xFF));
  s.push_back(static_cast<char>((v >> 16) & 0xFF));
  s.push_back(static_cast<char>((v >> 24) & 0xFF));
}

void put_u16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

WavData read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot open wav: " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw DecodeError("not a RIFF/WAVE file: " + path.string());

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const unsigned char* data = nullptr;
  size_t data_size = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    uint32_t size = read_u32(chunk + 4);
    const unsigned char* payload = chunk + 8;
    if (pos + 8 + size > bytes.size()) size = static_cast<uint32_t>(bytes.size() - pos - 8);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) throw DecodeError("truncated fmt chunk: " + path.string());
      format = read_u16(payload);
      channels = read_u16(payload + 2);
      rate = read_u32(payload + 4);
      bits = read_u16(payload + 14);
      if (format == 0xFFFE && size >= 40) format = read_u16(payload + 24);  // extensible
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = payload;
      data_size = size;
    }
    pos += 8 + size + (size & 1);  // chunks are word-aligned
  }

  if (rate == 0 || channels == 0 || data == nullptr)
    throw DecodeError("missing fmt or data chunk: " + path.string());
  if (format != 1 && format != 3)
    throw DecodeError("unsupported wav format tag " + std::to_string(format) + ": " +
                      path.string());

  size_t bytes_per_sample = bits / 8;
  if (bytes_per_sample == 0) throw DecodeError("bad bit depth: " + path.string());
  size_t n_frames = data_size / (bytes_per_sample * channels);
  if (n_frames == 0) throw EmptyInputError("wav has no samples: " + path.string());

  WavData wav;
  wav.sample_rate = static_cast<int>(rate);
  wav.samples.resize(channels, static_cast<Eigen::Index>(n_frames));

  for (size_t f = 0; f < n_frames; ++f) {
    for (uint16_t ch = 0; ch < channels; ++ch) {
      const unsigned char* s = data + (f * channels + ch) * bytes_per_sample;
      double v = 0.0;
      if (format == 1) {
        switch (bits) {
          case 8:
            v = (static_cast<int>(s[0]) - 128) / 128.0;
            break;
          case 16: {
            int16_t x = static_cast<int16_t>(s[0] | (s[1] << 8));
            v = x / 32768.0;
            break;
          }
          case 24: {
            int32_t x = s[0] | (s[1] << 8) | (s[2] << 16);
            if (x & 0x800000) x |= ~0xFFFFFF;
            v = x / 8388608.0;
            break;
          }
          case 32: {
            int32_t x = static_cast<int32_t>(read_u32(s));
            v = x / 2147483648.0;
            break;
          }
          default:
            throw DecodeError("unsupported PCM bit depth: " + path.string());
        }
      } else {  // IEEE float
        if (bits == 32) {
          float x;
          std::memcpy(&x, s, 4);
          v = x;
        } else if (bits == 64) {
          std::memcpy(&v, s, 8);
        } else {
          throw DecodeError("unsupported float bit depth: " + path.string());
        }
      }
      wav.samples(ch, static_cast<Eigen::Index>(f)) = v;
    }
  }
  if (!wav.samples.allFinite()) throw DecodeError("non-finite samples: " + path.string());
  return wav;
}

void write_wav(const std::filesystem::path& path, const Vec& samples, int sample_rate) {
  std::string body;
  body.reserve(44 + static_cast<size_t>(samples.size()) * 2);
  uint32_t data_size = static_cast<uint32_t>(samples.size()) * 2;

  body.append("RIFF");
  put_u32(body, 36 + data_size);
  body.append("WAVE");
  body.append("fmt ");
  put_u32(body, 16);
  put_u16(body, 1);  // PCM
  put_u16(body, 1);  // mono
  put_u32(body, static_cast<uint32_t>(sample_rate));
  put_u32(body, static_cast<uint32_t>(sample_rate) * 2);  // byte rate
  put_u16(body, 2);                                       // block align
  put_u16(body, 16);                                      // bits
  body.append("data");
  put_u32(body, data_size);

  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    double v = std::clamp(samples[i], -1.0, 1.0);
    int x = static_cast<int>(std::lrint(v * 32767.0));
    put_u16(body, static_cast<uint16_t>(static_cast<int16_t>(x)));
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write wav: " + path.string());
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw IoError("short wav write: " + path.string());
}

}  // namespace againvc
