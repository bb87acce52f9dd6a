// core/include/againvc/audio/wav.hpp

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

#pragma once

#include <filesystem>

#include "againvc/matrix.hpp"

namespace againvc {

struct WavData {
  Mat samples;  // channels x frames, values in [-1, 1]
  int sample_rate = 0;
};

// PCM 8/16/24/32-bit and IEEE float32/64 RIFF/WAVE files.
WavData read_wav(const std::filesystem::path& path);

// 16-bit PCM mono.
void write_wav(const std::filesystem::path& path, const Vec& samples, int sample_rate);

}  // namespace againvc
