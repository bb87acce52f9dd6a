// core/include/againvc/audio/mel.hpp

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

#include <string>

#include "againvc/audio/pipeline.hpp"
#include "againvc/matrix.hpp"

namespace againvc {

// Analysis configuration. Values are declared in the cache sidecar so that
// downstream stages and tests agree on the framing convention.
struct MelConfig {
  int sample_rate = kTargetSampleRate;
  int n_fft = 1024;
  int win_length = 1024;
  int hop_length = 256;
  int n_mels = 80;
  double fmin = 0.0;
  double fmax = kTargetSampleRate / 2.0;
  double log_floor = 1e-5;  // natural log of mel magnitude, clamped below
  bool center = true;       // reflect-padded Hann frames

  double floor_value() const;  // log(log_floor)
  std::string to_json_string() const;
  static MelConfig from_json_string(const std::string& s);
};

// Slaney-style mel filterbank (area-normalized triangles),
// n_mels x (n_fft/2 + 1).
Mat mel_filterbank(const MelConfig& cfg);

// Natural-log mel magnitude spectrogram, n_mels x frames.
Mat mel_spectrogram(const AudioClip& clip, const MelConfig& cfg);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

}  // namespace againvc
