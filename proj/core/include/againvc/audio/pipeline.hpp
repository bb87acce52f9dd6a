// core/include/againvc/audio/pipeline.hpp

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
#include "againvc/rng.hpp"

namespace againvc {

inline constexpr int kTargetSampleRate = 22050;
inline constexpr int kSegmentFrames = 128;

struct AudioClip {
  Vec samples;  // mono, [-1, 1]
  int sample_rate = kTargetSampleRate;

  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Decode, downmix to mono, resample to 22050 Hz and peak-normalize
// (silent audio is left unscaled).
AudioClip load_and_normalize(const std::filesystem::path& path,
                             int target_rate = kTargetSampleRate);

// Drop leading/trailing analysis frames whose RMS falls below threshold_db
// relative to the clip peak. Interior samples are never modified.
AudioClip trim_silence(const AudioClip& clip, double threshold_db = -40.0,
                       int frame_length = 2048);

// Fixed-length training crop of a mel spectrogram.
struct MelSegment {
  Mat values;          // n_mels x kSegmentFrames
  bool padded = false; // input was shorter than kSegmentFrames
};

// Contiguous 128-frame crop at a uniformly random offset. Inputs shorter
// than 128 frames are right-padded with pad_value and flagged.
MelSegment sample_segment(const Mat& mel, Rng& rng, double pad_value);

}  // namespace againvc
