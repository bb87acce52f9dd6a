// core/include/againvc/audio/griffin_lim.hpp

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

#include "againvc/audio/mel.hpp"

namespace againvc {

// Phase reconstruction from a log-mel spectrogram. The mel bands are mapped
// back to a linear magnitude spectrogram by regularized least squares
// (clamped at zero), then iterated magnitude/phase projections recover a
// waveform. Zero-phase initialization keeps the output deterministic.
AudioClip griffin_lim_invert(const Mat& log_mel, const MelConfig& cfg, int iterations = 60,
                             bool normalize = true);

}  // namespace againvc
