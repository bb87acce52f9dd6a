// core/include/againvc/audio/resample.hpp

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

#include "againvc/audio/pipeline.hpp"

namespace againvc {

// Windowed-sinc resampler (Hann window, 32 zero crossings at the cutoff).
// Output length is round(n * target_rate / source_rate).
AudioClip resample(const AudioClip& clip, int target_rate);

}  // namespace againvc
