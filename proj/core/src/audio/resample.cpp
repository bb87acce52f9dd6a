// core/src/audio/resample.cpp

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

#include "againvc/audio/resample.hpp"

#include <algorithm>
#include <cmath>

#include "againvc/errors.hpp"

namespace againvc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kZeroCrossings = 32;

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  double px = kPi * x;
  return std::sin(px) / px;
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_rate) {
  if (clip.sample_rate <= 0 || target_rate <= 0)
    throw InvalidInputError("resample: sample rates must be positive");
  if (clip.samples.size() == 0) throw EmptyInputError("resample: empty clip");
  if (clip.sample_rate == target_rate) return clip;

  const Eigen::Index n_in = clip.samples.size();
  const double step = static_cast<double>(clip.sample_rate) / target_rate;  // input samples per output sample
  const Eigen::Index n_out = static_cast<Eigen::Index>(
      std::llround(static_cast<double>(n_in) * target_rate / clip.sample_rate));

  // Anti-aliasing cutoff at the narrower Nyquist, in cycles per input sample.
  const double cutoff = 0.5 * std::min(1.0, 1.0 / step);
  const double half_width = kZeroCrossings / (2.0 * cutoff);

  AudioClip out;
  out.sample_rate = target_rate;
  out.samples.resize(n_out);

  for (Eigen::Index m = 0; m < n_out; ++m) {
    const double center = static_cast<double>(m) * step;
    const auto lo = static_cast<Eigen::Index>(std::ceil(center - half_width));
    const auto hi = static_cast<Eigen::Index>(std::floor(center + half_width));
    double acc = 0.0;
    for (Eigen::Index i = std::max<Eigen::Index>(lo, 0); i <= std::min(hi, n_in - 1); ++i) {
      const double t = static_cast<double>(i) - center;
      const double win = 0.5 + 0.5 * std::cos(kPi * t / half_width);
      acc += clip.samples[i] * 2.0 * cutoff * sinc(2.0 * cutoff * t) * win;
    }
    out.samples[m] = acc;
  }
  return out;
}

}  // namespace againvc
