// core/src/audio/pipeline.cpp

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

#include "againvc/audio/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "againvc/audio/resample.hpp"
#include "againvc/audio/wav.hpp"
#include "againvc/errors.hpp"

namespace againvc {

AudioClip load_and_normalize(const std::filesystem::path& path, int target_rate) {
  WavData wav = read_wav(path);
  if (wav.samples.cols() == 0) throw EmptyInputError("empty audio: " + path.string());

  AudioClip clip;
  clip.sample_rate = wav.sample_rate;
  clip.samples = wav.samples.colwise().mean().transpose();  // downmix

  if (clip.sample_rate != target_rate) clip = resample(clip, target_rate);

  const double peak = clip.samples.cwiseAbs().maxCoeff();
  if (peak > 0.0) clip.samples /= peak;
  return clip;
}

AudioClip trim_silence(const AudioClip& clip, double threshold_db, int frame_length) {
  if (threshold_db >= 0.0) throw InvalidInputError("trim_silence: threshold must be < 0 dB");
  if (frame_length <= 0) throw InvalidInputError("trim_silence: bad frame length");
  const Eigen::Index n = clip.samples.size();
  if (n == 0) throw EmptyInputError("trim_silence: empty clip");

  const double peak = clip.samples.cwiseAbs().maxCoeff();
  if (peak <= 0.0) throw EmptyInputError("trim_silence: all-zero clip");
  const double thr = peak * std::pow(10.0, threshold_db / 20.0);

  const Eigen::Index n_frames = (n + frame_length - 1) / frame_length;
  auto frame_rms = [&](Eigen::Index f) {
    const Eigen::Index lo = f * frame_length;
    const Eigen::Index len = std::min<Eigen::Index>(frame_length, n - lo);
    return std::sqrt(clip.samples.segment(lo, len).squaredNorm() / static_cast<double>(len));
  };

  Eigen::Index first = 0;
  while (first < n_frames && frame_rms(first) < thr) ++first;
  Eigen::Index last = n_frames - 1;
  while (last >= first && frame_rms(last) < thr) --last;
  if (first > last) throw EmptyInputError("trim_silence: clip is entirely silent");

  const Eigen::Index lo = first * frame_length;
  const Eigen::Index hi = std::min(n, (last + 1) * frame_length);
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples = clip.samples.segment(lo, hi - lo);
  return out;
}

MelSegment sample_segment(const Mat& mel, Rng& rng, double pad_value) {
  const Eigen::Index t = mel.cols();
  MelSegment seg;
  if (t >= kSegmentFrames) {
    const auto offset =
        static_cast<Eigen::Index>(rng.uniform_int(static_cast<uint64_t>(t - kSegmentFrames + 1)));
    seg.values = mel.middleCols(offset, kSegmentFrames);
  } else {
    seg.values = Mat::Constant(mel.rows(), kSegmentFrames, pad_value);
    seg.values.leftCols(t) = mel;
    seg.padded = true;
  }
  return seg;
}

}  // namespace againvc
