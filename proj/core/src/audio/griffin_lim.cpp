// core/src/audio/griffin_lim.cpp

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

#include "againvc/audio/griffin_lim.hpp"

#include <cmath>

#include "againvc/audio/stft.hpp"
#include "againvc/errors.hpp"

namespace againvc {

AudioClip griffin_lim_invert(const Mat& log_mel, const MelConfig& cfg, int iterations,
                             bool normalize) {
  if (!log_mel.allFinite()) throw InvalidInputError("griffin_lim: non-finite mel input");
  if (log_mel.rows() != cfg.n_mels) throw ShapeError("griffin_lim: mel row count != n_mels");
  if (iterations < 1) throw InvalidInputError("griffin_lim: iterations must be >= 1");

  // Undo the log compression, then invert the filterbank:
  // s = Fb^T (Fb Fb^T + lambda I)^{-1} e, clamped at zero.
  const Mat energies = log_mel.array().exp().matrix();
  const Mat fb = mel_filterbank(cfg);
  Mat gram = fb * fb.transpose();
  gram.diagonal().array() += 1e-8;
  const Mat proj = fb.transpose() * gram.ldlt().solve(Mat::Identity(cfg.n_mels, cfg.n_mels));
  Mat mag = (proj * energies).cwiseMax(0.0);

  const Eigen::Index frames = mag.cols();
  const long n_samples = static_cast<long>(cfg.hop_length) * (frames - 1);
  if (n_samples <= 0) throw TooShortError("griffin_lim: need at least 2 frames");

  // zero phase initialization
  CMat spec = mag.cast<std::complex<double>>();
  Vec x;
  for (int it = 0; it < iterations; ++it) {
    x = istft(spec, cfg.n_fft, cfg.hop_length, cfg.center, n_samples);
    const CMat est = stft(x, cfg.n_fft, cfg.hop_length, cfg.center);
    const Eigen::Index t = std::min(est.cols(), frames);
    for (Eigen::Index f = 0; f < t; ++f) {
      for (Eigen::Index b = 0; b < est.rows(); ++b) {
        const double m = std::abs(est(b, f));
        spec(b, f) = mag(b, f) * (m > 1e-16 ? est(b, f) / m : 1.0);
      }
    }
  }
  x = istft(spec, cfg.n_fft, cfg.hop_length, cfg.center, n_samples);

  AudioClip out;
  out.sample_rate = cfg.sample_rate;
  out.samples = x;
  if (normalize) {
    const double peak = out.samples.cwiseAbs().maxCoeff();
    if (peak > 0.0) out.samples /= peak;
  }
  return out;
}

}  // namespace againvc
