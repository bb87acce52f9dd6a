// core/src/audio/stft.cpp

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

#include "againvc/audio/stft.hpp"

#include <cmath>

#include "againvc/errors.hpp"

namespace againvc {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Reflect-pad: [d c b | a b c d ... w x y z | y x w]
Vec reflect_pad(const Vec& x, int pad) {
  const Eigen::Index n = x.size();
  if (n < 2) throw TooShortError("reflect padding needs at least 2 samples");
  Vec out(n + 2 * pad);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    Eigen::Index j = i - pad;
    // fold into [0, n-1] by reflecting off both edges
    while (j < 0 || j >= n) {
      if (j < 0) j = -j;
      if (j >= n) j = 2 * (n - 1) - j;
    }
    out[i] = x[j];
  }
  return out;
}

}  // namespace

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (!is_pow2(static_cast<int>(n))) throw InvalidInputError("fft size must be a power of two");

  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    for (auto& v : a) v /= static_cast<double>(n);
  }
}

Vec hann_periodic(int n) {
  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / n);
  return w;
}

CMat stft(const Vec& x, int n_fft, int hop, bool center) {
  if (!is_pow2(n_fft)) throw InvalidInputError("stft: n_fft must be a power of two");
  if (hop <= 0) throw InvalidInputError("stft: hop must be positive");
  if (x.size() < (center ? 2 : n_fft)) throw TooShortError("stft: signal too short");

  const Vec sig = center ? reflect_pad(x, n_fft / 2) : x;
  const Eigen::Index frames = 1 + (sig.size() - n_fft) / hop;
  const Vec win = hann_periodic(n_fft);
  const int n_bins = n_fft / 2 + 1;

  CMat out(n_bins, frames);
  std::vector<std::complex<double>> buf(static_cast<size_t>(n_fft));
  for (Eigen::Index f = 0; f < frames; ++f) {
    const Eigen::Index off = f * hop;
    for (int i = 0; i < n_fft; ++i)
      buf[static_cast<size_t>(i)] = sig[off + i] * win[i];
    fft(buf, false);
    for (int b = 0; b < n_bins; ++b) out(b, f) = buf[static_cast<size_t>(b)];
  }
  return out;
}

Vec istft(const CMat& spec, int n_fft, int hop, bool center, long length) {
  if (!is_pow2(n_fft)) throw InvalidInputError("istft: n_fft must be a power of two");
  const int n_bins = n_fft / 2 + 1;
  if (spec.rows() != n_bins) throw ShapeError("istft: spectrogram row count != n_fft/2+1");
  const Eigen::Index frames = spec.cols();
  if (frames < 1) throw ShapeError("istft: no frames");

  const Vec win = hann_periodic(n_fft);
  const Eigen::Index full = n_fft + hop * (frames - 1);
  Vec acc = Vec::Zero(full);
  Vec norm = Vec::Zero(full);

  std::vector<std::complex<double>> buf(static_cast<size_t>(n_fft));
  for (Eigen::Index f = 0; f < frames; ++f) {
    for (int b = 0; b < n_bins; ++b) buf[static_cast<size_t>(b)] = spec(b, f);
    for (int b = n_bins; b < n_fft; ++b)
      buf[static_cast<size_t>(b)] = std::conj(spec(n_fft - b, f));
    fft(buf, true);
    const Eigen::Index off = f * hop;
    for (int i = 0; i < n_fft; ++i) {
      acc[off + i] += buf[static_cast<size_t>(i)].real() * win[i];
      norm[off + i] += win[i] * win[i];
    }
  }
  for (Eigen::Index i = 0; i < full; ++i)
    if (norm[i] > 1e-11) acc[i] /= norm[i];

  const Eigen::Index pad = center ? n_fft / 2 : 0;
  Eigen::Index want = length >= 0 ? length : hop * (frames - 1);
  want = std::min(want, full - pad);
  return acc.segment(pad, want);
}

}  // namespace againvc
