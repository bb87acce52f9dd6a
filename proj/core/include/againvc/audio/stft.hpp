// core/include/againvc/audio/stft.hpp

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

#include <complex>
#include <vector>

#include "againvc/matrix.hpp"

namespace againvc {

// In-place iterative radix-2 FFT; size must be a power of two.
// inverse=true applies the conjugate transform and the 1/N scale.
void fft(std::vector<std::complex<double>>& a, bool inverse);

Vec hann_periodic(int n);

// Centered STFT: the signal is reflect-padded by n_fft/2 on both sides, so
// frame count is 1 + floor(len / hop). Returns (n_fft/2 + 1) x frames.
CMat stft(const Vec& x, int n_fft, int hop, bool center = true);

// Weighted overlap-add inverse of stft(). length < 0 reconstructs
// hop * (frames - 1) samples (the centered convention's natural length).
Vec istft(const CMat& spec, int n_fft, int hop, bool center = true, long length = -1);

}  // namespace againvc
