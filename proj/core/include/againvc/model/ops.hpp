// core/include/againvc/model/ops.hpp

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

#include <vector>

#include "againvc/matrix.hpp"
#include "againvc/model/config.hpp"

namespace againvc {

// ---------------------------------------------------------------------------
// Channel-wise statistics over the time axis.
//
// mu[c]    = mean_t z[c, t]
// sigma[c] = sqrt(var_t z[c, t] + epsilon)      (biased 1/T variance)
//
// sigma is strictly positive for epsilon > 0, so these vectors double as the
// speaker embedding without any extra stabilization downstream.
// ---------------------------------------------------------------------------
struct ChannelStats {
  Vec mu;
  Vec sigma;
};

ChannelStats channel_stats(const Mat& z, double epsilon);

// Gradient of (g_mu, g_sigma) w.r.t. z:
//   dL/dz[c,t] = g_mu[c]/T + g_sigma[c] * (z[c,t] - mu[c]) / (T * sigma[c])
Mat channel_stats_backward(const Mat& z, const ChannelStats& stats, const Vec& g_mu,
                           const Vec& g_sigma);

// ---------------------------------------------------------------------------
// Instance normalization: IN(z) = (z - mu(z)) / sigma(z), per channel.
// ---------------------------------------------------------------------------
struct InCache {
  Mat y;  // normalized output
  Vec mu;
  Vec sigma;
};

InCache instance_norm(const Mat& z, double epsilon);

// dL/dz = (1/sigma) * (g - mean(g) - y * mean(g .* y)), per channel.
Mat instance_norm_backward(const InCache& cache, const Mat& g_y);

// ---------------------------------------------------------------------------
// Adaptive instance normalization:
// AdaIN(h, mu, sigma) = sigma .* IN(h) + mu   (broadcast over time).
// ---------------------------------------------------------------------------
struct AdainCache {
  Mat y;
  InCache in;  // IN(h) and its stats
  Vec mu;      // injected style
  Vec sigma;
};

AdainCache adain(const Mat& h, const Vec& mu, const Vec& sigma, double epsilon);

struct AdainGrads {
  Mat g_h;
  Vec g_mu;
  Vec g_sigma;
};

AdainGrads adain_backward(const AdainCache& cache, const Mat& g_y);

// ---------------------------------------------------------------------------
// Elementwise bottleneck activations.
// ---------------------------------------------------------------------------
Mat apply_activation(const Mat& x, const ActivationSpec& spec);

// g_x given the forward input x, forward output y and upstream gradient g_y.
Mat activation_backward(const Mat& x, const Mat& y, const ActivationSpec& spec, const Mat& g_y);

// ---------------------------------------------------------------------------
// Mean absolute reconstruction error over all elements.
// ---------------------------------------------------------------------------
double l1_loss(const Mat& x, const Mat& x_hat);
Mat l1_loss_backward(const Mat& x, const Mat& x_hat);  // d loss / d x_hat

// ---------------------------------------------------------------------------
// Same-length 1-D convolution over the time axis (zero padding (k-1)/2).
// Weight layout: w(out, c*k + j), bias b(out). One-shot form used by tests
// and single-sample paths; the batched layer lives in network.hpp.
// ---------------------------------------------------------------------------
Mat conv1d(const Mat& x, const Mat& w, const Vec& b, int kernel);

// im2col helpers shared by the network layer.
// cols has shape (in_channels * kernel) x (batch * t).
void im2col(const std::vector<Mat>& xs, int kernel, Mat& cols);
std::vector<Mat> col2im(const Mat& g_cols, int in_channels, int kernel, int batch, int t);

// ---------------------------------------------------------------------------
// Softmax cross-entropy for the probe classifiers. Logits are column vectors.
// ---------------------------------------------------------------------------
double softmax_cross_entropy(const Vec& logits, int label, Vec* grad = nullptr);

}  // namespace againvc
