// core/src/model/ops.cpp

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

#include "againvc/model/ops.hpp"

#include <cmath>

#include "againvc/errors.hpp"

namespace againvc {

ChannelStats channel_stats(const Mat& z, double epsilon) {
  if (z.cols() < 1) throw ShapeError("channel_stats: need at least one frame");
  if (!z.allFinite()) throw InvalidInputError("channel_stats: non-finite input");
  const double t = static_cast<double>(z.cols());
  ChannelStats s;
  s.mu = z.rowwise().mean();
  Vec var = (z.colwise() - s.mu).array().square().matrix().rowwise().sum() / t;
  s.sigma = (var.array() + epsilon).sqrt();
  return s;
}

Mat channel_stats_backward(const Mat& z, const ChannelStats& stats, const Vec& g_mu,
                           const Vec& g_sigma) {
  const double t = static_cast<double>(z.cols());
  // dmu/dz = 1/T; dsigma/dz[c,t] = (z[c,t]-mu[c]) / (T * sigma[c])
  Mat g = (z.colwise() - stats.mu);
  g.array().colwise() *= (g_sigma.array() / (t * stats.sigma.array()));
  g.colwise() += g_mu / t;
  return g;
}

InCache instance_norm(const Mat& z, double epsilon) {
  ChannelStats s = channel_stats(z, epsilon);
  InCache cache;
  cache.mu = std::move(s.mu);
  cache.sigma = std::move(s.sigma);
  cache.y = (z.colwise() - cache.mu).array().colwise() / cache.sigma.array();
  return cache;
}

Mat instance_norm_backward(const InCache& cache, const Mat& g_y) {
  const double t = static_cast<double>(cache.y.cols());
  const Vec g_mean = g_y.rowwise().sum() / t;
  const Vec gy_dot_y = (g_y.array() * cache.y.array()).matrix().rowwise().sum() / t;
  Mat g = g_y;
  g.colwise() -= g_mean;
  g.noalias() -= (cache.y.array().colwise() * gy_dot_y.array()).matrix();
  g.array().colwise() /= cache.sigma.array();
  return g;
}

AdainCache adain(const Mat& h, const Vec& mu, const Vec& sigma, double epsilon) {
  if (mu.size() != h.rows() || sigma.size() != h.rows())
    throw ShapeError("adain: style vector length != channel count");
  if ((sigma.array() <= 0.0).any()) throw InvalidInputError("adain: sigma must be positive");
  AdainCache cache;
  cache.in = instance_norm(h, epsilon);
  cache.mu = mu;
  cache.sigma = sigma;
  cache.y = (cache.in.y.array().colwise() * sigma.array()).matrix();
  cache.y.colwise() += mu;
  return cache;
}

AdainGrads adain_backward(const AdainCache& cache, const Mat& g_y) {
  AdainGrads g;
  g.g_mu = g_y.rowwise().sum();
  g.g_sigma = (g_y.array() * cache.in.y.array()).matrix().rowwise().sum();
  const Mat g_in = (g_y.array().colwise() * cache.sigma.array()).matrix();
  g.g_h = instance_norm_backward(cache.in, g_in);
  return g;
}

Mat apply_activation(const Mat& x, const ActivationSpec& spec) {
  switch (spec.kind) {
    case ActivationKind::none:
      return x;
    case ActivationKind::relu:
      return x.cwiseMax(0.0);
    case ActivationKind::elu:
      return x.unaryExpr([](double v) { return v > 0.0 ? v : std::expm1(v); });
    case ActivationKind::tanh:
      return x.array().tanh().matrix();
    case ActivationKind::sigmoid: {
      const double a = spec.alpha;
      return x.unaryExpr([a](double v) { return 1.0 / (1.0 + std::exp(-a * v)); });
    }
  }
  return x;
}

Mat activation_backward(const Mat& x, const Mat& y, const ActivationSpec& spec, const Mat& g_y) {
  switch (spec.kind) {
    case ActivationKind::none:
      return g_y;
    case ActivationKind::relu:
      return (x.array() > 0.0).cast<double>().matrix().cwiseProduct(g_y);
    case ActivationKind::elu:
      // y + 1 = exp(x) on the negative side
      return g_y.cwiseProduct(
          x.binaryExpr(y, [](double xv, double yv) { return xv > 0.0 ? 1.0 : yv + 1.0; }));
    case ActivationKind::tanh:
      return g_y.cwiseProduct((1.0 - y.array().square()).matrix());
    case ActivationKind::sigmoid: {
      const double a = spec.alpha;
      return g_y.cwiseProduct(
          y.unaryExpr([a](double yv) { return a * yv * (1.0 - yv); }));
    }
  }
  return g_y;
}

double l1_loss(const Mat& x, const Mat& x_hat) {
  if (x.rows() != x_hat.rows() || x.cols() != x_hat.cols())
    throw ShapeError("l1_loss: shape mismatch");
  return (x - x_hat).cwiseAbs().mean();
}

Mat l1_loss_backward(const Mat& x, const Mat& x_hat) {
  if (x.rows() != x_hat.rows() || x.cols() != x_hat.cols())
    throw ShapeError("l1_loss: shape mismatch");
  const double n = static_cast<double>(x.size());
  return (x_hat - x).unaryExpr([n](double d) {
    return d > 0.0 ? 1.0 / n : (d < 0.0 ? -1.0 / n : 0.0);
  });
}

void im2col(const std::vector<Mat>& xs, int kernel, Mat& cols) {
  const int pad = (kernel - 1) / 2;
  const auto batch = static_cast<Eigen::Index>(xs.size());
  const Eigen::Index c_in = xs[0].rows();
  const Eigen::Index t = xs[0].cols();
  cols.setZero(c_in * kernel, batch * t);
  for (Eigen::Index b = 0; b < batch; ++b) {
    const Mat& x = xs[static_cast<size_t>(b)];
    for (Eigen::Index c = 0; c < c_in; ++c) {
      for (int j = 0; j < kernel; ++j) {
        // output frame t reads input frame t + j - pad
        const Eigen::Index src_lo = std::max<Eigen::Index>(0, pad - j);
        const Eigen::Index src_hi = std::min(t, t + pad - j);
        if (src_hi <= src_lo) continue;
        cols.row(c * kernel + j)
            .segment(b * t + src_lo, src_hi - src_lo) =
            x.row(c).segment(src_lo + j - pad, src_hi - src_lo);
      }
    }
  }
}

std::vector<Mat> col2im(const Mat& g_cols, int in_channels, int kernel, int batch, int t) {
  const int pad = (kernel - 1) / 2;
  std::vector<Mat> gxs(static_cast<size_t>(batch));
  for (int b = 0; b < batch; ++b) {
    Mat gx = Mat::Zero(in_channels, t);
    for (int c = 0; c < in_channels; ++c) {
      for (int j = 0; j < kernel; ++j) {
        const Eigen::Index src_lo = std::max(0, pad - j);
        const Eigen::Index src_hi = std::min(t, t + pad - j);
        if (src_hi <= src_lo) continue;
        gx.row(c).segment(src_lo + j - pad, src_hi - src_lo) +=
            g_cols.row(c * kernel + j).segment(static_cast<Eigen::Index>(b) * t + src_lo,
                                               src_hi - src_lo);
      }
    }
    gxs[static_cast<size_t>(b)] = std::move(gx);
  }
  return gxs;
}

Mat conv1d(const Mat& x, const Mat& w, const Vec& b, int kernel) {
  if (w.cols() != x.rows() * kernel) throw ShapeError("conv1d: weight/input channel mismatch");
  if (b.size() != w.rows()) throw ShapeError("conv1d: bias length != output channels");
  std::vector<Mat> xs{x};
  Mat cols;
  im2col(xs, kernel, cols);
  Mat y = w * cols;
  y.colwise() += b;
  return y;
}

double softmax_cross_entropy(const Vec& logits, int label, Vec* grad) {
  if (label < 0 || label >= logits.size())
    throw InvalidInputError("softmax_cross_entropy: label out of range");
  const double m = logits.maxCoeff();
  Vec e = (logits.array() - m).exp();
  const double z = e.sum();
  const double loss = std::log(z) - (logits[label] - m);
  if (grad != nullptr) {
    *grad = e / z;
    (*grad)[label] -= 1.0;
  }
  return loss;
}

}  // namespace againvc
