// core/src/model/network.cpp

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

#include "againvc/model/network.hpp"

#include <cmath>

#include "againvc/audio/pipeline.hpp"
#include "againvc/errors.hpp"

namespace againvc {

// ---------------------------------------------------------------------------
// Conv1dLayer
// ---------------------------------------------------------------------------

Conv1dLayer::Conv1dLayer(const std::string& name, int in_ch, int out_ch, int kernel)
    : w(name + ".w", out_ch, static_cast<Eigen::Index>(in_ch) * kernel),
      b(name + ".b", out_ch, 1),
      in_ch_(in_ch),
      out_ch_(out_ch),
      kernel_(kernel) {}

void Conv1dLayer::init(Rng& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in_ch_) * kernel_);
  for (Eigen::Index c = 0; c < w.value.cols(); ++c)
    for (Eigen::Index r = 0; r < w.value.rows(); ++r)
      w.value(r, c) = rng.uniform(-bound, bound);
  b.value.setZero();
}

std::vector<Mat> Conv1dLayer::forward(const std::vector<Mat>& xs, ConvCache* cache) const {
  if (xs.empty()) throw ShapeError("conv: empty batch");
  const auto batch = static_cast<int>(xs.size());
  const auto t = static_cast<int>(xs[0].cols());
  for (const Mat& x : xs)
    if (x.rows() != in_ch_ || x.cols() != t) throw ShapeError("conv: inconsistent input shape");

  ConvCache local;
  ConvCache& cc = cache != nullptr ? *cache : local;
  cc.batch = batch;
  cc.t = t;
  im2col(xs, kernel_, cc.cols);

  Mat y_all = w.value * cc.cols;
  y_all.colwise() += b.value.col(0);

  std::vector<Mat> ys(static_cast<size_t>(batch));
  for (int s = 0; s < batch; ++s)
    ys[static_cast<size_t>(s)] = y_all.middleCols(static_cast<Eigen::Index>(s) * t, t);
  return ys;
}

std::vector<Mat> Conv1dLayer::backward(const ConvCache& cache, const std::vector<Mat>& g_ys,
                                       bool need_input_grad) {
  const int batch = cache.batch;
  const int t = cache.t;
  Mat g_all(out_ch_, static_cast<Eigen::Index>(batch) * t);
  for (int s = 0; s < batch; ++s)
    g_all.middleCols(static_cast<Eigen::Index>(s) * t, t) = g_ys[static_cast<size_t>(s)];

  w.grad.noalias() += g_all * cache.cols.transpose();
  b.grad.col(0) += g_all.rowwise().sum();

  if (!need_input_grad) return {};
  const Mat g_cols = w.value.transpose() * g_all;
  return col2im(g_cols, in_ch_, kernel_, batch, t);
}

// ---------------------------------------------------------------------------
// StyleStats
// ---------------------------------------------------------------------------

Vec StyleStats::flattened() const {
  Eigen::Index total = 0;
  for (const auto& l : layers) total += l.mu.size() + l.sigma.size();
  Vec out(total);
  Eigen::Index at = 0;
  for (const auto& l : layers) {
    out.segment(at, l.mu.size()) = l.mu;
    at += l.mu.size();
    out.segment(at, l.sigma.size()) = l.sigma;
    at += l.sigma.size();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Encoder
// ---------------------------------------------------------------------------

namespace {

std::vector<Conv1dLayer> make_encoder_blocks(const ModelConfig& cfg, const std::string& prefix) {
  std::vector<Conv1dLayer> blocks;
  int in_ch = cfg.n_mels;
  for (int l = 0; l < cfg.n_blocks(); ++l) {
    blocks.emplace_back(prefix + ".block" + std::to_string(l), in_ch,
                        cfg.widths[static_cast<size_t>(l)], cfg.kernel);
    in_ch = cfg.widths[static_cast<size_t>(l)];
  }
  return blocks;
}

}  // namespace

Encoder::Encoder(const ModelConfig& cfg, const std::string& prefix)
    : blocks_(make_encoder_blocks(cfg, prefix)),
      bottleneck_(prefix + ".bottleneck", cfg.widths.back(), cfg.bottleneck, cfg.kernel),
      activation_(cfg.activation),
      epsilon_(cfg.epsilon) {}

void Encoder::init(Rng& rng) {
  for (auto& blk : blocks_) blk.init(rng);
  bottleneck_.init(rng);
}

void Encoder::forward(const std::vector<Mat>& xs, EncoderCache* cache,
                      std::vector<Mat>* contents, std::vector<StyleStats>* styles) const {
  const size_t batch = xs.size();
  const size_t n = blocks_.size();

  EncoderCache local;
  EncoderCache& ec = cache != nullptr ? *cache : local;
  ec.conv.assign(n, {});
  ec.in.assign(n, {});

  if (styles != nullptr) {
    styles->assign(batch, {});
    for (auto& s : *styles) s.layers.resize(n);
  }

  std::vector<Mat> cur = xs;
  for (size_t l = 0; l < n; ++l) {
    cur = blocks_[l].forward(cur, &ec.conv[l]);
    ec.in[l].resize(batch);
    for (size_t s = 0; s < batch; ++s) {
      ec.in[l][s] = instance_norm(cur[s], epsilon_);
      if (styles != nullptr)
        (*styles)[s].layers[l] = {ec.in[l][s].mu, ec.in[l][s].sigma};
      cur[s] = ec.in[l][s].y;
    }
  }

  ec.preact = bottleneck_.forward(cur, &ec.bneck);
  ec.content.resize(batch);
  for (size_t s = 0; s < batch; ++s)
    ec.content[s] = apply_activation(ec.preact[s], activation_);
  if (contents != nullptr) *contents = ec.content;
}

std::vector<Mat> Encoder::backward(const EncoderCache& cache, const std::vector<Mat>* g_contents,
                                   const std::vector<StyleGrads>* g_styles,
                                   bool need_input_grad) {
  const size_t n = blocks_.size();
  const size_t batch = cache.in[0].size();

  std::vector<Mat> g_y;  // grad w.r.t. the current block's IN output; empty == zero
  if (g_contents != nullptr) {
    std::vector<Mat> g_pre(batch);
    for (size_t s = 0; s < batch; ++s)
      g_pre[s] =
          activation_backward(cache.preact[s], cache.content[s], activation_, (*g_contents)[s]);
    g_y = bottleneck_.backward(cache.bneck, g_pre, true);
  }

  for (size_t l = n; l-- > 0;) {
    std::vector<Mat> g_z(batch);
    for (size_t s = 0; s < batch; ++s) {
      const InCache& in = cache.in[l][s];
      Mat gz;
      if (!g_y.empty())
        gz = instance_norm_backward(in, g_y[s]);
      else
        gz = Mat::Zero(in.y.rows(), in.y.cols());
      if (g_styles != nullptr) {
        // stats path: dmu/dz = 1/T, dsigma/dz = y/T
        const auto& layer = (*g_styles)[s].layers[l];
        const double t = static_cast<double>(in.y.cols());
        gz.noalias() += (in.y.array().colwise() * (layer.sigma.array() / t)).matrix();
        gz.colwise() += layer.mu / t;
      }
      g_z[s] = std::move(gz);
    }
    g_y = blocks_[l].backward(cache.conv[l], g_z, l > 0 || need_input_grad);
  }
  return g_y;
}

std::vector<Param*> Encoder::params() {
  std::vector<Param*> out;
  for (auto& blk : blocks_) {
    out.push_back(&blk.w);
    out.push_back(&blk.b);
  }
  out.push_back(&bottleneck_.w);
  out.push_back(&bottleneck_.b);
  return out;
}

std::vector<const Param*> Encoder::params() const {
  auto mut = const_cast<Encoder*>(this)->params();
  return {mut.begin(), mut.end()};
}

// ---------------------------------------------------------------------------
// Decoder
// ---------------------------------------------------------------------------

Decoder::Decoder(const ModelConfig& cfg)
    : out_conv_("decoder.out", cfg.widths.front(), cfg.n_mels, cfg.kernel),
      n_blocks_(cfg.n_blocks()),
      epsilon_(cfg.epsilon) {
  int in_ch = cfg.bottleneck;
  for (int i = 0; i < n_blocks_; ++i) {
    const int out_ch = cfg.widths[static_cast<size_t>(n_blocks_ - 1 - i)];
    blocks_.emplace_back("decoder.block" + std::to_string(i), in_ch, out_ch, cfg.kernel);
    in_ch = out_ch;
  }
}

void Decoder::init(Rng& rng) {
  for (auto& blk : blocks_) blk.init(rng);
  out_conv_.init(rng);
}

std::vector<Mat> Decoder::forward(const std::vector<Mat>& contents,
                                  const std::vector<StyleStats>& styles,
                                  DecoderCache* cache) const {
  const size_t batch = contents.size();
  if (styles.size() != batch) throw ShapeError("decode: style/content batch mismatch");
  for (const auto& s : styles)
    if (static_cast<int>(s.layers.size()) != n_blocks_)
      throw ShapeError("decode: style layer count != decoder block count");

  DecoderCache local;
  DecoderCache& dc = cache != nullptr ? *cache : local;
  dc.conv.assign(blocks_.size(), {});
  dc.adain.assign(blocks_.size(), {});

  std::vector<Mat> cur = contents;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    cur = blocks_[i].forward(cur, &dc.conv[i]);
    const size_t style_layer = static_cast<size_t>(n_blocks_) - 1 - i;
    dc.adain[i].resize(batch);
    for (size_t s = 0; s < batch; ++s) {
      const ChannelStats& st = styles[s].layers[style_layer];
      if (st.mu.size() != cur[s].rows())
        throw ShapeError("decode: style width mismatch at layer " + std::to_string(style_layer));
      dc.adain[i][s] = adain(cur[s], st.mu, st.sigma, epsilon_);
      cur[s] = dc.adain[i][s].y;
    }
  }
  return out_conv_.forward(cur, &dc.out);
}

DecoderGrads Decoder::backward(const DecoderCache& cache, const std::vector<Mat>& g_outs) {
  const size_t batch = g_outs.size();

  DecoderGrads grads;
  grads.g_styles.assign(batch, {});
  for (auto& s : grads.g_styles) s.layers.resize(static_cast<size_t>(n_blocks_));

  std::vector<Mat> g = out_conv_.backward(cache.out, g_outs, true);
  for (size_t i = blocks_.size(); i-- > 0;) {
    const size_t style_layer = static_cast<size_t>(n_blocks_) - 1 - i;
    for (size_t s = 0; s < batch; ++s) {
      AdainGrads ag = adain_backward(cache.adain[i][s], g[s]);
      grads.g_styles[s].layers[style_layer] = {std::move(ag.g_mu), std::move(ag.g_sigma)};
      g[s] = std::move(ag.g_h);
    }
    g = blocks_[i].backward(cache.conv[i], g, true);
  }
  grads.g_contents = std::move(g);
  return grads;
}

std::vector<Param*> Decoder::params() {
  std::vector<Param*> out;
  for (auto& blk : blocks_) {
    out.push_back(&blk.w);
    out.push_back(&blk.b);
  }
  out.push_back(&out_conv_.w);
  out.push_back(&out_conv_.b);
  return out;
}

std::vector<const Param*> Decoder::params() const {
  auto mut = const_cast<Decoder*>(this)->params();
  return {mut.begin(), mut.end()};
}

// ---------------------------------------------------------------------------
// AgainVcModel
// ---------------------------------------------------------------------------

AgainVcModel::AgainVcModel(const ModelConfig& cfg)
    : cfg_((cfg.validate(), cfg)), encoder_(cfg, "encoder"), decoder_(cfg) {
  if (cfg_.variant == EncoderVariant::dual_encoder)
    style_encoder_ = std::make_unique<Encoder>(cfg_, "style_encoder");
}

void AgainVcModel::init(uint64_t seed) {
  Rng rng(derive_seed(seed, "weight-init"));
  encoder_.init(rng);
  if (style_encoder_) style_encoder_->init(rng);
  decoder_.init(rng);
}

std::vector<Param*> AgainVcModel::params() {
  std::vector<Param*> out = encoder_.params();
  if (style_encoder_) {
    auto sp = style_encoder_->params();
    out.insert(out.end(), sp.begin(), sp.end());
  }
  auto dp = decoder_.params();
  out.insert(out.end(), dp.begin(), dp.end());
  return out;
}

std::vector<const Param*> AgainVcModel::params() const {
  auto mut = const_cast<AgainVcModel*>(this)->params();
  return {mut.begin(), mut.end()};
}

size_t AgainVcModel::parameter_count() const {
  size_t total = 0;
  for (const Param* p : params()) total += static_cast<size_t>(p->value.size());
  return total;
}

void AgainVcModel::zero_grad() {
  for (Param* p : params()) p->grad.setZero();
}

EncodeResult AgainVcModel::encode(const Mat& x) const {
  if (x.rows() != cfg_.n_mels) throw ShapeError("encode: input row count != n_mels");
  std::vector<Mat> xs{x};
  std::vector<Mat> contents;
  std::vector<StyleStats> styles;
  encoder_.forward(xs, nullptr, &contents, &styles);
  EncodeResult res;
  res.content = std::move(contents[0]);
  if (style_encoder_) {
    std::vector<StyleStats> sstyles;
    style_encoder_->forward(xs, nullptr, nullptr, &sstyles);
    res.style = std::move(sstyles[0]);
  } else {
    res.style = std::move(styles[0]);
  }
  return res;
}

Mat AgainVcModel::decode(const Mat& content, const StyleStats& style) const {
  std::vector<Mat> contents{content};
  std::vector<StyleStats> styles{style};
  auto outs = decoder_.forward(contents, styles, nullptr);
  return outs[0];
}

Mat AgainVcModel::reconstruct(const Mat& x) const {
  EncodeResult enc = encode(x);
  return decode(enc.content, enc.style);
}

Mat AgainVcModel::convert(const Mat& source, const Mat& target) const {
  if (source.rows() != cfg_.n_mels || target.rows() != cfg_.n_mels)
    throw ShapeError("convert: input row count != n_mels");
  if (source.cols() < 1 || target.cols() < 1) throw ShapeError("convert: empty input");

  const StyleStats style = encode(target).style;
  const Eigen::Index t = source.cols();
  Mat out(cfg_.n_mels, t);

  if (t < kSegmentFrames) {
    // Tile the short source cyclically on the left, decode, keep the tail.
    const Eigen::Index copies = (kSegmentFrames + t - 1) / t;
    Mat tiled(cfg_.n_mels, copies * t);
    for (Eigen::Index c = 0; c < copies; ++c) tiled.middleCols(c * t, t) = source;
    const Mat window = tiled.rightCols(kSegmentFrames);
    const Mat decoded = decode(encode(window).content, style);
    out = decoded.rightCols(t);
    return out;
  }

  Eigen::Index done = 0;
  while (done < t) {
    const Eigen::Index remaining = t - done;
    if (remaining >= kSegmentFrames) {
      const Mat window = source.middleCols(done, kSegmentFrames);
      out.middleCols(done, kSegmentFrames) = decode(encode(window).content, style);
      done += kSegmentFrames;
    } else {
      // trailing short window: left-pad with the frames that precede it
      const Mat window = source.middleCols(t - kSegmentFrames, kSegmentFrames);
      const Mat decoded = decode(encode(window).content, style);
      out.middleCols(done, remaining) = decoded.rightCols(remaining);
      done = t;
    }
  }
  return out;
}

double AgainVcModel::forward_backward(const std::vector<Mat>& batch) {
  if (batch.empty()) throw ShapeError("forward_backward: empty batch");
  const size_t b = batch.size();
  const double inv_b = 1.0 / static_cast<double>(b);

  EncoderCache ecache;
  std::vector<Mat> contents;
  std::vector<StyleStats> styles;
  encoder_.forward(batch, &ecache, &contents, &styles);

  EncoderCache scache;
  if (style_encoder_) {
    std::vector<StyleStats> sstyles;
    style_encoder_->forward(batch, &scache, nullptr, &sstyles);
    styles = std::move(sstyles);
  }

  DecoderCache dcache;
  std::vector<Mat> outs = decoder_.forward(contents, styles, &dcache);

  double loss = 0.0;
  std::vector<Mat> g_outs(b);
  for (size_t s = 0; s < b; ++s) {
    loss += l1_loss(batch[s], outs[s]);
    g_outs[s] = l1_loss_backward(batch[s], outs[s]) * inv_b;
  }
  loss *= inv_b;

  DecoderGrads dg = decoder_.backward(dcache, g_outs);
  if (style_encoder_) {
    encoder_.backward(ecache, &dg.g_contents, nullptr);
    style_encoder_->backward(scache, nullptr, &dg.g_styles);
  } else {
    encoder_.backward(ecache, &dg.g_contents, &dg.g_styles);
  }
  return loss;
}

}  // namespace againvc
