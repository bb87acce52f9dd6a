// core/include/againvc/model/network.hpp

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

#include <memory>
#include <string>
#include <vector>

#include "againvc/matrix.hpp"
#include "againvc/model/config.hpp"
#include "againvc/model/ops.hpp"
#include "againvc/rng.hpp"

namespace againvc {

// A trainable tensor with its gradient accumulator.
struct Param {
  std::string name;
  Mat value;
  Mat grad;

  Param(std::string n, Eigen::Index rows, Eigen::Index cols)
      : name(std::move(n)), value(Mat::Zero(rows, cols)), grad(Mat::Zero(rows, cols)) {}
};

struct ConvCache {
  Mat cols;  // im2col buffer, (in_ch * kernel) x (batch * t)
  int batch = 0;
  int t = 0;
};

// Same-length 1-D convolution layer. A batch shares one im2col buffer so the
// whole layer runs as a single GEMM.
class Conv1dLayer {
 public:
  Conv1dLayer(const std::string& name, int in_ch, int out_ch, int kernel);

  void init(Rng& rng);  // fan-in scaled uniform weights, zero bias

  std::vector<Mat> forward(const std::vector<Mat>& xs, ConvCache* cache) const;
  // Accumulates weight/bias gradients; returns input gradients
  // (empty when need_input_grad is false).
  std::vector<Mat> backward(const ConvCache& cache, const std::vector<Mat>& g_ys,
                            bool need_input_grad);

  int in_ch() const { return in_ch_; }
  int out_ch() const { return out_ch_; }
  int kernel() const { return kernel_; }

  Param w;  // out_ch x (in_ch * kernel)
  Param b;  // out_ch x 1

 private:
  int in_ch_;
  int out_ch_;
  int kernel_;
};

// Per-layer channel statistics collected by the encoder's IN layers; doubles
// as the per-layer gradient container on the backward pass.
struct StyleStats {
  std::vector<ChannelStats> layers;

  // mu_0, sigma_0, mu_1, sigma_1, ... concatenated
  Vec flattened() const;
};

using StyleGrads = StyleStats;

struct EncodeResult {
  Mat content;  // bottleneck channels x t, post activation
  StyleStats style;
};

struct EncoderCache {
  std::vector<ConvCache> conv;             // per block
  std::vector<std::vector<InCache>> in;    // per block, per sample
  ConvCache bneck;
  std::vector<Mat> preact;   // bottleneck conv output
  std::vector<Mat> content;  // post activation
};

class Encoder {
 public:
  Encoder(const ModelConfig& cfg, const std::string& prefix);

  void init(Rng& rng);

  void forward(const std::vector<Mat>& xs, EncoderCache* cache, std::vector<Mat>* contents,
               std::vector<StyleStats>* styles) const;

  // Either gradient source may be null (treated as zero): the dual-encoder
  // variant routes content grads to one encoder and style grads to the other.
  std::vector<Mat> backward(const EncoderCache& cache, const std::vector<Mat>* g_contents,
                            const std::vector<StyleGrads>* g_styles,
                            bool need_input_grad = false);

  std::vector<Param*> params();
  std::vector<const Param*> params() const;

 private:
  std::vector<Conv1dLayer> blocks_;
  Conv1dLayer bottleneck_;
  ActivationSpec activation_;
  double epsilon_;
};

struct DecoderCache {
  std::vector<ConvCache> conv;                  // per block
  std::vector<std::vector<AdainCache>> adain;   // per block, per sample
  ConvCache out;
};

struct DecoderGrads {
  std::vector<Mat> g_contents;
  std::vector<StyleGrads> g_styles;
};

class Decoder {
 public:
  explicit Decoder(const ModelConfig& cfg);

  void init(Rng& rng);

  // styles[s].layers must match the encoder layout; they are consumed in
  // reverse block order.
  std::vector<Mat> forward(const std::vector<Mat>& contents,
                           const std::vector<StyleStats>& styles, DecoderCache* cache) const;

  DecoderGrads backward(const DecoderCache& cache, const std::vector<Mat>& g_outs);

  std::vector<Param*> params();
  std::vector<const Param*> params() const;

 private:
  std::vector<Conv1dLayer> blocks_;
  Conv1dLayer out_conv_;
  int n_blocks_;
  double epsilon_;
};

// The full auto-encoder. One encoder pass yields both the content embedding
// (activation-bottlenecked feature map) and the speaker embedding (stacked
// per-layer channel statistics); the decoder re-injects the statistics
// through AdaIN in reverse layer order. The dual-encoder variant adds an
// architecturally identical second encoder that serves the style path only.
class AgainVcModel {
 public:
  explicit AgainVcModel(const ModelConfig& cfg);

  void init(uint64_t seed);

  const ModelConfig& config() const { return cfg_; }

  std::vector<Param*> params();
  std::vector<const Param*> params() const;
  size_t parameter_count() const;
  void zero_grad();

  EncodeResult encode(const Mat& x) const;
  Mat decode(const Mat& content, const StyleStats& style) const;
  Mat reconstruct(const Mat& x) const;

  // Windowed conversion: content from 128-frame source windows, style from
  // one encoder pass over the whole target. The trailing short window is
  // left-padded by repetition and trimmed after decoding.
  Mat convert(const Mat& source, const Mat& target) const;

  // Mean L1 reconstruction loss over the batch; fills parameter gradients.
  double forward_backward(const std::vector<Mat>& batch);

 private:
  ModelConfig cfg_;
  Encoder encoder_;
  std::unique_ptr<Encoder> style_encoder_;  // dual_encoder variant only
  Decoder decoder_;
};

}  // namespace againvc
