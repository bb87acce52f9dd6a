// core/include/againvc/model/config.hpp

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

#include <string>
#include <vector>

namespace againvc {

enum class ActivationKind { none, relu, elu, tanh, sigmoid };

// Bottleneck nonlinearity applied to the content embedding. alpha is the
// sigmoid slope and is ignored by the other kinds.
struct ActivationSpec {
  ActivationKind kind = ActivationKind::none;
  double alpha = 1.0;

  void validate() const;
  std::string str() const;  // "none", "relu", ..., "sigmoid:0.1"
  static ActivationSpec parse(const std::string& text);

  bool operator==(const ActivationSpec&) const = default;
};

enum class EncoderVariant { single_encoder, dual_encoder };

std::string variant_name(EncoderVariant v);
EncoderVariant parse_variant(const std::string& name);

struct ModelConfig {
  int n_mels = 80;
  std::vector<int> widths = {256, 256, 256, 256};  // encoder block widths
  int bottleneck = 4;                              // content embedding channels
  int kernel = 5;                                  // odd; same-length convolutions
  double epsilon = 1e-5;                           // added to the time variance
  ActivationSpec activation = {ActivationKind::sigmoid, 0.1};
  EncoderVariant variant = EncoderVariant::single_encoder;

  int n_blocks() const { return static_cast<int>(widths.size()); }
  void validate() const;

  std::string to_json_string() const;
  static ModelConfig from_json_string(const std::string& s);

  // Small configuration for fast experiments on synthetic corpora.
  static ModelConfig desk();
  // Pointwise convolutions; time-permutation tests rely on it.
  static ModelConfig kernel1_test();

  bool operator==(const ModelConfig&) const = default;
};

}  // namespace againvc
