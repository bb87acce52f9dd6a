// core/src/model/config.cpp

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

#include "againvc/model/config.hpp"

#include <nlohmann/json.hpp>

#include "againvc/errors.hpp"

namespace againvc {

namespace {

const char* kind_name(ActivationKind k) {
  switch (k) {
    case ActivationKind::none: return "none";
    case ActivationKind::relu: return "relu";
    case ActivationKind::elu: return "elu";
    case ActivationKind::tanh: return "tanh";
    case ActivationKind::sigmoid: return "sigmoid";
  }
  return "none";
}

ActivationKind parse_kind(const std::string& s) {
  if (s == "none") return ActivationKind::none;
  if (s == "relu") return ActivationKind::relu;
  if (s == "elu") return ActivationKind::elu;
  if (s == "tanh") return ActivationKind::tanh;
  if (s == "sigmoid") return ActivationKind::sigmoid;
  throw InvalidInputError("unknown activation kind: " + s);
}

std::string format_alpha(double alpha) {
  nlohmann::json j = alpha;
  return j.dump();
}

}  // namespace

void ActivationSpec::validate() const {
  if (kind == ActivationKind::sigmoid && !(alpha > 0.0))
    throw InvalidInputError("sigmoid activation requires alpha > 0");
}

std::string ActivationSpec::str() const {
  if (kind == ActivationKind::sigmoid) return std::string("sigmoid:") + format_alpha(alpha);
  return kind_name(kind);
}

ActivationSpec ActivationSpec::parse(const std::string& text) {
  ActivationSpec spec;
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    spec.kind = parse_kind(text);
  } else {
    spec.kind = parse_kind(text.substr(0, colon));
    try {
      spec.alpha = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidInputError("bad activation alpha in: " + text);
    }
  }
  spec.validate();
  return spec;
}

std::string variant_name(EncoderVariant v) {
  return v == EncoderVariant::single_encoder ? "single_encoder" : "dual_encoder";
}

EncoderVariant parse_variant(const std::string& name) {
  if (name == "single_encoder" || name == "single" || name == "1enc")
    return EncoderVariant::single_encoder;
  if (name == "dual_encoder" || name == "dual" || name == "2enc")
    return EncoderVariant::dual_encoder;
  throw InvalidInputError("unknown encoder variant: " + name);
}

void ModelConfig::validate() const {
  if (n_mels < 1) throw InvalidInputError("model config: n_mels must be >= 1");
  if (widths.empty()) throw InvalidInputError("model config: need at least one encoder block");
  for (int w : widths)
    if (w < 1) throw InvalidInputError("model config: block widths must be positive");
  if (bottleneck < 1) throw InvalidInputError("model config: bottleneck must be >= 1");
  if (kernel < 1 || kernel % 2 == 0)
    throw InvalidInputError("model config: kernel must be odd and >= 1");
  if (!(epsilon > 0.0) || epsilon > 1e-3)
    throw InvalidInputError("model config: epsilon must be in (0, 1e-3]");
  activation.validate();
}

std::string ModelConfig::to_json_string() const {
  nlohmann::json j;
  j["n_mels"] = n_mels;
  j["widths"] = widths;
  j["bottleneck"] = bottleneck;
  j["kernel"] = kernel;
  j["epsilon"] = epsilon;
  j["activation"] = activation.str();
  j["variant"] = variant_name(variant);
  return j.dump(2);
}

ModelConfig ModelConfig::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  ModelConfig cfg;
  cfg.n_mels = j.value("n_mels", 80);
  if (j.contains("widths")) cfg.widths = j.at("widths").get<std::vector<int>>();
  cfg.bottleneck = j.value("bottleneck", 4);
  cfg.kernel = j.value("kernel", 5);
  cfg.epsilon = j.value("epsilon", 1e-5);
  if (j.contains("activation")) cfg.activation = ActivationSpec::parse(j.at("activation"));
  if (j.contains("variant")) cfg.variant = parse_variant(j.at("variant"));
  cfg.validate();
  return cfg;
}

ModelConfig ModelConfig::desk() {
  ModelConfig cfg;
  cfg.widths = {32, 32, 32, 32};
  cfg.bottleneck = 4;
  cfg.kernel = 5;
  return cfg;
}

ModelConfig ModelConfig::kernel1_test() {
  ModelConfig cfg = desk();
  cfg.kernel = 1;
  return cfg;
}

}  // namespace againvc
