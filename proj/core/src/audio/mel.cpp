// core/src/audio/mel.cpp

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

#include "againvc/audio/mel.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "againvc/audio/stft.hpp"
#include "againvc/errors.hpp"

namespace againvc {

namespace {

// Slaney mel scale: linear below 1 kHz, logarithmic above.
constexpr double kFsp = 200.0 / 3.0;
constexpr double kMinLogHz = 1000.0;
constexpr double kMinLogMel = kMinLogHz / kFsp;
const double kLogStep = std::log(6.4) / 27.0;

}  // namespace

double hz_to_mel(double hz) {
  if (hz < kMinLogHz) return hz / kFsp;
  return kMinLogMel + std::log(hz / kMinLogHz) / kLogStep;
}

double mel_to_hz(double mel) {
  if (mel < kMinLogMel) return mel * kFsp;
  return kMinLogHz * std::exp(kLogStep * (mel - kMinLogMel));
}

double MelConfig::floor_value() const { return std::log(log_floor); }

std::string MelConfig::to_json_string() const {
  nlohmann::json j;
  j["sample_rate"] = sample_rate;
  j["n_mels"] = n_mels;
  j["hop"] = hop_length;
  j["win"] = win_length;
  j["n_fft"] = n_fft;
  j["fmin"] = fmin;
  j["fmax"] = fmax;
  j["log_floor"] = log_floor;
  j["framing"] = center ? "center_reflect_hann" : "left_hann";
  j["mel_scale"] = "slaney";
  j["log_base"] = "e";
  return j.dump(2);
}

MelConfig MelConfig::from_json_string(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  MelConfig cfg;
  cfg.sample_rate = j.at("sample_rate").get<int>();
  cfg.n_mels = j.at("n_mels").get<int>();
  cfg.hop_length = j.at("hop").get<int>();
  cfg.win_length = j.at("win").get<int>();
  cfg.n_fft = j.value("n_fft", cfg.win_length);
  cfg.fmin = j.value("fmin", 0.0);
  cfg.fmax = j.value("fmax", cfg.sample_rate / 2.0);
  cfg.log_floor = j.at("log_floor").get<double>();
  cfg.center = j.value("framing", "center_reflect_hann") == "center_reflect_hann";
  return cfg;
}

Mat mel_filterbank(const MelConfig& cfg) {
  const int n_bins = cfg.n_fft / 2 + 1;
  const double mel_lo = hz_to_mel(cfg.fmin);
  const double mel_hi = hz_to_mel(cfg.fmax);

  // n_mels + 2 band edges, evenly spaced on the mel scale
  Vec edges_hz(cfg.n_mels + 2);
  for (int m = 0; m < cfg.n_mels + 2; ++m) {
    double mel = mel_lo + (mel_hi - mel_lo) * m / (cfg.n_mels + 1);
    edges_hz[m] = mel_to_hz(mel);
  }

  Mat fb = Mat::Zero(cfg.n_mels, n_bins);
  for (int m = 0; m < cfg.n_mels; ++m) {
    const double f_lo = edges_hz[m];
    const double f_ct = edges_hz[m + 1];
    const double f_hi = edges_hz[m + 2];
    const double norm = 2.0 / (f_hi - f_lo);  // Slaney area normalization
    for (int b = 0; b < n_bins; ++b) {
      const double f = static_cast<double>(b) * cfg.sample_rate / cfg.n_fft;
      double w = 0.0;
      if (f >= f_lo && f <= f_ct && f_ct > f_lo)
        w = (f - f_lo) / (f_ct - f_lo);
      else if (f > f_ct && f <= f_hi && f_hi > f_ct)
        w = (f_hi - f) / (f_hi - f_ct);
      fb(m, b) = w * norm;
    }
  }
  return fb;
}

Mat mel_spectrogram(const AudioClip& clip, const MelConfig& cfg) {
  if (clip.sample_rate != cfg.sample_rate)
    throw InvalidInputError("mel_spectrogram: clip rate " + std::to_string(clip.sample_rate) +
                            " != config rate " + std::to_string(cfg.sample_rate));
  if (clip.samples.size() < cfg.n_fft)
    throw TooShortError("mel_spectrogram: clip shorter than one analysis window");
  if (!clip.samples.allFinite()) throw InvalidInputError("mel_spectrogram: non-finite samples");

  const CMat spec = stft(clip.samples, cfg.n_fft, cfg.hop_length, cfg.center);
  const Mat mag = spec.cwiseAbs();
  const Mat fb = mel_filterbank(cfg);
  Mat mel = fb * mag;
  return mel.cwiseMax(cfg.log_floor).array().log().matrix();
}

}  // namespace againvc
