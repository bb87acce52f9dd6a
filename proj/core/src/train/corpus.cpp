// core/src/train/corpus.cpp

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

#include "againvc/train/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "againvc/audio/griffin_lim.hpp"
#include "againvc/audio/wav.hpp"
#include "againvc/errors.hpp"
#include "againvc/io/npy.hpp"

namespace againvc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

template <typename T>
void seeded_shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<size_t>(rng.uniform_int(i))]);
}

}  // namespace

size_t CorpusIndex::total_utterances() const {
  size_t n = 0;
  for (const auto& [spk, utts] : utterances) n += utts.size();
  return n;
}

void CorpusIndex::save(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["version"] = 1;
  j["speakers"] = speakers;
  nlohmann::json utts = nlohmann::json::object();
  for (const auto& [spk, list] : utterances) utts[spk] = list;
  j["utterances"] = utts;
  j["train_speakers"] = train_speakers;
  j["eval_speakers"] = eval_speakers;
  j["train_fraction"] = train_fraction;
  j["seed"] = seed;
  j["mel"] = nlohmann::json::parse(mel.to_json_string());

  std::ofstream out(path);
  if (!out) throw IoError("cannot write index: " + path.string());
  out << j.dump(2) << "\n";
}

CorpusIndex CorpusIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read corpus index: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CorpusError("bad corpus index " + path.string() + ": " + e.what());
  }
  CorpusIndex idx;
  idx.root = path.parent_path();
  idx.speakers = j.at("speakers").get<std::vector<std::string>>();
  for (const auto& [spk, list] : j.at("utterances").items())
    idx.utterances[spk] = list.get<std::vector<std::string>>();
  idx.train_speakers = j.at("train_speakers").get<std::vector<std::string>>();
  idx.eval_speakers = j.at("eval_speakers").get<std::vector<std::string>>();
  idx.train_fraction = j.value("train_fraction", 0.8);
  idx.seed = j.value("seed", 0ULL);
  idx.mel = MelConfig::from_json_string(j.at("mel").dump());
  return idx;
}

CorpusIndex build_corpus_index(const std::filesystem::path& root, double train_fraction,
                               uint64_t seed, int utterance_cap) {
  if (!std::filesystem::is_directory(root))
    throw CorpusError("corpus root is not a directory: " + root.string());
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw CorpusError("train fraction must be in (0, 1)");

  CorpusIndex idx;
  idx.root = root;
  idx.train_fraction = train_fraction;
  idx.seed = seed;

  const auto meta_path = root / "meta.json";
  if (std::filesystem::exists(meta_path)) {
    std::ifstream meta(meta_path);
    std::string text((std::istreambuf_iterator<char>(meta)), std::istreambuf_iterator<char>());
    idx.mel = MelConfig::from_json_string(text);
  }

  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string spk = entry.path().filename().string();
    std::vector<std::string> utts;
    for (const auto& f : std::filesystem::directory_iterator(entry.path()))
      if (f.is_regular_file() && f.path().extension() == ".npy")
        utts.push_back(spk + "/" + f.path().filename().string());
    if (utts.empty()) continue;
    std::sort(utts.begin(), utts.end());
    if (utterance_cap > 0 && static_cast<int>(utts.size()) > utterance_cap) {
      Rng rng(derive_seed(seed, "cap-" + spk));
      seeded_shuffle(utts, rng);
      utts.resize(static_cast<size_t>(utterance_cap));
      std::sort(utts.begin(), utts.end());
    }
    idx.speakers.push_back(spk);
    idx.utterances[spk] = std::move(utts);
  }
  std::sort(idx.speakers.begin(), idx.speakers.end());

  if (idx.speakers.size() < 2)
    throw CorpusError("corpus needs at least 2 speakers, found " +
                      std::to_string(idx.speakers.size()));

  std::vector<std::string> shuffled = idx.speakers;
  Rng rng(derive_seed(seed, "speaker-split"));
  seeded_shuffle(shuffled, rng);
  const auto n = static_cast<long>(shuffled.size());
  long n_train = std::llround(train_fraction * static_cast<double>(n));
  n_train = std::clamp<long>(n_train, 1, n - 1);
  idx.train_speakers.assign(shuffled.begin(), shuffled.begin() + n_train);
  idx.eval_speakers.assign(shuffled.begin() + n_train, shuffled.end());
  std::sort(idx.train_speakers.begin(), idx.train_speakers.end());
  std::sort(idx.eval_speakers.begin(), idx.eval_speakers.end());
  return idx;
}

const Mat& MelStore::get(const std::string& rel_path) const {
  auto it = cache_.find(rel_path);
  if (it != cache_.end()) return it->second;
  Mat m = load_npy(index_.root / rel_path);
  return cache_.emplace(rel_path, std::move(m)).first->second;
}

Batcher::Batcher(const CorpusIndex& index, const MelStore& store, uint64_t seed)
    : index_(index), store_(store), rng_(derive_seed(seed, "batcher")) {
  if (index_.train_speakers.empty()) throw CorpusError("batcher: no training speakers");
}

std::vector<Mat> Batcher::next_batch(int batch_size) {
  std::vector<Mat> batch;
  batch.reserve(static_cast<size_t>(batch_size));
  const double pad = index_.mel.floor_value();
  for (int i = 0; i < batch_size; ++i) {
    const auto& spk =
        index_.train_speakers[rng_.uniform_int(index_.train_speakers.size())];
    const auto& utts = index_.utterances.at(spk);
    const auto& rel = utts[rng_.uniform_int(utts.size())];
    batch.push_back(sample_segment(store_.get(rel), rng_, pad).values);
  }
  return batch;
}

// ---------------------------------------------------------------------------
// Synthetic corpus
// ---------------------------------------------------------------------------

std::string SynthConfig::to_json_string() const {
  nlohmann::json j;
  j["n_speakers"] = n_speakers;
  j["utterances_per_speaker"] = utterances_per_speaker;
  j["min_frames"] = min_frames;
  j["max_frames"] = max_frames;
  j["latent_dim"] = latent_dim;
  j["gain_lo"] = gain_lo;
  j["gain_hi"] = gain_hi;
  j["offset_spread"] = offset_spread;
  j["base_level"] = base_level;
  j["seed"] = seed;
  j["train_fraction"] = train_fraction;
  j["write_wav"] = write_wav;
  j["griffin_lim_iters"] = griffin_lim_iters;
  return j.dump(2);
}

CorpusIndex generate_synthetic_corpus(const std::filesystem::path& out_root,
                                      const SynthConfig& synth, const MelConfig& mel) {
  if (synth.n_speakers < 2) throw CorpusError("synthetic corpus needs at least 2 speakers");
  if (synth.min_frames < 1 || synth.max_frames < synth.min_frames)
    throw CorpusError("synthetic corpus: bad frame range");

  const auto mel_root = out_root / "mel";
  const auto wav_root = out_root / "wav";
  std::filesystem::create_directories(mel_root);
  if (synth.write_wav) std::filesystem::create_directories(wav_root);

  const int k = mel.n_mels;
  const double floor_value = mel.floor_value();

  // Corpus-global structure: latent-to-channel mixing and a spectral tilt.
  Rng global_rng(derive_seed(synth.seed, "global"));
  Mat mixing(k, synth.latent_dim);
  for (Eigen::Index c = 0; c < mixing.rows(); ++c)
    for (Eigen::Index j = 0; j < mixing.cols(); ++j)
      mixing(c, j) = global_rng.normal() / std::sqrt(static_cast<double>(synth.latent_dim));
  Vec tilt(k);
  for (int c = 0; c < k; ++c)
    tilt[c] = 1.5 - 4.0 * static_cast<double>(c) / static_cast<double>(k - 1);

  for (int s = 0; s < synth.n_speakers; ++s) {
    char spk_name[16];
    std::snprintf(spk_name, sizeof(spk_name), "spk%02d", s);
    std::filesystem::create_directories(mel_root / spk_name);
    if (synth.write_wav) std::filesystem::create_directories(wav_root / spk_name);

    // Fixed per-speaker affine signature.
    Rng spk_rng(derive_seed(synth.seed, std::string("speaker-") + spk_name));
    Vec gain(k), offset(k);
    for (int c = 0; c < k; ++c) {
      gain[c] = spk_rng.uniform(synth.gain_lo, synth.gain_hi);
      offset[c] = synth.base_level + tilt[c] +
                  spk_rng.uniform(-synth.offset_spread, synth.offset_spread);
    }

    for (int u = 0; u < synth.utterances_per_speaker; ++u) {
      char utt_name[16];
      std::snprintf(utt_name, sizeof(utt_name), "utt%03d", u);
      Rng rng(derive_seed(synth.seed, std::string(spk_name) + "/" + utt_name));

      const int frames =
          synth.min_frames +
          static_cast<int>(rng.uniform_int(
              static_cast<uint64_t>(synth.max_frames - synth.min_frames + 1)));

      // Shared content: smooth latent trajectories mixed into channels.
      Mat latents(synth.latent_dim, frames);
      for (int j = 0; j < synth.latent_dim; ++j) {
        const double a1 = 1.0, a2 = 0.6, a3 = 0.4;
        const double norm = 1.0 / std::sqrt((a1 * a1 + a2 * a2 + a3 * a3) / 2.0);
        const double f1 = rng.uniform(0.004, 0.075);
        const double f2 = rng.uniform(0.004, 0.075);
        const double f3 = rng.uniform(0.004, 0.075);
        const double p1 = rng.uniform(0.0, kTwoPi);
        const double p2 = rng.uniform(0.0, kTwoPi);
        const double p3 = rng.uniform(0.0, kTwoPi);
        for (int t = 0; t < frames; ++t)
          latents(j, t) = norm * (a1 * std::sin(kTwoPi * f1 * t + p1) +
                                  a2 * std::sin(kTwoPi * f2 * t + p2) +
                                  a3 * std::sin(kTwoPi * f3 * t + p3));
      }
      Mat content = mixing * latents;
      for (Eigen::Index c = 0; c < content.rows(); ++c)
        for (Eigen::Index t = 0; t < content.cols(); ++t)
          content(c, t) += 0.1 * rng.normal();

      Mat out = (content.array().colwise() * gain.array()).matrix();
      out.colwise() += offset;
      out = out.cwiseMax(floor_value).cwiseMin(4.0);

      save_npy(mel_root / spk_name / (std::string(utt_name) + ".npy"), out);
      if (synth.write_wav) {
        AudioClip clip = griffin_lim_invert(out, mel, synth.griffin_lim_iters);
        write_wav(wav_root / spk_name / (std::string(utt_name) + ".wav"), clip.samples,
                  clip.sample_rate);
      }
    }
  }

  // sidecar + index
  {
    std::ofstream meta(mel_root / "meta.json");
    if (!meta) throw IoError("cannot write meta.json");
    meta << mel.to_json_string() << "\n";
  }
  CorpusIndex idx = build_corpus_index(mel_root, synth.train_fraction,
                                       derive_seed(synth.seed, "split"), 0);
  idx.mel = mel;
  idx.save(mel_root / "index.json");
  return idx;
}

}  // namespace againvc
