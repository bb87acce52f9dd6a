// core/include/againvc/train/corpus.hpp

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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "againvc/audio/mel.hpp"
#include "againvc/audio/pipeline.hpp"
#include "againvc/matrix.hpp"
#include "againvc/rng.hpp"

namespace againvc {

// Index over a directory of cached mel spectrograms laid out as
// <root>/<speaker_id>/<utterance>.npy with a meta.json sidecar. The speaker
// split is disjoint by construction: evaluation speakers are never seen in
// training (one-shot conversion is evaluated on unseen speakers).
struct CorpusIndex {
  std::filesystem::path root;
  std::vector<std::string> speakers;  // sorted
  std::map<std::string, std::vector<std::string>> utterances;  // speaker -> relative paths
  std::vector<std::string> train_speakers;
  std::vector<std::string> eval_speakers;
  double train_fraction = 0.8;
  uint64_t seed = 0;
  MelConfig mel;

  size_t total_utterances() const;
  void save(const std::filesystem::path& path) const;
  static CorpusIndex load(const std::filesystem::path& path);
};

// Scans the cache directory and splits speakers deterministically.
// utterance_cap > 0 keeps at most that many utterances per speaker
// (chosen by seeded shuffle).
CorpusIndex build_corpus_index(const std::filesystem::path& root, double train_fraction,
                               uint64_t seed, int utterance_cap = 0);

// In-memory mel cache keyed by relative path.
class MelStore {
 public:
  explicit MelStore(const CorpusIndex& index) : index_(index) {}
  const Mat& get(const std::string& rel_path) const;

 private:
  const CorpusIndex& index_;
  mutable std::map<std::string, Mat> cache_;
};

// Uniformly samples a training speaker, then an utterance, then a random
// 128-frame crop. The sequence is fully determined by the seed.
class Batcher {
 public:
  Batcher(const CorpusIndex& index, const MelStore& store, uint64_t seed);
  std::vector<Mat> next_batch(int batch_size);

 private:
  const CorpusIndex& index_;
  const MelStore& store_;
  Rng rng_;
};

// ---------------------------------------------------------------------------
// Synthetic desk corpus. Speakers are per-channel affine signatures (gain
// and offset in the log-mel domain) applied to shared random smooth content,
// so speaker identity lives exactly where the model expects style: in
// channel statistics and their mixtures. Keeps experiments self-contained —
// no external audio needed.
// ---------------------------------------------------------------------------
struct SynthConfig {
  int n_speakers = 8;
  int utterances_per_speaker = 12;
  int min_frames = 256;
  int max_frames = 448;
  int latent_dim = 10;      // shared smooth processes mixed into channels
  double gain_lo = 0.5;
  double gain_hi = 1.8;
  double offset_spread = 2.0;
  double base_level = -4.0;
  uint64_t seed = 7;
  double train_fraction = 0.75;
  bool write_wav = false;   // also render waveforms through the vocoder
  int griffin_lim_iters = 30;

  std::string to_json_string() const;
};

// Returns the index written to <out_root>/mel; waveforms (when requested)
// land in <out_root>/wav with the same speaker layout.
CorpusIndex generate_synthetic_corpus(const std::filesystem::path& out_root,
                                      const SynthConfig& synth, const MelConfig& mel = {});

}  // namespace againvc
