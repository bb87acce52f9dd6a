// core/include/againvc/io/manifest.hpp

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

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace againvc {

// Every artifact-producing command writes exactly one of these alongside its
// outputs. Primary outputs must be byte-reproducible under a fixed seed; the
// manifest's timing fields are the only tolerated difference between reruns.
struct RunManifest {
  std::string command;
  std::string config_json;  // resolved config snapshot, serialized JSON
  uint64_t seed = 0;
  std::string code_version;
  std::vector<std::pair<std::string, std::string>> input_hashes;  // path -> fnv64 hex
  std::vector<std::string> outputs;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;
  double wall_time_s = 0.0;
  std::string started_at;  // ISO-8601 UTC

  void write(const std::filesystem::path& path) const;
};

std::string iso8601_utc_now();

}  // namespace againvc
