// core/src/io/manifest.cpp

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

#include "againvc/io/manifest.hpp"

#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

#include "againvc/errors.hpp"

namespace againvc {

std::string iso8601_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = config_json.empty() ? nlohmann::json::object()
                                    : nlohmann::json::parse(config_json);
  j["seed"] = seed;
  j["code_version"] = code_version;
  nlohmann::json hashes = nlohmann::json::object();
  for (const auto& [p, h] : input_hashes) hashes[p] = h;
  j["input_hashes"] = hashes;
  j["outputs"] = outputs;
  j["failures"] = failures;
  j["skipped"] = skipped;
  j["timing"] = {{"started_at", started_at}, {"wall_time_s", wall_time_s}};

  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace againvc
