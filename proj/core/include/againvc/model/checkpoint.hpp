// core/include/againvc/model/checkpoint.hpp

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
#include <string>

#include "againvc/model/network.hpp"

namespace againvc {

// Checkpoint format: a fixed magic tag and version, a JSON header carrying
// the full model config plus a name -> (shape, offset) tensor directory, and
// a raw little-endian float64 payload (column-major). Identical weights
// serialize to identical bytes.
std::string checkpoint_bytes(const AgainVcModel& model);
void save_checkpoint(const std::filesystem::path& path, const AgainVcModel& model);

AgainVcModel load_checkpoint_bytes(const std::string& bytes, const std::string& origin = "");
AgainVcModel load_checkpoint(const std::filesystem::path& path);

}  // namespace againvc
