// core/include/againvc/io/npy.hpp

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

#include "againvc/matrix.hpp"

namespace againvc {

// Minimal NPY v1.0 reader/writer for 2-D little-endian float64 arrays,
// C-order. Mel spectrograms and other matrices persist in this format so
// other toolchains can read them directly.
void save_npy(const std::filesystem::path& path, const Mat& m);
Mat load_npy(const std::filesystem::path& path);

}  // namespace againvc
