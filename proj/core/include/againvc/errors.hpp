// core/include/againvc/errors.hpp

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

#include <stdexcept>
#include <string>

namespace againvc {

// Process exit codes used by the command line tool. Stable contract:
// 0 success, 2 input error, 3 divergence, 4 config mismatch.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInputError = 2,
  kExitDivergence = 3,
  kExitConfigMismatch = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or corrupt input file.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Empty audio, or audio that became empty after trimming.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// Clip shorter than one analysis window.
class TooShortError : public Error {
 public:
  using Error::Error;
};

// Non-finite or otherwise malformed numeric input.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Dimension mismatch between tensors or between tensor and config.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Corpus layout problems (too few speakers, missing index, ...).
class CorpusError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Checkpoint contents do not match the requested or embedded config.
class ConfigMismatchError : public Error {
 public:
  using Error::Error;
};

// Filesystem read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace againvc
