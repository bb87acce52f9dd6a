// core/src/model/checkpoint.cpp

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

#include "againvc/model/checkpoint.hpp"

#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "againvc/errors.hpp"

namespace againvc {

namespace {

constexpr char kMagic[8] = {'A', 'G', 'V', 'C', 'K', 'P', 'T', '\0'};
constexpr uint32_t kFormatVersion = 1;

void put_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& s, uint64_t v) {
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

uint32_t get_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint64_t get_u64(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::string checkpoint_bytes(const AgainVcModel& model) {
  nlohmann::json header;
  header["format_version"] = kFormatVersion;
  header["model"] = nlohmann::json::parse(model.config().to_json_string());

  uint64_t offset = 0;
  nlohmann::json tensors = nlohmann::json::array();
  const auto params = model.params();
  for (const Param* p : params) {
    nlohmann::json t;
    t["name"] = p->name;
    t["rows"] = p->value.rows();
    t["cols"] = p->value.cols();
    t["offset"] = offset;
    tensors.push_back(t);
    offset += static_cast<uint64_t>(p->value.size()) * sizeof(double);
  }
  header["tensors"] = tensors;
  const std::string header_str = header.dump();

  std::string out;
  out.reserve(8 + 4 + 8 + header_str.size() + offset);
  out.append(kMagic, 8);
  put_u32(out, kFormatVersion);
  put_u64(out, header_str.size());
  out.append(header_str);
  for (const Param* p : params)
    out.append(reinterpret_cast<const char*>(p->value.data()),
               static_cast<size_t>(p->value.size()) * sizeof(double));
  return out;
}

void save_checkpoint(const std::filesystem::path& path, const AgainVcModel& model) {
  const std::string bytes = checkpoint_bytes(model);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write checkpoint: " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short checkpoint write: " + path.string());
}

AgainVcModel load_checkpoint_bytes(const std::string& bytes, const std::string& origin) {
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  if (bytes.size() < 20 || std::memcmp(data, kMagic, 8) != 0)
    throw DecodeError("not a checkpoint file: " + origin);
  const uint32_t version = get_u32(data + 8);
  if (version != kFormatVersion)
    throw ConfigMismatchError("unsupported checkpoint format version " +
                              std::to_string(version) + ": " + origin);
  const uint64_t header_len = get_u64(data + 12);
  if (20 + header_len > bytes.size()) throw DecodeError("truncated checkpoint header: " + origin);

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(bytes.substr(20, header_len));
  } catch (const std::exception& e) {
    throw DecodeError(std::string("bad checkpoint header: ") + e.what());
  }

  ModelConfig cfg = ModelConfig::from_json_string(header.at("model").dump());
  AgainVcModel model(cfg);

  const size_t payload_start = 20 + header_len;
  auto tensors = header.at("tensors");
  auto params = model.params();
  if (tensors.size() != params.size())
    throw ConfigMismatchError("checkpoint tensor count does not match config: " + origin);

  for (size_t i = 0; i < params.size(); ++i) {
    const auto& t = tensors[i];
    Param* p = params[i];
    if (t.at("name").get<std::string>() != p->name ||
        t.at("rows").get<Eigen::Index>() != p->value.rows() ||
        t.at("cols").get<Eigen::Index>() != p->value.cols())
      throw ConfigMismatchError("checkpoint tensor '" + t.at("name").get<std::string>() +
                                "' does not match config: " + origin);
    const uint64_t off = t.at("offset").get<uint64_t>();
    const size_t n_bytes = static_cast<size_t>(p->value.size()) * sizeof(double);
    if (payload_start + off + n_bytes > bytes.size())
      throw DecodeError("truncated checkpoint payload: " + origin);
    std::memcpy(p->value.data(), bytes.data() + payload_start + off, n_bytes);
  }
  return model;
}

AgainVcModel load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read checkpoint: " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_checkpoint_bytes(bytes, path.string());
}

}  // namespace againvc
