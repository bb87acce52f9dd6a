// core/src/io/npy.cpp

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

#include "againvc/io/npy.hpp"

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "againvc/errors.hpp"

namespace againvc {

namespace {

constexpr char kMagic[] = "\x93NUMPY";

}  // namespace

void save_npy(const std::filesystem::path& path, const Mat& m) {
  std::string header = "{'descr': '<f8', 'fortran_order': False, 'shape': (" +
                       std::to_string(m.rows()) + ", " + std::to_string(m.cols()) + "), }";
  // total header block (magic + version + length field + dict) padded to 64
  size_t unpadded = 6 + 2 + 2 + header.size() + 1;
  size_t padded = (unpadded + 63) / 64 * 64;
  header.append(padded - unpadded, ' ');
  header.push_back('\n');

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path.string());
  out.write(kMagic, 6);
  out.put('\x01');
  out.put('\x00');
  uint16_t hlen = static_cast<uint16_t>(header.size());
  char lenb[2] = {static_cast<char>(hlen & 0xFF), static_cast<char>(hlen >> 8)};
  out.write(lenb, 2);
  out.write(header.data(), static_cast<std::streamsize>(header.size()));

  // C-order rows: write row by row (Eigen stores column-major).
  std::vector<double> row(static_cast<size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m(r, c);
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
  if (!out) throw IoError("short write: " + path.string());
}

Mat load_npy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read: " + path.string());
  char magic[6];
  in.read(magic, 6);
  if (!in || std::memcmp(magic, kMagic, 6) != 0)
    throw DecodeError("not an NPY file: " + path.string());
  char ver[2];
  in.read(ver, 2);
  if (!in || ver[0] != 1) throw DecodeError("unsupported NPY version: " + path.string());
  unsigned char lenb[2];
  in.read(reinterpret_cast<char*>(lenb), 2);
  uint16_t hlen = static_cast<uint16_t>(lenb[0] | (lenb[1] << 8));
  std::string header(hlen, '\0');
  in.read(header.data(), hlen);
  if (!in) throw DecodeError("truncated NPY header: " + path.string());

  if (header.find("'<f8'") == std::string::npos)
    throw DecodeError("NPY dtype must be <f8: " + path.string());
  if (header.find("'fortran_order': False") == std::string::npos)
    throw DecodeError("NPY must be C-order: " + path.string());

  auto lp = header.find('(');
  auto rp = header.find(')', lp);
  if (lp == std::string::npos || rp == std::string::npos)
    throw DecodeError("NPY header missing shape: " + path.string());
  std::string shape = header.substr(lp + 1, rp - lp - 1);
  auto comma = shape.find(',');
  if (comma == std::string::npos) throw DecodeError("NPY array must be 2-D: " + path.string());
  long rows = std::stol(shape.substr(0, comma));
  std::string rest = shape.substr(comma + 1);
  long cols = std::stol(rest);
  if (rows <= 0 || cols <= 0) throw DecodeError("NPY bad shape: " + path.string());

  Mat m(rows, cols);
  std::vector<double> row(static_cast<size_t>(cols));
  for (long r = 0; r < rows; ++r) {
    in.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(double)));
    if (!in) throw DecodeError("truncated NPY data: " + path.string());
    for (long c = 0; c < cols; ++c) m(r, c) = row[static_cast<size_t>(c)];
  }
  return m;
}

}  // namespace againvc
