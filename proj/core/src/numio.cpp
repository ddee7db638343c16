// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "sbhclock/numio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "sbhclock/types.hpp"

namespace sbhclock {
namespace numio {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::general, 17);
  if (res.ec != std::errc()) {
    throw NumericalError("format_double: to_chars failed");
  }
  return std::string(buf, res.ptr);
}

std::string format_int(std::int64_t x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header)
    : header_(std::move(header)) {
  if (header_.empty()) {
    throw ParameterError("CsvWriter: header must not be empty");
  }
}

void CsvWriter::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw ParameterError("CsvWriter: row width " + std::to_string(cells.size()) +
                         " does not match header width " +
                         std::to_string(header_.size()));
  }
  rows_.push_back(std::move(cells));
}

std::string CsvWriter::str() const {
  std::string out;
  auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_line(header_);
  for (const auto& row : rows_) append_line(row);
  return out;
}

void CsvWriter::write(const std::string& path) const { write_text(path, str()); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw Error("write_text: cannot open " + path);
  }
  f << text;
  f.flush();
  if (!f) {
    throw Error("write_text: write failed for " + path);
  }
}

}  // namespace numio
}  // namespace sbhclock
