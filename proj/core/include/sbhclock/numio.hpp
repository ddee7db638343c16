// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_NUMIO_HPP_
#define SBHCLOCK_NUMIO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace sbhclock {
namespace numio {

// Locale-independent decimal formatting with 17 significant digits; the
// round trip string -> double -> string is exact.
std::string format_double(double x);

std::string format_int(std::int64_t x);

/// Minimal CSV emitter.  Cells are pre-formatted strings; the writer only
/// handles layout, so every number passes through format_double exactly once.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);

  /// Serializes header + rows with '\n' line endings and no trailing spaces.
  std::string str() const;

  /// Writes to path, failing loudly on I/O errors.
  void write(const std::string& path) const;

  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes text to path atomically enough for our purposes (truncate + write).
void write_text(const std::string& path, const std::string& text);

}  // namespace numio
}  // namespace sbhclock

#endif  // SBHCLOCK_NUMIO_HPP_
