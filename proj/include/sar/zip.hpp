#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sar {

struct ZipEntry {
  std::string name;
  std::string data;

  bool operator==(const ZipEntry&) const = default;
};

// Stored (uncompressed) archive with fixed 1980-01-01 timestamps, so the
// bytes depend only on the entries and their order.
std::string write_zip(const std::vector<ZipEntry>& entries);

// Reads stored and deflated entries via the central directory and checks
// every CRC. Throws IoError on malformed input.
std::vector<ZipEntry> read_zip(std::string_view bytes);

}  // namespace sar
