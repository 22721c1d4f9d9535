#include "sar/zip.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdint>
#include <limits>

#include "sar/errors.hpp"

namespace sar {

namespace {

constexpr std::uint32_t kLocalSig = 0x04034b50;
constexpr std::uint32_t kCentralSig = 0x02014b50;
constexpr std::uint32_t kEndSig = 0x06054b50;
constexpr std::uint16_t kVersion = 20;
constexpr std::uint16_t kUtf8Flag = 0x0800;
constexpr std::uint16_t kDosDate = (0 << 9) | (1 << 5) | 1;  // 1980-01-01
constexpr std::uint16_t kDosTime = 0;
constexpr std::size_t kEndSize = 22;

void put16(std::string& out, std::uint16_t v) {
  out += static_cast<char>(v & 0xff);
  out += static_cast<char>(v >> 8);
}

void put32(std::string& out, std::uint32_t v) {
  put16(out, static_cast<std::uint16_t>(v & 0xffff));
  put16(out, static_cast<std::uint16_t>(v >> 16));
}

std::uint32_t crc_of(std::string_view data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large buffers in pieces.
  while (!data.empty()) {
    const auto n = static_cast<uInt>(
        std::min<std::size_t>(data.size(), std::numeric_limits<uInt>::max()));
    crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()), n);
    data.remove_prefix(n);
  }
  return static_cast<std::uint32_t>(crc);
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::uint16_t u16(std::size_t at) const {
    need(at, 2);
    return static_cast<std::uint16_t>(byte(at) | byte(at + 1) << 8);
  }

  std::uint32_t u32(std::size_t at) const {
    return static_cast<std::uint32_t>(u16(at)) |
           static_cast<std::uint32_t>(u16(at + 2)) << 16;
  }

  std::string_view slice(std::size_t at, std::size_t n) const {
    need(at, n);
    return bytes_.substr(at, n);
  }

  std::size_t size() const { return bytes_.size(); }

 private:
  unsigned byte(std::size_t at) const {
    return static_cast<unsigned char>(bytes_[at]);
  }

  void need(std::size_t at, std::size_t n) const {
    if (at > bytes_.size() || n > bytes_.size() - at) {
      throw IoError("zip: truncated archive");
    }
  }

  std::string_view bytes_;
};

std::string inflate_raw(std::string_view compressed, std::size_t size) {
  std::string out(size, '\0');
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw IoError("zip: inflate init");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != size) {
    throw IoError("zip: corrupt deflate stream");
  }
  return out;
}

}  // namespace

std::string write_zip(const std::vector<ZipEntry>& entries) {
  if (entries.size() > 0xffff) throw IoError("zip: too many entries");
  std::string out;
  std::string central;
  for (const auto& e : entries) {
    if (e.name.size() > 0xffff || e.data.size() > 0xfffffffeu ||
        out.size() > 0xfffffffeu) {
      throw IoError("zip: entry too large for a non-zip64 archive");
    }
    const auto crc = crc_of(e.data);
    const auto size = static_cast<std::uint32_t>(e.data.size());
    const auto offset = static_cast<std::uint32_t>(out.size());
    const auto name_size = static_cast<std::uint16_t>(e.name.size());

    put32(out, kLocalSig);
    put16(out, kVersion);
    put16(out, kUtf8Flag);
    put16(out, 0);  // stored
    put16(out, kDosTime);
    put16(out, kDosDate);
    put32(out, crc);
    put32(out, size);
    put32(out, size);
    put16(out, name_size);
    put16(out, 0);
    out += e.name;
    out += e.data;

    put32(central, kCentralSig);
    put16(central, kVersion);
    put16(central, kVersion);
    put16(central, kUtf8Flag);
    put16(central, 0);
    put16(central, kDosTime);
    put16(central, kDosDate);
    put32(central, crc);
    put32(central, size);
    put32(central, size);
    put16(central, name_size);
    put16(central, 0);  // extra
    put16(central, 0);  // comment
    put16(central, 0);  // disk
    put16(central, 0);  // internal attributes
    put32(central, 0);  // external attributes
    put32(central, offset);
    central += e.name;
  }
  const auto central_offset = static_cast<std::uint32_t>(out.size());
  out += central;
  put32(out, kEndSig);
  put16(out, 0);
  put16(out, 0);
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put32(out, static_cast<std::uint32_t>(central.size()));
  put32(out, central_offset);
  put16(out, 0);
  return out;
}

std::vector<ZipEntry> read_zip(std::string_view bytes) {
  Reader r(bytes);
  if (r.size() < kEndSize) throw IoError("zip: too short");
  // The end record sits at the tail, possibly followed by a comment.
  std::size_t end = std::string_view::npos;
  const std::size_t lowest = r.size() >= kEndSize + 0xffff ? r.size() - kEndSize - 0xffff : 0;
  for (std::size_t at = r.size() - kEndSize + 1; at-- > lowest;) {
    if (r.u32(at) == kEndSig) {
      end = at;
      break;
    }
  }
  if (end == std::string_view::npos) throw IoError("zip: no end record");
  const std::size_t count = r.u16(end + 10);
  std::size_t at = r.u32(end + 16);
  std::vector<ZipEntry> entries;
  for (std::size_t i = 0; i < count; ++i) {
    if (r.u32(at) != kCentralSig) throw IoError("zip: bad central header");
    const auto method = r.u16(at + 10);
    const auto crc = r.u32(at + 16);
    const std::size_t csize = r.u32(at + 20);
    const std::size_t usize = r.u32(at + 24);
    const std::size_t name_size = r.u16(at + 28);
    const std::size_t extra = r.u16(at + 30);
    const std::size_t comment = r.u16(at + 32);
    const std::size_t local = r.u32(at + 42);
    std::string name(r.slice(at + 46, name_size));
    at += 46 + name_size + extra + comment;

    if (r.u32(local) != kLocalSig) throw IoError("zip: bad local header");
    const std::size_t data_at =
        local + 30 + r.u16(local + 26) + r.u16(local + 28);
    const auto raw = r.slice(data_at, csize);
    std::string data;
    if (method == 0) {
      if (csize != usize) throw IoError("zip: stored size mismatch");
      data = std::string(raw);
    } else if (method == 8) {
      data = inflate_raw(raw, usize);
    } else {
      throw IoError("zip: unsupported method " + std::to_string(method));
    }
    if (crc_of(data) != crc) throw IoError("zip: CRC mismatch in " + name);
    entries.push_back({std::move(name), std::move(data)});
  }
  return entries;
}

}  // namespace sar
