#include <algorithm>
#include <array>
#include <cctype>

#include "sar/compiler.hpp"

namespace sar {

namespace {

enum class MediaFamily { kNone, kAudio, kVideo, kImage };

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

MediaFamily family_of(std::string_view name) {
  static const std::array<std::pair<std::string_view, MediaFamily>, 18> kTable{{
      {"mp3", MediaFamily::kAudio},  {"wav", MediaFamily::kAudio},
      {"ogg", MediaFamily::kAudio},  {"m4a", MediaFamily::kAudio},
      {"aac", MediaFamily::kAudio},  {"flac", MediaFamily::kAudio},
      {"amr", MediaFamily::kAudio},  {"mid", MediaFamily::kAudio},
      {"mp4", MediaFamily::kVideo},  {"3gp", MediaFamily::kVideo},
      {"webm", MediaFamily::kVideo}, {"mkv", MediaFamily::kVideo},
      {"avi", MediaFamily::kVideo},  {"png", MediaFamily::kImage},
      {"jpg", MediaFamily::kImage},  {"jpeg", MediaFamily::kImage},
      {"gif", MediaFamily::kImage},  {"bmp", MediaFamily::kImage},
  }};
  const auto dot = name.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return MediaFamily::kNone;
  const auto ext = lower(name.substr(dot + 1));
  for (const auto& [e, f] : kTable) {
    if (e == ext) return f;
  }
  return MediaFamily::kNone;
}

}  // namespace

bool is_media_file(std::string_view value) {
  return family_of(value) != MediaFamily::kNone;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::filesystem::path resolve_asset(std::string_view value,
                                    const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  const fs::path exact = dir / std::string(value);
  std::error_code ec;
  if (fs::is_regular_file(exact, ec)) return exact;
  const auto family = family_of(value);
  const auto wanted = lower(value);
  std::optional<std::pair<std::size_t, std::string>> best;
  if (family != MediaFamily::kNone && fs::is_directory(dir, ec)) {
    for (const auto& item : fs::directory_iterator(dir, ec)) {
      if (!item.is_regular_file(ec)) continue;
      const auto name = item.path().filename().string();
      if (family_of(name) != family) continue;
      std::pair<std::size_t, std::string> key{edit_distance(wanted, lower(name)),
                                              name};
      if (!best || key < *best) best = std::move(key);
    }
  }
  if (!best) {
    throw NoCandidate("no media file in " + dir.string() + " can stand in for '" +
                      std::string(value) + "'");
  }
  return dir / best->second;
}

}  // namespace sar
