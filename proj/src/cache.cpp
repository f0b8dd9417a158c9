#include "symchar/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "table_json.hpp"

namespace symchar {

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* dir = std::getenv("SYMCHAR_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "symchar";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "symchar";
  return std::nullopt;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, int n) {
  return dir / ("chartable-v" + std::to_string(kCacheFormatVersion) + "-n" + std::to_string(n) + ".json");
}

bool cache_table(const CharTable& table, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return false;
  const auto target = cache_path(dir, table.n);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << detail::write_table_document(
        {{"format_version", kCacheFormatVersion}, {"kind", "character_table"}, {"n", table.n}}, table.labels,
        table.values);
    if (!out) return false;
  }
  std::filesystem::rename(tmp, target, ec);
  return !ec;
}

std::optional<CharTable> load_cache(int n, const std::filesystem::path& dir) {
  std::ifstream in(cache_path(dir, n), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    const auto doc = nlohmann::json::parse(buffer.str());
    if (!doc.is_object() || doc.value("format_version", -1) != kCacheFormatVersion ||
        doc.value("kind", std::string()) != "character_table" || doc.value("n", -1) != n) {
      return std::nullopt;
    }
    CharTable table;
    table.n = n;
    table.labels = detail::read_labels(doc);
    const auto rows = detail::read_rows(doc);
    if (table.labels != enumerate(n) || rows.size() != table.labels.size()) return std::nullopt;
    table.values = IntMatrix(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) return std::nullopt;
      for (std::size_t j = 0; j < rows.size(); ++j) table.values(i, j) = rows[i][j];
    }
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

CharTable load_or_build(int n, const std::optional<std::filesystem::path>& dir) {
  if (dir) {
    if (auto cached = load_cache(n, *dir)) return std::move(*cached);
  }
  CharTable table = build_table(n);
  if (dir) cache_table(table, *dir);
  return table;
}

}  // namespace symchar
