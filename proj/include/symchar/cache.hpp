#pragma once

#include <filesystem>
#include <optional>

#include "symchar/char_table.hpp"

namespace symchar {

inline constexpr int kCacheFormatVersion = 1;

// $SYMCHAR_CACHE_DIR, else $XDG_CACHE_HOME/symchar, else $HOME/.cache/symchar.
std::optional<std::filesystem::path> default_cache_dir();

std::filesystem::path cache_path(const std::filesystem::path& dir, int n);

// Returns false if the file could not be written.
bool cache_table(const CharTable& table, const std::filesystem::path& dir);

// nullopt when the file is absent, unreadable, malformed, for another n, or from another format version.
// Values are not re-verified; a well-formed but wrong table is returned as is.
std::optional<CharTable> load_cache(int n, const std::filesystem::path& dir);

// Cached table if available, otherwise builds it and tries to store it.
CharTable load_or_build(int n, const std::optional<std::filesystem::path>& dir);

}  // namespace symchar
