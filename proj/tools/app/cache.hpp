#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "projmon/monoid.hpp"

namespace projmon::app {

std::string sha256_hex(std::string_view data);

/// $PROJMON_CACHE, else ".projmon-cache".
std::filesystem::path default_cache_dir();

struct CacheOutcome {
  bool hit = false;
  bool discarded = false;  // an entry existed but failed its digest or closure check
  std::filesystem::path file;
};

/// Closes m, reusing a stored element list when one is valid.  Only finite
/// closures are stored; entries are written to a temporary file and renamed.
CacheOutcome close_cached(Monoid& m, std::size_t cap, const std::filesystem::path& dir);

}  // namespace projmon::app
