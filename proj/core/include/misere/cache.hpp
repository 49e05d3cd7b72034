#pragma once

// Persistent outcome memo: an append-only binary log of sessions. Each
// session lists game structures (options referenced by session-local ids)
// followed by (game, outcome) pairs. Loading re-interns the structures, so
// ids in the file never need to match ids of the running process.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace misere {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheStats {
  std::size_t sessions = 0;
  std::size_t nodes = 0;
  std::size_t outcomes = 0;
};

/// Seeds the outcome memo from the log at `path`. A missing file loads
/// nothing; a malformed one throws CacheError.
CacheStats load_cache(const std::string& path);

/// Appends one session holding every memoized outcome not already loaded
/// from or saved to a cache during this process.
CacheStats save_cache(const std::string& path);

/// Value of MISEREKIT_CACHE, if set and non-empty.
std::optional<std::string> cache_path_from_env();

}  // namespace misere
