#include "misere/cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"

namespace misere {
namespace {

constexpr char kMagic[8] = {'M', 'S', 'R', 'K', 'C', 'A', '1', '\n'};

std::mutex& persisted_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_set<Game>& persisted() {
  static std::unordered_set<Game> ids;
  return ids;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                         static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw CacheError("cache file truncated");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

char get_char(std::istream& in) {
  char c = 0;
  if (!in.get(c)) throw CacheError("cache file truncated");
  return c;
}

}  // namespace

CacheStats load_cache(const std::string& path) {
  CacheStats stats;
  std::ifstream in(path, std::ios::binary);
  if (!in) return stats;
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic)) {
    if (in.gcount() == 0) return stats;
    throw CacheError("cache file " + path + " has a short header");
  }
  if (!std::equal(std::begin(magic), std::end(magic), std::begin(kMagic))) {
    throw CacheError("cache file " + path + " has a bad header");
  }

  std::vector<std::pair<Game, Outcome>> loaded;
  while (in.peek() != std::char_traits<char>::eof()) {
    if (get_char(in) != 'S') throw CacheError("cache file " + path + ": expected session record");
    ++stats.sessions;
    const std::uint32_t nodes = get_u32(in);
    std::vector<Game> local;
    local.reserve(nodes);
    for (std::uint32_t i = 0; i < nodes; ++i) {
      const std::uint32_t nl = get_u32(in);
      const std::uint32_t nr = get_u32(in);
      GameList lo;
      GameList ro;
      for (std::uint32_t k = 0; k < nl + nr; ++k) {
        const std::uint32_t ref = get_u32(in);
        if (ref >= local.size()) throw CacheError("cache file " + path + ": forward reference");
        (k < nl ? lo : ro).push_back(local[ref]);
      }
      local.push_back(mk_game(std::move(lo), std::move(ro)));
    }
    stats.nodes += nodes;
    if (get_char(in) != 'O') throw CacheError("cache file " + path + ": expected outcome record");
    const std::uint32_t count = get_u32(in);
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t ref = get_u32(in);
      const auto o = outcome_from_char(get_char(in));
      if (ref >= local.size() || !o) throw CacheError("cache file " + path + ": bad outcome record");
      loaded.emplace_back(local[ref], *o);
    }
    stats.outcomes += count;
  }

  std::lock_guard lock(persisted_mutex());
  for (const auto& [g, o] : loaded) {
    seed_outcome(g, o);
    persisted().insert(g);
  }
  return stats;
}

CacheStats save_cache(const std::string& path) {
  CacheStats stats;
  std::lock_guard lock(persisted_mutex());
  std::vector<std::pair<Game, Outcome>> fresh;
  for (const auto& entry : outcome_memo_snapshot()) {
    if (!persisted().contains(entry.first)) fresh.push_back(entry);
  }
  if (fresh.empty()) return stats;

  // Options always have smaller arena ids than the games built from them,
  // so sorting the follower closure by id gives a valid write order.
  std::unordered_set<Game> needed;
  for (const auto& [g, o] : fresh) {
    for (Game f : followers(g)) needed.insert(f);
  }
  std::vector<Game> order(needed.begin(), needed.end());
  std::sort(order.begin(), order.end());
  std::unordered_map<Game, std::uint32_t> local;

  const bool existing = std::filesystem::exists(path) && std::filesystem::file_size(path) > 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw CacheError("cannot open cache file " + path + " for writing");
  if (!existing) out.write(kMagic, sizeof kMagic);

  out.put('S');
  put_u32(out, static_cast<std::uint32_t>(order.size()));
  for (Game g : order) {
    const auto lo = left_options(g);
    const auto ro = right_options(g);
    put_u32(out, static_cast<std::uint32_t>(lo.size()));
    put_u32(out, static_cast<std::uint32_t>(ro.size()));
    for (Game x : lo) put_u32(out, local.at(x));
    for (Game x : ro) put_u32(out, local.at(x));
    local.emplace(g, static_cast<std::uint32_t>(local.size()));
  }
  out.put('O');
  put_u32(out, static_cast<std::uint32_t>(fresh.size()));
  for (const auto& [g, o] : fresh) {
    put_u32(out, local.at(g));
    out.put(to_char(o));
    persisted().insert(g);
  }
  if (!out) throw CacheError("write to cache file " + path + " failed");
  stats.sessions = 1;
  stats.nodes = order.size();
  stats.outcomes = fresh.size();
  return stats;
}

std::optional<std::string> cache_path_from_env() {
  const char* v = std::getenv("MISEREKIT_CACHE");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace misere
