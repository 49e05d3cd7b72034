#include "misere/game.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace misere {
namespace {

struct Node {
  GameList left;
  GameList right;
};

struct KeyHash {
  std::size_t operator()(const std::vector<Game::id_type>& key) const noexcept {
    std::size_t h = key.size();
    for (auto v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

constexpr Game::id_type kUnset = std::numeric_limits<Game::id_type>::max();

// Append-only node storage. std::deque keeps references stable across
// push_back, so spans handed out by left_options/right_options stay valid
// once the lookup lock is released.
class Arena {
 public:
  static Arena& instance() {
    static Arena arena;
    return arena;
  }

  Game intern(GameList left, GameList right) {
    canonicalize(left);
    canonicalize(right);
    std::vector<Game::id_type> key;
    key.reserve(left.size() + right.size() + 1);
    key.push_back(static_cast<Game::id_type>(left.size()));
    for (Game g : left) key.push_back(g.id());
    for (Game g : right) key.push_back(g.id());

    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) return Game(it->second);
    }
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) return Game(it->second);
    const auto id = static_cast<Game::id_type>(nodes_.size());
    nodes_.push_back(Node{std::move(left), std::move(right)});
    index_.emplace(std::move(key), id);
    return Game(id);
  }

  const Node& node(Game g) const {
    std::shared_lock lock(mutex_);
    return nodes_.at(g.id());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return nodes_.size();
  }

 private:
  Arena() { intern({}, {}); }

  static void canonicalize(GameList& options) {
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
  }

  mutable std::shared_mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_map<std::vector<Game::id_type>, Game::id_type, KeyHash> index_;
};

// Id-indexed memo of a unary function on games.
class UnaryMemo {
 public:
  std::optional<Game::id_type> get(Game g) const {
    std::shared_lock lock(mutex_);
    if (g.id() < values_.size() && values_[g.id()] != kUnset) return values_[g.id()];
    return std::nullopt;
  }

  void put(Game g, Game::id_type value) {
    std::unique_lock lock(mutex_);
    if (values_.size() <= g.id()) values_.resize(static_cast<std::size_t>(g.id()) * 2 + 16, kUnset);
    values_[g.id()] = value;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Game::id_type> values_;
};

class SumMemo {
 public:
  static std::uint64_t key(Game g, Game h) {
    auto lo = std::min(g.id(), h.id());
    auto hi = std::max(g.id(), h.id());
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  std::optional<Game> get(std::uint64_t k) const {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(k); it != table_.end()) return Game(it->second);
    return std::nullopt;
  }

  void put(std::uint64_t k, Game value) {
    std::unique_lock lock(mutex_);
    table_.emplace(k, value.id());
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Game::id_type> table_;
};

UnaryMemo& conjugate_memo() {
  static UnaryMemo memo;
  return memo;
}

UnaryMemo& birthday_memo() {
  static UnaryMemo memo;
  return memo;
}

SumMemo& sum_memo() {
  static SumMemo memo;
  return memo;
}

}  // namespace

Game mk_game(GameList left, GameList right) {
  return Arena::instance().intern(std::move(left), std::move(right));
}

std::span<const Game> left_options(Game g) { return Arena::instance().node(g).left; }

std::span<const Game> right_options(Game g) { return Arena::instance().node(g).right; }

std::size_t arena_size() { return Arena::instance().size(); }

Game conjugate(Game g) {
  if (auto hit = conjugate_memo().get(g)) return Game(*hit);
  GameList left;
  GameList right;
  for (Game r : right_options(g)) left.push_back(conjugate(r));
  for (Game l : left_options(g)) right.push_back(conjugate(l));
  Game result = mk_game(std::move(left), std::move(right));
  conjugate_memo().put(g, result.id());
  conjugate_memo().put(result, g.id());
  return result;
}

Game sum(Game g, Game h) {
  if (g == games::zero()) return h;
  if (h == games::zero()) return g;
  const auto key = SumMemo::key(g, h);
  if (auto hit = sum_memo().get(key)) return *hit;

  GameList left;
  GameList right;
  for (Game gl : left_options(g)) left.push_back(sum(gl, h));
  for (Game hl : left_options(h)) left.push_back(sum(g, hl));
  for (Game gr : right_options(g)) right.push_back(sum(gr, h));
  for (Game hr : right_options(h)) right.push_back(sum(g, hr));
  Game result = mk_game(std::move(left), std::move(right));
  sum_memo().put(key, result);
  return result;
}

Game sum(std::span<const Game> terms) {
  Game total = games::zero();
  for (Game t : terms) total = sum(total, t);
  return total;
}

Game n_copies(Game g, std::size_t k) {
  Game total = games::zero();
  Game power = g;
  while (k > 0) {
    if (k & 1U) total = sum(total, power);
    k >>= 1U;
    if (k > 0) power = sum(power, power);
  }
  return total;
}

GameList followers(Game g) {
  std::unordered_set<Game> seen{g};
  GameList stack{g};
  while (!stack.empty()) {
    Game cur = stack.back();
    stack.pop_back();
    for (auto side : {left_options(cur), right_options(cur)}) {
      for (Game opt : side) {
        if (seen.insert(opt).second) stack.push_back(opt);
      }
    }
  }
  GameList out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_left_end(Game g) { return left_options(g).empty(); }

bool is_right_end(Game g) { return right_options(g).empty(); }

bool is_left_dead_end(Game g) {
  const auto fs = followers(g);
  return std::all_of(fs.begin(), fs.end(), is_left_end);
}

bool is_right_dead_end(Game g) {
  const auto fs = followers(g);
  return std::all_of(fs.begin(), fs.end(), is_right_end);
}

bool is_dead_end(Game g) { return is_left_dead_end(g) || is_right_dead_end(g); }

bool is_dead_ending(Game g) {
  for (Game f : followers(g)) {
    if (is_left_end(f) && !is_left_dead_end(f)) return false;
    if (is_right_end(f) && !is_right_dead_end(f)) return false;
  }
  return true;
}

std::size_t birthday(Game g) {
  if (auto hit = birthday_memo().get(g)) return *hit;
  std::size_t best = 0;
  for (auto side : {left_options(g), right_options(g)}) {
    for (Game opt : side) best = std::max(best, birthday(opt) + 1);
  }
  birthday_memo().put(g, static_cast<Game::id_type>(best));
  return best;
}

namespace games {

Game zero() { return Game(0); }

Game one() {
  static const Game g = mk_game({zero()}, {});
  return g;
}

Game one_bar() {
  static const Game g = mk_game({}, {zero()});
  return g;
}

Game two() {
  static const Game g = mk_game({one()}, {});
  return g;
}

Game two_bar() {
  static const Game g = mk_game({}, {one_bar()});
  return g;
}

Game star() {
  static const Game g = mk_game({zero()}, {zero()});
  return g;
}

Game star2() {
  static const Game g = mk_game({zero(), star()}, {zero(), star()});
  return g;
}

Game two_sharp() {
  static const Game g = mk_game({star2()}, {star2()});
  return g;
}

Game two_sharp0() {
  static const Game g = mk_game({zero(), two_sharp()}, {zero(), two_sharp()});
  return g;
}

Game two_sharp20() {
  static const Game g =
      mk_game({zero(), star2(), two_sharp()}, {zero(), star2(), two_sharp()});
  return g;
}

Game a() {
  static const Game g = mk_game({}, {two()});
  return g;
}

Game a_bar() {
  static const Game g = mk_game({two_bar()}, {});
  return g;
}

}  // namespace games
}  // namespace misere
