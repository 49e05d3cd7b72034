#include "misere/outcome.hpp"

#include <cstdint>
#include <mutex>
#include <shared_mutex>

namespace misere {
namespace {

// Per id, two bits of "computed" and two bits of "wins" for the two
// first-mover predicates.
constexpr std::uint8_t kLeftKnown = 1;
constexpr std::uint8_t kLeftWins = 2;
constexpr std::uint8_t kRightKnown = 4;
constexpr std::uint8_t kRightWins = 8;

class WinnerMemo {
 public:
  static WinnerMemo& instance() {
    static WinnerMemo memo;
    return memo;
  }

  std::uint8_t get(Game g) const {
    std::shared_lock lock(mutex_);
    return g.id() < flags_.size() ? flags_[g.id()] : 0;
  }

  void set(Game g, std::uint8_t bits) {
    std::unique_lock lock(mutex_);
    if (flags_.size() <= g.id()) flags_.resize(static_cast<std::size_t>(g.id()) * 2 + 16, 0);
    flags_[g.id()] |= bits;
  }

  std::vector<std::pair<Game, Outcome>> snapshot() const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<Game, Outcome>> out;
    for (std::size_t i = 0; i < flags_.size(); ++i) {
      const auto f = flags_[i];
      if ((f & kLeftKnown) && (f & kRightKnown)) {
        const bool lw = f & kLeftWins;
        const bool rw = f & kRightWins;
        const Outcome o = lw ? (rw ? Outcome::N : Outcome::L) : (rw ? Outcome::R : Outcome::P);
        out.emplace_back(Game(static_cast<Game::id_type>(i)), o);
      }
    }
    return out;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::uint8_t> flags_;
};

}  // namespace

std::optional<Outcome> outcome_from_char(char c) {
  switch (c) {
    case 'L': return Outcome::L;
    case 'N': return Outcome::N;
    case 'P': return Outcome::P;
    case 'R': return Outcome::R;
    default: return std::nullopt;
  }
}

bool left_wins_moving_first(Game g) {
  auto& memo = WinnerMemo::instance();
  if (const auto f = memo.get(g); f & kLeftKnown) return f & kLeftWins;
  bool wins = is_left_end(g);
  if (!wins) {
    for (Game gl : left_options(g)) {
      if (!right_wins_moving_first(gl)) {
        wins = true;
        break;
      }
    }
  }
  memo.set(g, static_cast<std::uint8_t>(kLeftKnown | (wins ? kLeftWins : 0)));
  return wins;
}

bool right_wins_moving_first(Game g) {
  auto& memo = WinnerMemo::instance();
  if (const auto f = memo.get(g); f & kRightKnown) return f & kRightWins;
  bool wins = is_right_end(g);
  if (!wins) {
    for (Game gr : right_options(g)) {
      if (!left_wins_moving_first(gr)) {
        wins = true;
        break;
      }
    }
  }
  memo.set(g, static_cast<std::uint8_t>(kRightKnown | (wins ? kRightWins : 0)));
  return wins;
}

Outcome misere_outcome(Game g) {
  const bool lw = left_wins_moving_first(g);
  const bool rw = right_wins_moving_first(g);
  if (lw && rw) return Outcome::N;
  if (lw) return Outcome::L;
  if (rw) return Outcome::R;
  return Outcome::P;
}

std::vector<std::pair<Game, Outcome>> outcome_memo_snapshot() {
  return WinnerMemo::instance().snapshot();
}

void seed_outcome(Game g, Outcome o) {
  if (WinnerMemo::instance().get(g) & (kLeftKnown | kRightKnown)) return;
  const bool lw = o == Outcome::L || o == Outcome::N;
  const bool rw = o == Outcome::R || o == Outcome::N;
  WinnerMemo::instance().set(g, static_cast<std::uint8_t>(kLeftKnown | kRightKnown |
                                                          (lw ? kLeftWins : 0) |
                                                          (rw ? kRightWins : 0)));
}

}  // namespace misere
