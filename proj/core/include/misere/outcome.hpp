#pragma once

// Misère outcomes. A player who cannot move on their turn wins, because the
// opponent made the last move.

#include <optional>
#include <utility>
#include <vector>

#include "misere/game.hpp"

namespace misere {

enum class Outcome : char { L = 'L', N = 'N', P = 'P', R = 'R' };

/// Partial order with L on top, R at the bottom, N and P incomparable.
constexpr bool outcome_ge(Outcome x, Outcome y) {
  return x == y || x == Outcome::L || y == Outcome::R;
}

constexpr char to_char(Outcome o) { return static_cast<char>(o); }

std::optional<Outcome> outcome_from_char(char c);

/// Outcome of the conjugate game: L and R swap, N and P are fixed.
constexpr Outcome swap_sides(Outcome o) {
  switch (o) {
    case Outcome::L: return Outcome::R;
    case Outcome::R: return Outcome::L;
    default: return o;
  }
}

bool left_wins_moving_first(Game g);
bool right_wins_moving_first(Game g);
Outcome misere_outcome(Game g);

/// Every memoized outcome, in id order.
std::vector<std::pair<Game, Outcome>> outcome_memo_snapshot();

/// Pre-loads a known outcome (used by the persistent cache).
void seed_outcome(Game g, Outcome o);

}  // namespace misere
