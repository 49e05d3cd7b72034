#pragma once

// Comparison modulo a universe as bounded semi-decisions.
//
// Every verdict carries the bound it was computed at. A distinguishing
// witness X is the first one in enumeration order (smallest multiset first),
// so reports are deterministic and minimal.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/universe.hpp"

namespace misere {

struct CompareVerdict {
  enum class Status { holds_up_to_bound, distinguished };
  /// Which inequality failed: lhs >= rhs or rhs >= lhs.
  enum class Direction { lhs_ge_rhs, rhs_ge_lhs };

  Status status = Status::holds_up_to_bound;
  std::size_t bound = 0;
  std::optional<Element> witness;
  std::optional<Direction> direction;
  /// Outcomes of lhs + X and rhs + X at the witness.
  std::optional<Outcome> lhs_outcome;
  std::optional<Outcome> rhs_outcome;

  [[nodiscard]] bool holds() const { return status == Status::holds_up_to_bound; }
};

std::string_view to_string(CompareVerdict::Status s);
std::string_view to_string(CompareVerdict::Direction d);

CompareVerdict ge_mod(Game g, Game h, const UniverseSpec& u, std::size_t bound);
CompareVerdict equiv_mod(Game g, Game h, const UniverseSpec& u, std::size_t bound);

/// g + ~g equivalent to zero modulo u, up to the bound.
CompareVerdict is_invertible(Game g, const UniverseSpec& u, std::size_t bound);

struct InverseCriterionRecord {
  Game g;
  Element x;  // a Left end of the universe
  Outcome outcome;  // of g + ~g + x
};

struct InverseCriterionReport {
  bool passed = true;
  std::size_t bound = 0;
  std::vector<InverseCriterionRecord> records;
  std::vector<InverseCriterionRecord> violations;
};

/// Checks that g + ~g + X is an L- or N-position for every g in `s` and every
/// enumerated Left end X. Throws std::invalid_argument if `s` is not closed
/// under taking options.
InverseCriterionReport inverse_criterion_check(const GameList& s, const UniverseSpec& u,
                                               std::size_t bound);

struct CancellationWitness {
  Element h;
  Element k;
  Element x;
};

/// Searches enumerated pairs (H, K) with g + H equivalent to g + K up to the
/// bound while some enumerated X separates H from K.
std::optional<CancellationWitness> cancellative_check(Game g, const UniverseSpec& u,
                                                      std::size_t bound);

}  // namespace misere
