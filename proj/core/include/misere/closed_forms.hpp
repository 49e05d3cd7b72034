#pragma once

// Exact results for the closure of a = {|2} and its conjugate, whose
// elements are k1·a + k2·~a + k3·1 + k4·~1 (see AVector).

#include <optional>

#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/universe.hpp"

namespace misere {

/// Closed-form misère outcome. Throws std::logic_error if the three cases
/// ever fail to select exactly one outcome.
Outcome aclosure_outcome(const AVector& v);

struct AClosureVerdict {
  bool holds = true;
  std::optional<AVector> witness;
};

/// Decides g >= h modulo the a-closure. Only X with every coordinate at most
/// 2 + (coordinate total of g and h) are tried: outcomes depend on the sign
/// of (k1+k3)-(k2+k4), on k1 versus k4 and on which coordinates vanish, and
/// every such threshold for g+X or h+X lies within that range. The cutoff is
/// validated against wider searches in tests.
AClosureVerdict aclosure_ge(const AVector& g, const AVector& h);

struct WitnessGame {
  AVector vector;
  Game game;
};

/// X with o(X) = N and o(G + X) != N, for G = realize(v) and v nonzero.
/// Throws std::invalid_argument for v = 0.
WitnessGame noninvertibility_witness(const AVector& v);

struct NonCancellationTriple {
  WitnessGame h;
  WitnessGame k;
  WitnessGame x;
};

/// (H, K, X) with G + H equivalent to G + K but o(H + X) != o(K + X).
/// Throws std::invalid_argument for v = 0.
NonCancellationTriple noncancellativity_witness(const AVector& v);

}  // namespace misere
