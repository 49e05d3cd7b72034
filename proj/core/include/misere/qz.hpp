#pragma once

// Universes whose misère quotient is the integers under addition, with the
// sign of the witness value deciding the outcome (0 -> N, negative -> L,
// positive -> R).
//
// The witness is computed by padding: a game with outcome R is padded with
// copies of ~1 = {|0} until the sum becomes an N-position; the number of
// copies is its value. L-positions are padded with 1 = {0|} and get the
// negated count.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "misere/game.hpp"
#include "misere/universe.hpp"

namespace misere {

class WitnessError : public std::runtime_error {
 public:
  enum class Kind { p_position, cap_exceeded };

  WitnessError(Kind kind, Game g, const std::string& message)
      : std::runtime_error(message), kind_(kind), game_(g) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] Game game() const { return game_; }

 private:
  Kind kind_;
  Game game_;
};

/// Witness value of g, searching at most `cap` copies of padding.
/// Throws WitnessError on a P-position or when the cap is exceeded.
std::int64_t compute_witness(const UniverseSpec& u, Game g, std::size_t cap);

class WitnessFunction {
 public:
  /// Witness of u evaluated by padding; the search cap for a game is
  /// max(cap, birthday) since |f(G)| never exceeds the birthday of G.
  static WitnessFunction padding(UniverseSpec u, std::size_t cap = 0);

  /// f(G1 + G2) = f1(G1) + f2(G2) on the sum universe, evaluated through
  /// descriptor decomposition.
  static WitnessFunction sum(const WitnessFunction& f1, const WitnessFunction& f2);

  [[nodiscard]] const UniverseSpec& universe() const;

  std::int64_t operator()(const Element& e) const;

  /// Only available for padding witnesses; a sum witness needs a
  /// descriptor and throws std::logic_error.
  std::int64_t operator()(Game g) const;

 private:
  struct Impl;
  explicit WitnessFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

WitnessFunction sum_witness(const WitnessFunction& f1, const WitnessFunction& f2);

struct QzVerdict {
  enum class Status { qz_up_to_bound, refuted };
  enum class Condition {
    p_position,
    witness_search,
    additivity,
    outcome_sign,
    surjectivity,
    a,
    b,
    c,
    d,
  };

  Status status = Status::qz_up_to_bound;
  std::size_t bound = 0;
  std::optional<Element> counterexample;
  std::optional<Condition> condition;
  std::string detail;

  [[nodiscard]] bool passed() const { return status == Status::qz_up_to_bound; }
};

std::string_view to_string(QzVerdict::Status s);
std::string_view to_string(QzVerdict::Condition c);

/// Additivity on enumerated pairs, outcome/sign agreement, and surjectivity
/// onto [-bound, bound].
QzVerdict verify_witness_axioms(const UniverseSpec& u, std::size_t bound);

/// Conditions a) to d) on the witness values of every enumerated game and
/// its options.
QzVerdict verify_structural_conditions(const UniverseSpec& u, std::size_t bound);

/// No P-position, witness axioms and structural conditions, all up to bound.
QzVerdict is_qz(const UniverseSpec& u, std::size_t bound);

}  // namespace misere
