#pragma once

// Bounded misère quotient estimation.
//
// Elements of a universe up to elem_bound are grouped by their outcome
// fingerprint X -> o(G + X) over every test X up to test_bound. The class
// count is an estimate "at bounds (e, t)"; stabilization as the bounds grow
// is the convergence signal.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/presentation.hpp"
#include "misere/universe.hpp"

namespace misere {

/// Thrown when a check needs multiplication entries that were not computed.
class IncompleteTableError : public std::runtime_error {
 public:
  IncompleteTableError(std::vector<std::pair<std::size_t, std::size_t>> missing);

  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& missing() const {
    return missing_;
  }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> missing_;
};

struct QuotientClass {
  /// First member in enumeration order.
  Element representative;
  Outcome outcome;
  std::size_t members = 0;
};

class QuotientTable {
 public:
  QuotientTable(UniverseSpec universe, std::size_t elem_bound, std::size_t test_bound);

  [[nodiscard]] const UniverseSpec& universe() const { return universe_; }
  [[nodiscard]] std::size_t elem_bound() const { return elem_bound_; }
  [[nodiscard]] std::size_t test_bound() const { return test_bound_; }
  [[nodiscard]] std::size_t size() const { return classes_.size(); }
  [[nodiscard]] const std::vector<QuotientClass>& classes() const { return classes_; }
  [[nodiscard]] const std::vector<Element>& tests() const { return *tests_; }
  [[nodiscard]] const std::vector<Outcome>& fingerprint(std::size_t cls) const { return prints_[cls]; }

  /// Class of the ZERO game.
  [[nodiscard]] std::size_t identity() const { return 0; }

  /// Product of two classes, or absent when the representative sum exceeds
  /// the element bound.
  [[nodiscard]] std::optional<std::size_t> mul(std::size_t x, std::size_t y) const { return mul_[x][y]; }
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> unknown_entries() const;

  /// Class of an enumerated element's game, if it was enumerated.
  [[nodiscard]] std::optional<std::size_t> class_of_enumerated(Game g) const;

  /// Index into tests() of the first X separating two classes.
  [[nodiscard]] std::optional<std::size_t> distinguishing_test(std::size_t x, std::size_t y) const;

  /// Full table for isomorphism search; throws IncompleteTableError.
  [[nodiscard]] MonoidTable monoid_table() const;

 private:
  friend QuotientTable quotient_estimate(const UniverseSpec&, std::size_t, std::size_t);

  UniverseSpec universe_;
  std::size_t elem_bound_;
  std::size_t test_bound_;
  std::shared_ptr<const std::vector<Element>> tests_;
  std::vector<QuotientClass> classes_;
  std::vector<std::vector<Outcome>> prints_;
  std::vector<std::vector<std::optional<std::size_t>>> mul_;
  std::unordered_map<Game, std::size_t> class_of_game_;
};

/// Throws std::invalid_argument if either bound is zero.
QuotientTable quotient_estimate(const UniverseSpec& u, std::size_t elem_bound, std::size_t test_bound);

/// Class whose fingerprint matches g's over the table's tests, or absent
/// when g falls outside every class.
std::optional<std::size_t> class_of(const QuotientTable& q, Game g);

struct PresentationMatch {
  /// Presented-monoid element index for each class.
  std::vector<std::size_t> class_to_element;
  /// Normal-form word for each class.
  std::vector<std::string> class_words;
};

/// Every outcome-preserving isomorphism between the quotient and the
/// presented monoid; empty when none exists.
std::vector<PresentationMatch> check_presentation(const QuotientTable& q, const MonoidPresentation& p);

struct SharedAtom {
  Game game;
  std::size_t class1 = 0;
  std::size_t class2 = 0;
  /// Per isomorphism: does it send class1 to class2?
  std::vector<bool> corresponds;
};

struct QuotientComparison {
  std::size_t classes1 = 0;
  std::size_t classes2 = 0;
  /// Maps class of Q1 -> class of Q2.
  std::vector<std::vector<std::size_t>> isomorphisms;
  std::vector<SharedAtom> shared;

  [[nodiscard]] bool isomorphic() const { return !isomorphisms.empty(); }
};

QuotientComparison compare_quotients(const QuotientTable& q1, const QuotientTable& q2);

}  // namespace misere
