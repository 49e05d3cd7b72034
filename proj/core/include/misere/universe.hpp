#pragma once

// Universes: sets of games closed under disjunctive sum, conjugation and
// taking options.
//
// A universe is described by a finite basis of nonzero games; its elements
// are the multisets over that basis, enumerated by increasing multiset size
// and then lexicographically on the basis order. For a generated closure the
// basis is the conjugate-closed follower set of the generators (minus zero).

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "misere/game.hpp"

namespace misere {

/// Multiplicities over a universe basis.
struct Descriptor {
  std::vector<std::uint16_t> counts;

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool is_zero() const { return size() == 0; }

  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

Descriptor operator+(const Descriptor& x, const Descriptor& y);

struct Element {
  Descriptor descriptor;
  Game game;
};

/// Coefficients of k1·a + k2·~a + k3·1 + k4·~1.
struct AVector {
  std::array<std::uint32_t, 4> k{};

  friend bool operator==(const AVector&, const AVector&) = default;
};

AVector operator+(const AVector& x, const AVector& y);
std::string to_string(const AVector& v);

enum class NamedUniverse { mz, cl_a, cl_2sharp0, cl_2sharp20 };

class UniverseSpec {
 public:
  enum class Kind { generated, named, sum_of };

  /// Closure of `generators` under sum, options and (unless disabled)
  /// conjugation. With conjugate_closed = false the result is generally not
  /// a universe; it exists to exercise the closure checker.
  static UniverseSpec generated(GameList generators, bool conjugate_closed = true);
  static UniverseSpec named(NamedUniverse tag);
  static UniverseSpec sum_of(std::vector<UniverseSpec> parts);

  static UniverseSpec mz() { return named(NamedUniverse::mz); }
  static UniverseSpec cl_a() { return named(NamedUniverse::cl_a); }
  static UniverseSpec cl_2sharp0() { return named(NamedUniverse::cl_2sharp0); }
  static UniverseSpec cl_2sharp20() { return named(NamedUniverse::cl_2sharp20); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const GameList& basis() const { return basis_; }
  [[nodiscard]] const GameList& generators() const { return generators_; }
  [[nodiscard]] const std::vector<UniverseSpec>& parts() const { return parts_; }
  [[nodiscard]] std::optional<NamedUniverse> tag() const { return tag_; }
  [[nodiscard]] bool conjugate_closed() const { return conjugate_closed_; }

  /// Index of g in the basis, if present.
  [[nodiscard]] std::optional<std::size_t> basis_index(Game g) const;

  /// Canonical text in the CLI mini-language.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const UniverseSpec& x, const UniverseSpec& y) {
    return x.to_string() == y.to_string();
  }

 private:
  UniverseSpec() = default;

  Kind kind_ = Kind::generated;
  GameList generators_;
  bool conjugate_closed_ = true;
  std::optional<NamedUniverse> tag_;
  std::vector<UniverseSpec> parts_;
  GameList basis_;
};

/// Parses `MZ`, `CL_A`, `CL_2SHARP0`, `CL_2SHARP20`, `gens:g1;g2;...`,
/// `rawgens:g1;...` (no conjugate closure) or `sum:(spec)+(spec)+...`.
UniverseSpec parse_universe(std::string_view text);

UniverseSpec sum_universe(const UniverseSpec& u1, const UniverseSpec& u2);

/// All elements of multiset size at most `bound`, each multiset exactly once,
/// in enumeration order. Results are cached per (basis, bound).
std::shared_ptr<const std::vector<Element>> closure_enumerate(const UniverseSpec& u,
                                                              std::size_t bound);

/// Interned game for a descriptor over u's basis.
Game realize(const UniverseSpec& u, const Descriptor& d);

Game avector_game(const AVector& v);
Descriptor to_descriptor(const AVector& v);
AVector to_avector(const Descriptor& d);

/// "a+a+~1"-style text for a descriptor (pretty atom names joined by '+').
std::string describe(const UniverseSpec& u, const Descriptor& d);

/// For a SumOf universe, splits d into one descriptor per part. Each atom is
/// assigned to the first part whose basis contains it.
std::vector<Descriptor> split_descriptor(const UniverseSpec& u, const Descriptor& d);

std::optional<Element> find_p_position(const UniverseSpec& u, std::size_t bound);

struct ClosureReport {
  enum class Violation { conjugate, sum, option };

  struct Escapee {
    Violation kind;
    Element source;
    Game missing;
  };

  bool closed = true;
  std::size_t bound = 0;
  std::size_t elements_checked = 0;
  std::optional<Escapee> escapee;
};

std::string_view to_string(ClosureReport::Violation v);

/// Checks that conjugates and pairwise sums of enumerated elements (within
/// the bound) are enumerated, and that every option of an enumerated element
/// lies in the enumeration at twice the bound.
ClosureReport check_universe_closure(const UniverseSpec& u, std::size_t bound);

}  // namespace misere
