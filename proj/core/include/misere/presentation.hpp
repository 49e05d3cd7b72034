#pragma once

// Finite commutative monoid presentations with an outcome partition.
//
// Text format (one item per line, '#' starts a comment):
//
//   [generators]
//   a b c
//   [relations]
//   a^2=1
//   b^2c=c
//   [P]
//   a, b^2, bc, c^2
//
// Generators are single lowercase letters. A word is "1" (the identity) or a
// product of generators with optional exponents. Sections [L] and [R] list
// the other outcome portions; anything unlisted has outcome N.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "misere/outcome.hpp"

namespace misere {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonoidPresentation {
  std::vector<char> generators;
  std::vector<std::pair<std::string, std::string>> relations;
  std::map<Outcome, std::vector<std::string>> portions;
};

MonoidPresentation parse_presentation(std::string_view text);
MonoidPresentation load_presentation(const std::string& path);

/// Exponent vector of a word over the presentation's generators.
std::vector<unsigned> parse_word(const MonoidPresentation& p, std::string_view word);

/// A finite monoid given by its multiplication table, with an outcome per
/// element. Element 0 is the identity.
struct MonoidTable {
  std::vector<std::vector<std::size_t>> mul;
  std::vector<Outcome> outcome;

  [[nodiscard]] std::size_t size() const { return mul.size(); }
};

struct FiniteMonoid {
  MonoidTable table;
  /// Shortest normal-form word of every element ("1", "a", "b^2", "bc", ...).
  std::vector<std::string> words;
  std::vector<std::vector<unsigned>> exponents;

  [[nodiscard]] std::size_t element_of(const MonoidPresentation& p, std::string_view word) const;
};

/// Enumerates the commutative monoid presented by p. Throws
/// PresentationError if it does not stabilize within max_elements.
FiniteMonoid enumerate_monoid(const MonoidPresentation& p, std::size_t max_elements = 4096);

/// Every bijection from -> to preserving multiplication and outcomes, as
/// maps from element index of `from` to element index of `to`.
std::vector<std::vector<std::size_t>> find_isomorphisms(const MonoidTable& from,
                                                        const MonoidTable& to);

/// The fourteen-element quotient
///   <a,b,c | a^2=1, b^3=b, b^2c=c, c^3=ac^2> with P-portion {a, b^2, bc, c^2}.
MonoidPresentation two_sharp_presentation();

}  // namespace misere
