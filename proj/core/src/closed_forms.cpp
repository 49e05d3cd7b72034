#include "misere/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace misere {
namespace {

bool has_left_move(const AVector& v) { return v.k[1] > 0 || v.k[2] > 0; }
bool has_right_move(const AVector& v) { return v.k[0] > 0 || v.k[3] > 0; }

WitnessGame make(const AVector& v) { return WitnessGame{v, avector_game(v)}; }

AVector avec(std::uint32_t k1, std::uint32_t k2, std::uint32_t k3, std::uint32_t k4) {
  return AVector{{k1, k2, k3, k4}};
}

}  // namespace

Outcome aclosure_outcome(const AVector& v) {
  const auto [k1, k2, k3, k4] = v.k;
  const bool is_n = k1 + k3 == k2 + k4 || (k2 == 0 && k3 == 0 && k1 >= k4) ||
                    (k1 == 0 && k4 == 0 && k2 >= k3);
  const bool is_l = k1 + k4 > 0 && k2 + k4 > k1 + k3;
  const bool is_r = k2 + k3 > 0 && k1 + k3 > k2 + k4;
  if (is_n + is_l + is_r != 1) {
    throw std::logic_error("outcome formula is not a partition at " + to_string(v));
  }
  return is_n ? Outcome::N : (is_l ? Outcome::L : Outcome::R);
}

AClosureVerdict aclosure_ge(const AVector& g, const AVector& h) {
  if (g == h) return {};
  const auto total = [](const AVector& v) { return v.k[0] + v.k[1] + v.k[2] + v.k[3]; };
  const std::uint32_t cap = 2 + total(g) + total(h);

  // Walk X by increasing total size, then lexicographically on the
  // nondecreasing sequence of atoms (so larger leading counts first),
  // matching closure_enumerate.
  for (std::uint32_t size = 0; size <= 4 * cap; ++size) {
    for (std::uint32_t c0 = std::min(size, cap) + 1; c0-- > 0;) {
      for (std::uint32_t c1 = std::min(size - c0, cap) + 1; c1-- > 0;) {
        for (std::uint32_t c2 = std::min(size - c0 - c1, cap) + 1; c2-- > 0;) {
          const std::uint32_t c3 = size - c0 - c1 - c2;
          if (c3 > cap) continue;
          const AVector x = avec(c0, c1, c2, c3);
          if (!outcome_ge(aclosure_outcome(g + x), aclosure_outcome(h + x))) {
            return AClosureVerdict{false, x};
          }
        }
      }
    }
  }
  return {};
}

WitnessGame noninvertibility_witness(const AVector& v) {
  const std::uint32_t total = v.k[0] + v.k[1] + v.k[2] + v.k[3];
  if (total == 0) throw std::invalid_argument("noninvertibility witness needs a nonzero vector");
  if (has_left_move(v)) return make(avec(total + 1, 0, 0, 0));
  return make(avec(0, total + 1, 0, 0));
}

NonCancellationTriple noncancellativity_witness(const AVector& v) {
  if (v == AVector{}) throw std::invalid_argument("noncancellativity witness needs a nonzero vector");
  if (has_right_move(v)) {
    return {make(avec(0, 0, 1, 0)), make(avec(0, 0, 2, 1)), make(avec(0, 2, 0, 0))};
  }
  return {make(avec(0, 0, 0, 1)), make(avec(0, 0, 1, 2)), make(avec(2, 0, 0, 0))};
}

}  // namespace misere
