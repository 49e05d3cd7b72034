#pragma once

// Reference solvers that share no code with the library: explicit trees,
// explicit sums and plain recursion without interning.

#include <cstddef>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "misere/game.hpp"

namespace oracle {

struct Tree {
  std::vector<Tree> left;
  std::vector<Tree> right;
};

inline Tree sum(const Tree& g, const Tree& h) {
  Tree s;
  for (const auto& gl : g.left) s.left.push_back(sum(gl, h));
  for (const auto& hl : h.left) s.left.push_back(sum(g, hl));
  for (const auto& gr : g.right) s.right.push_back(sum(gr, h));
  for (const auto& hr : h.right) s.right.push_back(sum(g, hr));
  return s;
}

inline bool left_first_wins(const Tree& t);

inline bool right_first_wins(const Tree& t) {
  if (t.right.empty()) return true;
  for (const auto& r : t.right) {
    if (!left_first_wins(r)) return true;
  }
  return false;
}

inline bool left_first_wins(const Tree& t) {
  if (t.left.empty()) return true;
  for (const auto& l : t.left) {
    if (!right_first_wins(l)) return true;
  }
  return false;
}

/// 'L', 'N', 'P' or 'R'.
inline char outcome(const Tree& t) {
  const bool l = left_first_wins(t);
  const bool r = right_first_wins(t);
  return l ? (r ? 'N' : 'L') : (r ? 'R' : 'P');
}

inline misere::Game intern(const Tree& t) {
  misere::GameList l;
  misere::GameList r;
  for (const auto& x : t.left) l.push_back(intern(x));
  for (const auto& x : t.right) r.push_back(intern(x));
  return misere::mk_game(l, r);
}

inline Tree random_tree(std::mt19937_64& rng, int depth, int width, bool impartial) {
  Tree t;
  if (depth == 0) return t;
  std::uniform_int_distribution<int> count(0, width);
  for (int i = count(rng); i > 0; --i) t.left.push_back(random_tree(rng, depth - 1, width, impartial));
  if (impartial) {
    t.right = t.left;
  } else {
    for (int i = count(rng); i > 0; --i) t.right.push_back(random_tree(rng, depth - 1, width, impartial));
  }
  return t;
}

/// Outcome of k1·1 + k2·~1 by minimax on the pair of counts: Left can only
/// remove a 1, Right can only remove a ~1.
inline char integer_outcome(int k1, int k2) {
  std::map<std::pair<int, int>, std::pair<bool, bool>> memo;
  auto solve = [&](auto&& self, int a, int b) -> std::pair<bool, bool> {
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    const bool lw = a == 0 || !self(self, a - 1, b).second;
    const bool rw = b == 0 || !self(self, a, b - 1).first;
    return memo[{a, b}] = {lw, rw};
  };
  const auto [l, r] = solve(solve, k1, k2);
  return l ? (r ? 'N' : 'L') : (r ? 'R' : 'P');
}

}  // namespace oracle
