#include <random>

#include "doctest.h"
#include "misere/acceptance.hpp"
#include "misere/outcome.hpp"
#include "oracle.hpp"

using namespace misere;
using namespace misere::games;

TEST_CASE("named outcomes") {
  CHECK(misere_outcome(zero()) == Outcome::N);
  CHECK(misere_outcome(star()) == Outcome::P);
  CHECK(misere_outcome(one()) == Outcome::R);
  CHECK(misere_outcome(one_bar()) == Outcome::L);
  CHECK(misere_outcome(sum(one(), n_copies(a_bar(), 2))) == Outcome::N);
  CHECK(misere_outcome(star2()) == Outcome::N);
}

TEST_CASE("outcome order") {
  CHECK(outcome_ge(Outcome::L, Outcome::R));
  CHECK_FALSE(outcome_ge(Outcome::R, Outcome::L));
  CHECK_FALSE(outcome_ge(Outcome::N, Outcome::P));
  CHECK_FALSE(outcome_ge(Outcome::P, Outcome::N));
  CHECK(outcome_ge(Outcome::N, Outcome::N));
  CHECK(outcome_ge(Outcome::L, Outcome::P));
  CHECK(outcome_ge(Outcome::N, Outcome::R));
}

TEST_CASE("solver agrees with the explicit-tree oracle") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 400; ++i) {
    const auto g = oracle::random_tree(rng, 3, 2, false);
    const auto h = oracle::random_tree(rng, 2, 2, false);
    const auto s = oracle::sum(g, h);
    CHECK(to_char(misere_outcome(oracle::intern(s))) == oracle::outcome(s));
    CHECK(to_char(misere_outcome(sum(oracle::intern(g), oracle::intern(h)))) == oracle::outcome(s));
  }
}

TEST_CASE("impartial games are N or P and match the oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto t = oracle::random_tree(rng, 4, 2, true);
    const Outcome o = misere_outcome(oracle::intern(t));
    CHECK((o == Outcome::N || o == Outcome::P));
    CHECK(to_char(o) == oracle::outcome(t));
  }
}

TEST_CASE("integer sums agree with count minimax") {
  for (int k1 = 0; k1 <= 8; ++k1) {
    for (int k2 = 0; k2 <= 8; ++k2) {
      const Game g = sum(n_copies(one(), k1), n_copies(one_bar(), k2));
      CHECK(to_char(misere_outcome(g)) == oracle::integer_outcome(k1, k2));
    }
  }
}

TEST_CASE("conjugate duality on random games") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Game g = random_game(rng, 3, 3);
    CHECK(misere_outcome(conjugate(g)) == swap_sides(misere_outcome(g)));
  }
}

TEST_CASE("snapshot and seeding") {
  const Game g = sum(two(), a_bar());
  const Outcome o = misere_outcome(g);
  bool found = false;
  for (const auto& [h, oh] : outcome_memo_snapshot()) {
    if (h == g) found = oh == o;
  }
  CHECK(found);
  seed_outcome(g, swap_sides(o) == o ? Outcome::L : swap_sides(o));
  CHECK(misere_outcome(g) == o);
}
