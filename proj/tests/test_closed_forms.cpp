#include <random>

#include "doctest.h"
#include "misere/closed_forms.hpp"
#include "misere/compare.hpp"

using namespace misere;

namespace {

AVector av(std::uint32_t k1, std::uint32_t k2, std::uint32_t k3, std::uint32_t k4) {
  return AVector{{k1, k2, k3, k4}};
}

AVector random_avector(std::mt19937_64& rng, std::uint32_t max) {
  std::uniform_int_distribution<std::uint32_t> d(0, max);
  return av(d(rng), d(rng), d(rng), d(rng));
}

// Exhaustive search over X with every coordinate at most `cap`, with
// outcomes taken from the formula.
bool ge_brute(const AVector& g, const AVector& h, std::uint32_t cap) {
  for (std::uint32_t a = 0; a <= cap; ++a)
    for (std::uint32_t b = 0; b <= cap; ++b)
      for (std::uint32_t c = 0; c <= cap; ++c)
        for (std::uint32_t d = 0; d <= cap; ++d) {
          const AVector x = av(a, b, c, d);
          if (!outcome_ge(aclosure_outcome(g + x), aclosure_outcome(h + x))) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("formula examples") {
  CHECK(aclosure_outcome(av(0, 0, 0, 0)) == Outcome::N);
  CHECK(aclosure_outcome(av(1, 2, 0, 0)) == Outcome::L);
  CHECK(aclosure_outcome(av(0, 2, 1, 1)) == Outcome::L);
  CHECK(aclosure_outcome(av(0, 2, 1, 0)) == Outcome::N);
  CHECK(aclosure_outcome(av(0, 0, 1, 0)) == Outcome::R);
  CHECK(aclosure_outcome(av(0, 0, 2, 1)) == Outcome::R);
}

TEST_CASE("formula agrees with the solver") {
  for (std::uint32_t k1 = 0; k1 <= 3; ++k1)
    for (std::uint32_t k2 = 0; k2 <= 3; ++k2)
      for (std::uint32_t k3 = 0; k3 <= 3; ++k3)
        for (std::uint32_t k4 = 0; k4 <= 3; ++k4) {
          const AVector v = av(k1, k2, k3, k4);
          CAPTURE(to_string(v));
          CHECK(aclosure_outcome(v) == misere_outcome(avector_game(v)));
        }
}

TEST_CASE("formula selects exactly one outcome on a wide range") {
  for (std::uint32_t k1 = 0; k1 <= 12; ++k1)
    for (std::uint32_t k2 = 0; k2 <= 12; ++k2)
      for (std::uint32_t k3 = 0; k3 <= 12; ++k3)
        for (std::uint32_t k4 = 0; k4 <= 12; ++k4) CHECK_NOTHROW(aclosure_outcome(av(k1, k2, k3, k4)));
}

TEST_CASE("aclosure_ge examples") {
  CHECK(aclosure_ge(av(1, 2, 0, 1), av(1, 2, 0, 1)).holds);
  const auto v = aclosure_ge(av(1, 0, 0, 0), av(0, 0, 0, 0));
  REQUIRE_FALSE(v.holds);
  CHECK_FALSE(outcome_ge(aclosure_outcome(av(1, 0, 0, 0) + *v.witness), aclosure_outcome(*v.witness)));
  CHECK_FALSE(outcome_ge(aclosure_outcome(av(1, 0, 0, 1)), aclosure_outcome(av(0, 0, 0, 1))));

  CHECK(aclosure_ge(av(0, 0, 2, 1), av(0, 0, 1, 0)).holds);
  const auto back = aclosure_ge(av(0, 0, 1, 0), av(0, 0, 2, 1));
  REQUIRE_FALSE(back.holds);
  CHECK(*back.witness == av(0, 2, 0, 0));
}

TEST_CASE("aclosure_ge cutoff agrees with a wider search") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const AVector g = random_avector(rng, 2);
    const AVector h = random_avector(rng, 2);
    CAPTURE(to_string(g));
    CAPTURE(to_string(h));
    CHECK(aclosure_ge(g, h).holds == ge_brute(g, h, 30));
  }
  // Needs X = 5a, beyond any cutoff tied to the largest coordinate.
  CHECK_FALSE(aclosure_ge(av(0, 2, 0, 2), av(1, 0, 0, 0)).holds);
  CHECK_FALSE(ge_brute(av(0, 2, 0, 2), av(1, 0, 0, 0), 30));
}

TEST_CASE("aclosure_ge agrees with bounded enumeration") {
  std::mt19937_64 rng(31);
  const auto u = UniverseSpec::cl_a();
  for (int i = 0; i < 200; ++i) {
    const AVector g = random_avector(rng, 2);
    const AVector h = random_avector(rng, 2);
    CAPTURE(to_string(g));
    CAPTURE(to_string(h));
    const auto exact = aclosure_ge(g, h);
    const auto bounded = ge_mod(avector_game(g), avector_game(h), u, 5);
    if (!bounded.holds()) CHECK_FALSE(exact.holds);
    if (exact.holds) CHECK(bounded.holds());
    if (!exact.holds && to_descriptor(*exact.witness).size() <= 5) {
      CHECK_FALSE(bounded.holds());
      CHECK(to_avector(bounded.witness->descriptor) == *exact.witness);
    }
  }
}

TEST_CASE("noninvertibility witnesses") {
  const auto w1 = noninvertibility_witness(av(0, 1, 0, 0));
  CHECK(w1.vector == av(2, 0, 0, 0));
  CHECK(misere_outcome(sum(games::a_bar(), w1.game)) == Outcome::R);
  const auto w2 = noninvertibility_witness(av(1, 0, 0, 0));
  CHECK(w2.vector == av(0, 2, 0, 0));
  CHECK(misere_outcome(sum(games::a(), w2.game)) == Outcome::L);
  const auto w3 = noninvertibility_witness(av(0, 0, 1, 0));
  CHECK(w3.vector == av(2, 0, 0, 0));
  CHECK(misere_outcome(w3.game) == Outcome::N);
  CHECK(misere_outcome(sum(games::one(), w3.game)) == Outcome::R);
  CHECK_THROWS_AS(noninvertibility_witness(av(0, 0, 0, 0)), std::invalid_argument);

  for (std::uint32_t k1 = 0; k1 <= 2; ++k1)
    for (std::uint32_t k2 = 0; k2 <= 2; ++k2)
      for (std::uint32_t k3 = 0; k3 <= 2; ++k3)
        for (std::uint32_t k4 = 0; k4 <= 2; ++k4) {
          const AVector v = av(k1, k2, k3, k4);
          if (v == AVector{}) continue;
          const auto w = noninvertibility_witness(v);
          CHECK(misere_outcome(w.game) == Outcome::N);
          CHECK(misere_outcome(sum(avector_game(v), w.game)) != Outcome::N);
        }
}

TEST_CASE("noncancellativity witnesses") {
  const auto t1 = noncancellativity_witness(av(1, 0, 0, 0));
  CHECK(t1.h.vector == av(0, 0, 1, 0));
  CHECK(t1.k.vector == av(0, 0, 2, 1));
  CHECK(t1.x.vector == av(0, 2, 0, 0));
  const auto t2 = noncancellativity_witness(av(0, 1, 0, 0));
  CHECK(t2.h.vector == av(0, 0, 0, 1));
  CHECK(t2.k.vector == av(0, 0, 1, 2));
  CHECK(t2.x.vector == av(2, 0, 0, 0));
  const auto t3 = noncancellativity_witness(av(0, 0, 5, 0));
  CHECK(t3.h.vector == t2.h.vector);
  CHECK_THROWS_AS(noncancellativity_witness(av(0, 0, 0, 0)), std::invalid_argument);

  for (const AVector v : {av(1, 0, 0, 0), av(0, 1, 0, 0), av(0, 0, 5, 0), av(1, 1, 0, 2), av(0, 2, 3, 0)}) {
    CAPTURE(to_string(v));
    const auto t = noncancellativity_witness(v);
    CHECK(aclosure_ge(v + t.h.vector, v + t.k.vector).holds);
    CHECK(aclosure_ge(v + t.k.vector, v + t.h.vector).holds);
    CHECK(misere_outcome(sum(t.h.game, t.x.game)) != misere_outcome(sum(t.k.game, t.x.game)));
  }
}
