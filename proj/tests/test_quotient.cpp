#include <set>

#include "doctest.h"
#include "misere/presentation.hpp"
#include "misere/quotient.hpp"

using namespace misere;
using namespace misere::games;

TEST_CASE("presentation parsing") {
  const auto p = two_sharp_presentation();
  CHECK(p.generators == std::vector<char>{'a', 'b', 'c'});
  CHECK(p.relations.size() == 4);
  CHECK(p.portions.at(Outcome::P).size() == 4);
  CHECK(parse_word(p, "b^2c") == std::vector<unsigned>{0, 2, 1});
  CHECK(parse_word(p, "1") == std::vector<unsigned>{0, 0, 0});
  CHECK(parse_word(p, "aab") == std::vector<unsigned>{2, 1, 0});
  CHECK_THROWS_AS(parse_word(p, "d"), PresentationError);
  CHECK_THROWS_AS(parse_presentation("[relations]\na=\n"), PresentationError);
  CHECK_THROWS_AS(parse_presentation("[bogus]\n"), PresentationError);
  CHECK_THROWS_AS(parse_presentation("[generators]\nA\n"), PresentationError);
}

TEST_CASE("fourteen-element monoid") {
  const auto p = two_sharp_presentation();
  const auto m = enumerate_monoid(p);
  REQUIRE(m.table.size() == 14);
  std::size_t p_count = 0;
  for (std::size_t x = 0; x < 14; ++x) {
    if (m.table.outcome[x] == Outcome::P) ++p_count;
    CHECK(m.table.mul[0][x] == x);
    for (std::size_t y = 0; y < 14; ++y) {
      CHECK(m.table.mul[x][y] == m.table.mul[y][x]);
      for (std::size_t z = 0; z < 14; ++z) {
        CHECK(m.table.mul[m.table.mul[x][y]][z] == m.table.mul[x][m.table.mul[y][z]]);
      }
    }
  }
  CHECK(p_count == 4);
  CHECK(m.element_of(p, "a^2") == 0);
  CHECK(m.element_of(p, "b^3") == m.element_of(p, "b"));
  CHECK(m.element_of(p, "c^3") == m.element_of(p, "ac^2"));
  CHECK(m.element_of(p, "b^2c") == m.element_of(p, "c"));
  CHECK(m.words[m.element_of(p, "ba")] == "ab");
}

TEST_CASE("infinite presentations are rejected") {
  CHECK_THROWS_AS(enumerate_monoid(parse_presentation("[generators]\na b\n[relations]\na^2=1\n"), 200),
                  PresentationError);
}

TEST_CASE("quotient of the zero closure") {
  const auto q = quotient_estimate(UniverseSpec::generated({zero()}), 3, 3);
  REQUIRE(q.size() == 1);
  CHECK(q.classes()[0].outcome == Outcome::N);
  CHECK(class_of(q, zero()) == q.identity());
  const auto matches = check_presentation(q, parse_presentation("[generators]\n"));
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].class_words == std::vector<std::string>{"1"});
  CHECK_THROWS_AS(quotient_estimate(UniverseSpec::mz(), 0, 3), std::invalid_argument);
}

TEST_CASE("quotient of the star closure") {
  const auto u = UniverseSpec::generated({star()});
  for (std::size_t t = 2; t <= 8; ++t) CHECK(quotient_estimate(u, 8, t).size() == 2);
  const auto q = quotient_estimate(u, 8, 8);
  const auto s = class_of(q, star());
  REQUIRE(s.has_value());
  CHECK(q.mul(*s, *s) == q.identity());
  CHECK(q.classes()[*s].outcome == Outcome::P);
  const auto matches = check_presentation(q, parse_presentation("[generators]\na\n[relations]\na^2=1\n[P]\na\n"));
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].class_words[*s] == "a");
  CHECK(check_presentation(q, parse_presentation("[generators]\na\n[relations]\na^2=1\n")).empty());
}

TEST_CASE("class table invariants") {
  const auto u = UniverseSpec::cl_2sharp0();
  const auto q = quotient_estimate(u, 6, 6);
  for (std::size_t x = 0; x < q.size(); ++x) {
    CHECK(q.fingerprint(x)[0] == q.classes()[x].outcome);
    for (std::size_t y = 0; y < q.size(); ++y) {
      CHECK(q.mul(x, y) == q.mul(y, x));
      if (x != y) {
        const auto t = q.distinguishing_test(x, y);
        REQUIRE(t.has_value());
        const Game xg = q.tests()[*t].game;
        CHECK(misere_outcome(sum(q.classes()[x].representative.game, xg)) !=
              misere_outcome(sum(q.classes()[y].representative.game, xg)));
      }
    }
    if (q.mul(x, 0)) CHECK(*q.mul(x, 0) == x);
  }
  for (const auto& e : *closure_enumerate(u, 6)) {
    const auto c = q.class_of_enumerated(e.game);
    REQUIRE(c.has_value());
    CHECK(misere_outcome(e.game) == q.classes()[*c].outcome);
    for (Game g : followers(e.game)) {
      CHECK(left_options(g).size() == right_options(g).size());
    }
    const Outcome o = misere_outcome(e.game);
    CHECK((o == Outcome::N || o == Outcome::P));
  }
}

TEST_CASE("refinement as the test bound grows") {
  const auto u = UniverseSpec::cl_2sharp20();
  const auto elems = closure_enumerate(u, 5);
  std::vector<QuotientTable> qs;
  for (std::size_t t = 1; t <= 6; ++t) qs.push_back(quotient_estimate(u, 5, t));
  for (std::size_t t = 1; t < qs.size(); ++t) {
    CHECK(qs[t].size() >= qs[t - 1].size());
    for (const auto& x : *elems) {
      for (const auto& y : *elems) {
        if (qs[t].class_of_enumerated(x.game) == qs[t].class_of_enumerated(y.game)) {
          CHECK(qs[t - 1].class_of_enumerated(x.game) == qs[t - 1].class_of_enumerated(y.game));
        }
      }
    }
  }
}

TEST_CASE("the two closures share a quotient but their sum does not") {
  const auto p = two_sharp_presentation();
  const auto m = enumerate_monoid(p);
  const auto q0 = quotient_estimate(UniverseSpec::cl_2sharp0(), 8, 8);
  const auto q20 = quotient_estimate(UniverseSpec::cl_2sharp20(), 8, 8);
  CHECK(q0.size() == 14);
  CHECK(q20.size() == 14);
  CHECK(q0.unknown_entries().empty());

  const auto m0 = check_presentation(q0, p);
  const auto m20 = check_presentation(q20, p);
  REQUIRE_FALSE(m0.empty());
  REQUIRE_FALSE(m20.empty());
  const std::set<std::string> p_words{"a", "b^2", "bc", "c^2"};
  for (const auto& match : m0) {
    for (std::size_t c = 0; c < q0.size(); ++c) {
      CHECK((q0.classes()[c].outcome == Outcome::P) == p_words.contains(match.class_words[c]));
    }
    CHECK(match.class_to_element[*class_of(q0, star2())] == m.element_of(p, "b"));
  }
  for (const auto& match : m20) {
    CHECK(match.class_to_element[*class_of(q20, star2())] == m.element_of(p, "ab"));
  }

  const auto cmp = compare_quotients(q0, q20);
  CHECK(cmp.isomorphic());
  CHECK(cmp.classes1 == 14);
  CHECK(cmp.classes2 == 14);
  bool star2_shared = false;
  for (const auto& s : cmp.shared) {
    if (s.game == star2()) {
      star2_shared = true;
      for (bool ok : s.corresponds) CHECK_FALSE(ok);
    }
  }
  CHECK(star2_shared);

  const auto self = compare_quotients(q0, q0);
  CHECK(self.isomorphic());
  bool has_identity = false;
  for (const auto& phi : self.isomorphisms) {
    bool id = true;
    for (std::size_t c = 0; c < phi.size(); ++c) id = id && phi[c] == c;
    has_identity = has_identity || id;
  }
  CHECK(has_identity);

  const auto su = sum_universe(UniverseSpec::cl_2sharp0(), UniverseSpec::cl_2sharp20());
  const auto qs = quotient_estimate(su, 8, 8);
  CHECK(qs.size() > 14);
  CHECK_FALSE(compare_quotients(q0, qs).isomorphic());
}

TEST_CASE("unknown entries are reported") {
  const auto q = quotient_estimate(UniverseSpec::cl_2sharp0(), 2, 2);
  if (!q.unknown_entries().empty()) {
    CHECK_THROWS_AS(check_presentation(q, two_sharp_presentation()), IncompleteTableError);
    try {
      static_cast<void>(q.monoid_table());
    } catch (const IncompleteTableError& e) {
      CHECK(e.missing() == q.unknown_entries());
    }
  }
}
