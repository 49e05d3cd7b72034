#include "doctest.h"
#include "misere/qz.hpp"

using namespace misere;
using namespace misere::games;

TEST_CASE("witness values in MZ") {
  const auto mz = UniverseSpec::mz();
  CHECK(compute_witness(mz, zero(), 6) == 0);
  CHECK(compute_witness(mz, one(), 6) == 1);
  CHECK(compute_witness(mz, one_bar(), 6) == -1);
  CHECK(compute_witness(mz, n_copies(one(), 5), 6) == 5);
  CHECK(compute_witness(mz, sum(n_copies(one_bar(), 3), one()), 6) == -2);
  CHECK_THROWS_AS(compute_witness(mz, star(), 6), WitnessError);
  CHECK_THROWS_AS(compute_witness(mz, n_copies(one(), 9), 3), WitnessError);
}

TEST_CASE("padding witness is odd under conjugation") {
  const auto u = UniverseSpec::generated({two()});
  const auto f = WitnessFunction::padding(u);
  for (const auto& e : *closure_enumerate(u, 4)) {
    CHECK(f(e.game) == -f(conjugate(e.game)));
  }
}

TEST_CASE("witness axioms") {
  CHECK(verify_witness_axioms(UniverseSpec::mz(), 6).passed());
  const auto ca = verify_witness_axioms(UniverseSpec::cl_a(), 6);
  CHECK_FALSE(ca.passed());
  CHECK(ca.condition.has_value());
  CHECK(ca.counterexample.has_value());
  const auto st = verify_witness_axioms(UniverseSpec::generated({star()}), 2);
  REQUIRE_FALSE(st.passed());
  CHECK(st.condition == QzVerdict::Condition::p_position);
  CHECK(st.counterexample->game == star());
  const auto z = verify_witness_axioms(UniverseSpec::generated({zero()}), 2);
  CHECK(z.condition == QzVerdict::Condition::surjectivity);
}

TEST_CASE("structural conditions") {
  CHECK(verify_structural_conditions(UniverseSpec::mz(), 6).passed());
  CHECK(verify_structural_conditions(UniverseSpec::generated({zero()}), 1).passed());
  const auto ca = verify_structural_conditions(UniverseSpec::cl_a(), 6);
  REQUIRE_FALSE(ca.passed());
  CHECK(ca.condition == QzVerdict::Condition::b);
  CHECK(ca.counterexample->game == a());
  const auto mz = UniverseSpec::mz();
  CHECK(compute_witness(mz, two(), 6) == 2);
}

TEST_CASE("is_qz") {
  CHECK(is_qz(UniverseSpec::mz(), 6).passed());
  CHECK(is_qz(UniverseSpec::generated({two()}), 6).passed());
  CHECK_FALSE(is_qz(UniverseSpec::cl_a(), 6).passed());
  CHECK(is_qz(UniverseSpec::generated({star()}), 3).condition == QzVerdict::Condition::p_position);
}

TEST_CASE("sum witness") {
  const auto mz = UniverseSpec::mz();
  const auto u2 = UniverseSpec::generated({two()});
  const auto su = sum_universe(mz, u2);
  CHECK(is_qz(su, 5).passed());
  const auto f = WitnessFunction::padding(su);
  const auto g = sum_witness(WitnessFunction::padding(mz), WitnessFunction::padding(u2));
  for (const auto& e : *closure_enumerate(su, 5)) CHECK(f(e) == g(e));
  CHECK_THROWS_AS(g(one()), std::logic_error);
}
