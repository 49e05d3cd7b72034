#include "misere/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "misere/closed_forms.hpp"
#include "misere/compare.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/presentation.hpp"
#include "misere/qz.hpp"
#include "misere/quotient.hpp"
#include "misere/universe.hpp"

namespace misere {
namespace {

struct Check {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail << why;
    passed = false;
  }
};

std::string pretty(Game g) { return render(g, RenderMode::pretty); }

// Quotient tables are shared between the counterexample criteria.
const QuotientTable& cached_quotient(const UniverseSpec& u, std::size_t e, std::size_t t) {
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<QuotientTable>> tables;
  const std::string key = u.to_string() + "@" + std::to_string(e) + "," + std::to_string(t);
  std::lock_guard lock(m);
  auto& slot = tables[key];
  if (!slot) slot = std::make_unique<QuotientTable>(quotient_estimate(u, e, t));
  return *slot;
}

std::vector<AVector> avectors_up_to(std::uint32_t max) {
  std::vector<AVector> out;
  for (std::uint32_t k1 = 0; k1 <= max; ++k1)
    for (std::uint32_t k2 = 0; k2 <= max; ++k2)
      for (std::uint32_t k3 = 0; k3 <= max; ++k3)
        for (std::uint32_t k4 = 0; k4 <= max; ++k4) out.push_back(AVector{{k1, k2, k3, k4}});
  return out;
}

void outcome_formula(Check& c) {
  std::size_t mismatches = 0;
  const auto vs = avectors_up_to(3);
  for (const auto& v : vs) {
    const Outcome formula = aclosure_outcome(v);
    const Outcome solved = misere_outcome(avector_game(v));
    if (formula != solved) {
      if (mismatches == 0) {
        c.fail(to_string(v) + ": formula " + to_char(formula) + ", solver " + to_char(solved));
      }
      ++mismatches;
    }
  }
  if (c.passed) c.detail << vs.size() << " vectors, 0 mismatches";
}

void no_p_positions(Check& c) {
  for (const auto& u : {UniverseSpec::cl_a(), UniverseSpec::mz()}) {
    if (auto p = find_p_position(u, 8)) c.fail(u.to_string() + " has P-position " + describe(u, p->descriptor));
  }
  if (c.passed) c.detail << "CL_A and MZ at bound 8: none";
}

void mz_invertibility(Check& c) {
  const auto mz = UniverseSpec::mz();
  const auto elems = closure_enumerate(mz, 4);
  std::size_t records = 0;
  for (const auto& e : *elems) {
    const auto inv = is_invertible(e.game, mz, 8);
    if (!inv.holds()) {
      c.fail(describe(mz, e.descriptor) + " is not invertible, witness " + describe(mz, inv.witness->descriptor));
      return;
    }
    const auto report = inverse_criterion_check(followers(e.game), mz, 8);
    if (!report.passed) {
      c.fail("inverse criterion fails for " + describe(mz, e.descriptor));
      return;
    }
    for (const auto& r : report.records) {
      const Outcome want = r.x.game == games::zero() ? Outcome::N : Outcome::L;
      if (r.outcome != want) {
        c.fail("o(G+~G+X) = " + std::string(1, to_char(r.outcome)) + " for G = " + pretty(r.g) +
               ", X = " + describe(mz, r.x.descriptor));
        return;
      }
    }
    records += report.records.size();
  }
  c.detail << elems->size() << " elements invertible, " << records << " Left-end records";
}

void noninvertibility(Check& c) {
  std::size_t checked = 0;
  for (const auto& v : avectors_up_to(2)) {
    if (v == AVector{}) continue;
    const auto w = noninvertibility_witness(v);
    const Game g = avector_game(v);
    if (w.game != avector_game(w.vector)) c.fail("witness game does not match its vector");
    if (misere_outcome(w.game) != Outcome::N) c.fail(to_string(v) + ": o(X) is not N");
    if (misere_outcome(sum(g, w.game)) == Outcome::N) c.fail(to_string(v) + ": o(G+X) is N");
    ++checked;
  }
  if (c.passed) c.detail << checked << " nonzero vectors, 0 failures";
}

void noncancellativity(Check& c) {
  using namespace games;
  const Game h = one();
  const Game k = sum(std::vector<Game>{one(), one(), one_bar()});
  const Game x = sum(a_bar(), a_bar());
  const Outcome oh = misere_outcome(sum(h, x));
  const Outcome ok = misere_outcome(sum(k, x));
  if (oh != Outcome::N) c.fail("o(1+~a+~a) = " + std::string(1, to_char(oh)));
  if (ok != Outcome::L) c.fail("o(1+1+~1+~a+~a) = " + std::string(1, to_char(ok)));
  const auto eq = equiv_mod(sum(a(), h), sum(a(), k), UniverseSpec::cl_a(), 6);
  if (!eq.holds()) c.fail("a+1 and a+1+1+~1 are distinguished by " + describe(UniverseSpec::cl_a(), eq.witness->descriptor));
  if (c.passed) c.detail << "o(1+~a+~a)=N, o(1+1+~1+~a+~a)=L, a+1 == a+1+1+~1 mod CL_A up to 6";
}

void qz_detection(Check& c) {
  const auto mz = UniverseSpec::mz();
  const auto v = is_qz(mz, 6);
  if (!v.passed()) c.fail("MZ refuted: " + v.detail);
  if (compute_witness(mz, games::one(), 6) != 1) c.fail("f(1) != 1");
  if (compute_witness(mz, games::one_bar(), 6) != -1) c.fail("f(~1) != -1");
  const auto ca = is_qz(UniverseSpec::cl_a(), 6);
  if (ca.passed() || !ca.condition) {
    c.fail("CL_A was not refuted");
  } else if (c.passed) {
    c.detail << "MZ passes, f(1)=1, f(~1)=-1; CL_A refuted by condition " << to_string(*ca.condition);
    if (ca.counterexample) c.detail << " at " << describe(UniverseSpec::cl_a(), ca.counterexample->descriptor);
  }
}

void qz_sum(Check& c) {
  const auto mz = UniverseSpec::mz();
  auto u2 = UniverseSpec::generated({games::two()});
  if (!is_qz(u2, 6).passed()) {
    c.detail << "cl(2) refuted, substituting MZ; ";
    u2 = mz;
  }
  const auto su = sum_universe(mz, u2);
  const auto v = is_qz(su, 5);
  if (!v.passed()) {
    c.fail("sum universe refuted: " + v.detail);
    return;
  }
  const auto f = WitnessFunction::padding(su);
  const auto g = sum_witness(WitnessFunction::padding(mz), WitnessFunction::padding(u2));
  const auto elems = closure_enumerate(su, 5);
  for (const auto& e : *elems) {
    if (f(e) != g(e)) {
      c.fail("witness mismatch at " + describe(su, e.descriptor));
      return;
    }
  }
  c.detail << "sum universe Q_Z up to 5, witness additive on " << elems->size() << " elements";
}

void counterexample_quotient(Check& c) {
  const auto p = two_sharp_presentation();
  for (const auto& u : {UniverseSpec::cl_2sharp0(), UniverseSpec::cl_2sharp20()}) {
    const auto& q7 = cached_quotient(u, 7, 7);
    const auto& q8 = cached_quotient(u, 8, 8);
    if (q7.size() != 14 || q8.size() != 14) {
      c.fail(u.to_string() + ": " + std::to_string(q7.size()) + " classes at (7,7), " +
             std::to_string(q8.size()) + " at (8,8)");
      return;
    }
    if (check_presentation(q8, p).empty()) {
      c.fail(u.to_string() + ": no isomorphism onto the presented monoid");
      return;
    }
  }
  const auto su = sum_universe(UniverseSpec::cl_2sharp0(), UniverseSpec::cl_2sharp20());
  const auto& qs = cached_quotient(su, 8, 8);
  if (qs.size() <= 14) {
    c.fail("sum universe has only " + std::to_string(qs.size()) + " classes");
    return;
  }
  c.detail << "14 classes for both at (7,7) and (8,8), presentation matched; sum has " << qs.size()
           << " classes at (8,8)";
}

void star2_divergence(Check& c) {
  const auto p = two_sharp_presentation();
  const auto m = enumerate_monoid(p);
  const std::size_t b = m.element_of(p, "b");
  const std::size_t ab = m.element_of(p, "ab");
  std::vector<std::set<std::size_t>> images;
  for (const auto& u : {UniverseSpec::cl_2sharp0(), UniverseSpec::cl_2sharp20()}) {
    const auto& q = cached_quotient(u, 8, 8);
    const auto cls = class_of(q, games::star2());
    if (!cls) {
      c.fail("*2 lies outside the quotient of " + u.to_string());
      return;
    }
    std::set<std::size_t> words;
    for (const auto& match : check_presentation(q, p)) words.insert(match.class_to_element[*cls]);
    images.push_back(words);
    c.detail << u.to_string() << ": *2 ->";
    for (std::size_t w : words) c.detail << " " << m.words[w];
    c.detail << "; ";
  }
  if (images[0] != std::set<std::size_t>{b}) c.fail("*2 is not sent only to b in CL_2SHARP0");
  if (images[1] != std::set<std::size_t>{ab}) c.fail("*2 is not sent only to ab in CL_2SHARP20");
  for (std::size_t w : images[0]) {
    if (images[1].contains(w)) c.fail("some isomorphisms agree on *2");
  }
}

void property_suite(Check& c) {
  constexpr std::size_t kInstances = 500;
  std::mt19937_64 rng(20261018);
  std::size_t failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      if (failures == 0) c.fail(what);
      ++failures;
    }
  };
  for (std::size_t i = 0; i < kInstances; ++i) {
    const Game g = random_game(rng, 3, 3);
    const Game h = random_game(rng, 3, 3);
    const Game k = random_game(rng, 2, 3);
    expect(conjugate(conjugate(g)) == g, "conjugate involution fails at " + pretty(g));
    expect(sum(g, h) == sum(h, g), "sum not commutative at " + pretty(g) + ", " + pretty(h));
    expect(sum(sum(g, h), k) == sum(g, sum(h, k)), "sum not associative at " + pretty(g));
    expect(misere_outcome(conjugate(g)) == swap_sides(misere_outcome(g)),
           "conjugate duality fails at " + pretty(g));
    const Game self = sum(g, conjugate(g));
    const Game imp = random_impartial_game(rng, 4, 3);
    for (Game s : {self, imp}) {
      const Outcome o = misere_outcome(s);
      expect(conjugate(s) == s && (o == Outcome::N || o == Outcome::P),
             "self-conjugate game " + pretty(s) + " has outcome " + std::string(1, to_char(o)));
    }
  }

  // Refinement: raising the test bound only splits classes. Checked on
  // element pairs of small random closures.
  std::size_t pairs = 0;
  while (pairs < kInstances) {
    const auto u = UniverseSpec::generated({random_game(rng, 2, 2)});
    const auto q1 = quotient_estimate(u, 3, 2);
    const auto q2 = quotient_estimate(u, 3, 3);
    const auto elems = closure_enumerate(u, 3);
    std::uniform_int_distribution<std::size_t> pick(0, elems->size() - 1);
    for (int t = 0; t < 50; ++t) {
      const auto& x = (*elems)[pick(rng)];
      const auto& y = (*elems)[pick(rng)];
      const bool same2 = q2.class_of_enumerated(x.game) == q2.class_of_enumerated(y.game);
      const bool same1 = q1.class_of_enumerated(x.game) == q1.class_of_enumerated(y.game);
      expect(!same2 || same1, "classes merged when the test bound grew in " + u.to_string());
      ++pairs;
    }
    expect(q2.size() >= q1.size(), "class count dropped when the test bound grew in " + u.to_string());
  }
  if (c.passed) c.detail << kInstances << " instances per law, " << pairs << " refinement pairs, 0 failures";
}

struct Criterion {
  const char* name;
  double limit;
  void (*run)(Check&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"outcome-formula", 10.0, outcome_formula},
    {"no-p-positions", 30.0, no_p_positions},
    {"dead-ending-invertibility", 600.0, mz_invertibility},
    {"non-invertibility", 600.0, noninvertibility},
    {"non-cancellativity", 600.0, noncancellativity},
    {"qz-detection", 60.0, qz_detection},
    {"qz-sum", 600.0, qz_sum},
    {"quotient-counterexample", 600.0, counterexample_quotient},
    {"star2-divergence", 600.0, star2_divergence},
    {"algebraic-properties", 60.0, property_suite},
};

}  // namespace

CriterionResult run_criterion(int number) {
  if (number < 1 || number > kCriterionCount) throw std::out_of_range("no such criterion");
  const Criterion& spec = kCriteria[number - 1];
  CriterionResult r;
  r.number = number;
  r.name = spec.name;
  r.limit_seconds = spec.limit;
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = c.passed;
  r.detail = c.detail.str();
  if (r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += " (took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.limit_seconds) + " s)";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int n = 1; n <= kCriterionCount; ++n) {
    out.push_back(run_criterion(n));
    if (on_result) on_result(out.back());
  }
  return out;
}

Game random_game(std::mt19937_64& rng, std::size_t depth, std::size_t width) {
  if (depth == 0) return games::zero();
  std::uniform_int_distribution<std::size_t> count(0, width);
  GameList left;
  GameList right;
  for (std::size_t i = count(rng); i > 0; --i) left.push_back(random_game(rng, depth - 1, width));
  for (std::size_t i = count(rng); i > 0; --i) right.push_back(random_game(rng, depth - 1, width));
  return mk_game(std::move(left), std::move(right));
}

Game random_impartial_game(std::mt19937_64& rng, std::size_t depth, std::size_t width) {
  if (depth == 0) return games::zero();
  std::uniform_int_distribution<std::size_t> count(0, width);
  GameList opts;
  for (std::size_t i = count(rng); i > 0; --i) opts.push_back(random_impartial_game(rng, depth - 1, width));
  return mk_game(opts, opts);
}

}  // namespace misere
