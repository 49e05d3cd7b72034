#include "misere/quotient.hpp"

#include <algorithm>
#include <map>

#include "misere/parallel.hpp"

namespace misere {
namespace {

std::vector<Outcome> fingerprint_of(Game g, const std::vector<Element>& tests) {
  std::vector<Outcome> out;
  out.reserve(tests.size());
  for (const auto& x : tests) out.push_back(misere_outcome(sum(g, x.game)));
  return out;
}

std::string missing_text(const std::vector<std::pair<std::size_t, std::size_t>>& missing) {
  std::string s = "multiplication table has " + std::to_string(missing.size()) + " unknown entries:";
  const std::size_t shown = std::min<std::size_t>(missing.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) {
    s += " (" + std::to_string(missing[i].first) + "," + std::to_string(missing[i].second) + ")";
  }
  if (shown < missing.size()) s += " ...";
  return s;
}

}  // namespace

IncompleteTableError::IncompleteTableError(std::vector<std::pair<std::size_t, std::size_t>> missing)
    : std::runtime_error(missing_text(missing)), missing_(std::move(missing)) {}

QuotientTable::QuotientTable(UniverseSpec universe, std::size_t elem_bound, std::size_t test_bound)
    : universe_(std::move(universe)), elem_bound_(elem_bound), test_bound_(test_bound) {}

std::vector<std::pair<std::size_t, std::size_t>> QuotientTable::unknown_entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < mul_.size(); ++x) {
    for (std::size_t y = x; y < mul_.size(); ++y) {
      if (!mul_[x][y]) out.emplace_back(x, y);
    }
  }
  return out;
}

std::optional<std::size_t> QuotientTable::class_of_enumerated(Game g) const {
  if (auto it = class_of_game_.find(g); it != class_of_game_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> QuotientTable::distinguishing_test(std::size_t x, std::size_t y) const {
  const auto& a = prints_[x];
  const auto& b = prints_[y];
  const auto m = std::mismatch(a.begin(), a.end(), b.begin());
  if (m.first == a.end()) return std::nullopt;
  return static_cast<std::size_t>(m.first - a.begin());
}

MonoidTable QuotientTable::monoid_table() const {
  if (auto missing = unknown_entries(); !missing.empty()) throw IncompleteTableError(std::move(missing));
  MonoidTable t;
  t.mul.assign(size(), std::vector<std::size_t>(size()));
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) t.mul[x][y] = *mul_[x][y];
    t.outcome.push_back(classes_[x].outcome);
  }
  return t;
}

QuotientTable quotient_estimate(const UniverseSpec& u, std::size_t elem_bound, std::size_t test_bound) {
  if (elem_bound == 0 || test_bound == 0) throw std::invalid_argument("quotient bounds must be at least 1");
  QuotientTable q(u, elem_bound, test_bound);
  q.tests_ = closure_enumerate(u, test_bound);
  const auto elems = closure_enumerate(u, elem_bound);
  const auto& es = *elems;

  std::vector<std::vector<Outcome>> prints(es.size());
  parallel_for(es.size(), [&](std::size_t i) { prints[i] = fingerprint_of(es[i].game, *q.tests_); });

  std::map<std::vector<Outcome>, std::size_t> class_of_print;
  std::vector<std::size_t> element_class(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [it, fresh] = class_of_print.emplace(prints[i], q.classes_.size());
    if (fresh) {
      q.classes_.push_back(QuotientClass{es[i], misere_outcome(es[i].game), 0});
      q.prints_.push_back(prints[i]);
    }
    element_class[i] = it->second;
    ++q.classes_[it->second].members;
    q.class_of_game_.emplace(es[i].game, it->second);
  }

  const std::size_t n = q.classes_.size();
  q.mul_.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const auto& rx = q.classes_[x].representative;
      const auto& ry = q.classes_[y].representative;
      if (rx.descriptor.size() + ry.descriptor.size() > elem_bound) continue;
      const Game s = realize(u, rx.descriptor + ry.descriptor);
      const auto c = q.class_of_enumerated(s);
      if (!c) throw std::logic_error("sum of enumerated representatives was not enumerated");
      q.mul_[x][y] = c;
      q.mul_[y][x] = c;
    }
  }
  return q;
}

std::optional<std::size_t> class_of(const QuotientTable& q, Game g) {
  if (auto c = q.class_of_enumerated(g)) return c;
  const auto print = fingerprint_of(g, q.tests());
  for (std::size_t c = 0; c < q.size(); ++c) {
    if (q.fingerprint(c) == print) return c;
  }
  return std::nullopt;
}

std::vector<PresentationMatch> check_presentation(const QuotientTable& q, const MonoidPresentation& p) {
  const FiniteMonoid m = enumerate_monoid(p);
  const MonoidTable qt = q.monoid_table();
  std::vector<PresentationMatch> out;
  for (auto& phi : find_isomorphisms(qt, m.table)) {
    PresentationMatch match;
    for (std::size_t e : phi) match.class_words.push_back(m.words[e]);
    match.class_to_element = std::move(phi);
    out.push_back(std::move(match));
  }
  return out;
}

QuotientComparison compare_quotients(const QuotientTable& q1, const QuotientTable& q2) {
  QuotientComparison report;
  report.classes1 = q1.size();
  report.classes2 = q2.size();
  report.isomorphisms = find_isomorphisms(q1.monoid_table(), q2.monoid_table());
  for (Game atom : q1.universe().basis()) {
    if (!q2.universe().basis_index(atom)) continue;
    auto c1 = q1.class_of_enumerated(atom);
    auto c2 = q2.class_of_enumerated(atom);
    if (!c1 || !c2) continue;
    SharedAtom s{atom, *c1, *c2, {}};
    for (const auto& phi : report.isomorphisms) s.corresponds.push_back(phi[*c1] == *c2);
    report.shared.push_back(std::move(s));
  }
  return report;
}

}  // namespace misere
