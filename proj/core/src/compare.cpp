#include "misere/compare.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "misere/parallel.hpp"

namespace misere {

std::string_view to_string(CompareVerdict::Status s) {
  return s == CompareVerdict::Status::holds_up_to_bound ? "holds_up_to_bound" : "distinguished";
}

std::string_view to_string(CompareVerdict::Direction d) {
  return d == CompareVerdict::Direction::lhs_ge_rhs ? "lhs>=rhs" : "rhs>=lhs";
}

namespace {

// Index of the first X in `xs` with o(g+X) not >= o(h+X), or npos. With
// several workers each claims indices in order and the minimum is kept.
std::size_t first_failure(Game g, Game h, const std::vector<Element>& xs) {
  constexpr auto npos = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{npos};
  parallel_for(xs.size(), [&](std::size_t i) {
    if (i >= best.load()) return;
    const Outcome lo = misere_outcome(sum(g, xs[i].game));
    const Outcome ro = misere_outcome(sum(h, xs[i].game));
    if (!outcome_ge(lo, ro)) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  });
  return best.load();
}

}  // namespace

CompareVerdict ge_mod(Game g, Game h, const UniverseSpec& u, std::size_t bound) {
  CompareVerdict v;
  v.bound = bound;
  if (g == h) return v;
  const auto xs = closure_enumerate(u, bound);
  const std::size_t i = first_failure(g, h, *xs);
  if (i == std::numeric_limits<std::size_t>::max()) return v;
  const auto& x = (*xs)[i];
  v.status = CompareVerdict::Status::distinguished;
  v.direction = CompareVerdict::Direction::lhs_ge_rhs;
  v.witness = x;
  v.lhs_outcome = misere_outcome(sum(g, x.game));
  v.rhs_outcome = misere_outcome(sum(h, x.game));
  return v;
}

CompareVerdict equiv_mod(Game g, Game h, const UniverseSpec& u, std::size_t bound) {
  CompareVerdict forward = ge_mod(g, h, u, bound);
  if (!forward.holds()) return forward;
  CompareVerdict backward = ge_mod(h, g, u, bound);
  if (backward.holds()) return backward;
  backward.direction = CompareVerdict::Direction::rhs_ge_lhs;
  std::swap(backward.lhs_outcome, backward.rhs_outcome);
  return backward;
}

CompareVerdict is_invertible(Game g, const UniverseSpec& u, std::size_t bound) {
  return equiv_mod(sum(g, conjugate(g)), games::zero(), u, bound);
}

InverseCriterionReport inverse_criterion_check(const GameList& s, const UniverseSpec& u,
                                               std::size_t bound) {
  const std::unordered_set<Game> members(s.begin(), s.end());
  for (Game g : s) {
    for (auto side : {left_options(g), right_options(g)}) {
      for (Game opt : side) {
        if (!members.contains(opt)) {
          throw std::invalid_argument("inverse criterion: set is not closed under taking options");
        }
      }
    }
  }

  InverseCriterionReport report;
  report.bound = bound;
  const auto xs = closure_enumerate(u, bound);
  for (Game g : s) {
    const Game base = sum(g, conjugate(g));
    for (const auto& x : *xs) {
      if (!is_left_end(x.game)) continue;
      InverseCriterionRecord rec{g, x, misere_outcome(sum(base, x.game))};
      if (rec.outcome != Outcome::L && rec.outcome != Outcome::N) {
        report.passed = false;
        report.violations.push_back(rec);
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

std::optional<CancellationWitness> cancellative_check(Game g, const UniverseSpec& u,
                                                      std::size_t bound) {
  const auto elems = closure_enumerate(u, bound);
  const auto& es = *elems;

  // Outcome fingerprints make "some X separates H and K" a vector compare.
  std::vector<std::vector<Outcome>> prints(es.size());
  parallel_for(es.size(), [&](std::size_t i) {
    prints[i].reserve(es.size());
    for (const auto& x : es) prints[i].push_back(misere_outcome(sum(es[i].game, x.game)));
  });

  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].game == es[j].game || prints[i] == prints[j]) continue;
      if (!equiv_mod(sum(g, es[i].game), sum(g, es[j].game), u, bound).holds()) continue;
      const auto mismatch = std::mismatch(prints[i].begin(), prints[i].end(), prints[j].begin());
      const auto x = static_cast<std::size_t>(mismatch.first - prints[i].begin());
      return CancellationWitness{es[i], es[j], es[x]};
    }
  }
  return std::nullopt;
}

}  // namespace misere
