#include "misere/qz.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "misere/notation.hpp"
#include "misere/outcome.hpp"

namespace misere {
namespace {

class WitnessMemo {
 public:
  static WitnessMemo& instance() {
    static WitnessMemo memo;
    return memo;
  }

  std::optional<std::int64_t> get(Game g) const {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(g); it != values_.end()) return it->second;
    return std::nullopt;
  }

  void put(Game g, std::int64_t v) {
    std::unique_lock lock(mutex_);
    values_.emplace(g, v);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Game, std::int64_t> values_;
};

std::size_t cap_for(Game g, std::size_t cap) { return std::max(cap, birthday(g)); }

QzVerdict refuted(std::size_t bound, QzVerdict::Condition c, std::optional<Element> e,
                  std::string detail) {
  QzVerdict v;
  v.status = QzVerdict::Status::refuted;
  v.bound = bound;
  v.condition = c;
  v.counterexample = std::move(e);
  v.detail = std::move(detail);
  return v;
}

QzVerdict from_error(std::size_t bound, const WitnessError& err, const Element& at) {
  const auto cond = err.kind() == WitnessError::Kind::p_position ? QzVerdict::Condition::p_position
                                                                 : QzVerdict::Condition::witness_search;
  Element e = at;
  if (err.game() != at.game) e = Element{Descriptor{}, err.game()};
  return refuted(bound, cond, e, err.what());
}

}  // namespace

std::int64_t compute_witness(const UniverseSpec&, Game g, std::size_t cap) {
  if (auto hit = WitnessMemo::instance().get(g)) return *hit;
  const Outcome o = misere_outcome(g);
  if (o == Outcome::P) {
    throw WitnessError(WitnessError::Kind::p_position, g,
                       "P-position " + render(g, RenderMode::pretty) + " has no witness value");
  }
  std::int64_t value = 0;
  if (o != Outcome::N) {
    const Game pad = o == Outcome::R ? games::one_bar() : games::one();
    Game padded = g;
    std::size_t k = 1;
    for (; k <= cap; ++k) {
      padded = sum(padded, pad);
      if (misere_outcome(padded) == Outcome::N) break;
    }
    if (k > cap) {
      throw WitnessError(WitnessError::Kind::cap_exceeded, g,
                         "no N-position within " + std::to_string(cap) + " copies of padding");
    }
    value = o == Outcome::R ? static_cast<std::int64_t>(k) : -static_cast<std::int64_t>(k);
  }
  WitnessMemo::instance().put(g, value);
  return value;
}

struct WitnessFunction::Impl {
  UniverseSpec universe;
  std::size_t cap = 0;
  std::shared_ptr<const Impl> first;
  std::shared_ptr<const Impl> second;

  [[nodiscard]] bool is_sum() const { return first != nullptr; }

  std::int64_t eval(const Element& e) const {
    if (!is_sum()) return compute_witness(universe, e.game, cap_for(e.game, cap));
    const auto parts = split_descriptor(universe, e.descriptor);
    if (parts.size() != 2) throw std::logic_error("sum witness expects a two-part universe");
    const Element e1{parts[0], realize(first->universe, parts[0])};
    const Element e2{parts[1], realize(second->universe, parts[1])};
    return first->eval(e1) + second->eval(e2);
  }
};

WitnessFunction WitnessFunction::padding(UniverseSpec u, std::size_t cap) {
  return WitnessFunction(std::make_shared<const Impl>(Impl{std::move(u), cap, nullptr, nullptr}));
}

WitnessFunction WitnessFunction::sum(const WitnessFunction& f1, const WitnessFunction& f2) {
  return WitnessFunction(std::make_shared<const Impl>(
      Impl{sum_universe(f1.universe(), f2.universe()), 0, f1.impl_, f2.impl_}));
}

const UniverseSpec& WitnessFunction::universe() const { return impl_->universe; }

std::int64_t WitnessFunction::operator()(const Element& e) const { return impl_->eval(e); }

std::int64_t WitnessFunction::operator()(Game g) const {
  if (impl_->is_sum()) throw std::logic_error("sum witness needs a decomposable descriptor");
  return compute_witness(impl_->universe, g, cap_for(g, impl_->cap));
}

WitnessFunction sum_witness(const WitnessFunction& f1, const WitnessFunction& f2) {
  return WitnessFunction::sum(f1, f2);
}

std::string_view to_string(QzVerdict::Status s) {
  return s == QzVerdict::Status::qz_up_to_bound ? "qz_up_to_bound" : "refuted";
}

std::string_view to_string(QzVerdict::Condition c) {
  switch (c) {
    case QzVerdict::Condition::p_position: return "P";
    case QzVerdict::Condition::witness_search: return "witness";
    case QzVerdict::Condition::additivity: return "additivity";
    case QzVerdict::Condition::outcome_sign: return "outcome";
    case QzVerdict::Condition::surjectivity: return "surjectivity";
    case QzVerdict::Condition::a: return "a";
    case QzVerdict::Condition::b: return "b";
    case QzVerdict::Condition::c: return "c";
    case QzVerdict::Condition::d: return "d";
  }
  return "unknown";
}

QzVerdict verify_witness_axioms(const UniverseSpec& u, std::size_t bound) {
  const auto elems = closure_enumerate(u, bound);
  const auto& es = *elems;
  std::vector<std::int64_t> f(es.size());
  std::set<std::int64_t> image;

  for (std::size_t i = 0; i < es.size(); ++i) {
    try {
      f[i] = compute_witness(u, es[i].game, cap_for(es[i].game, bound));
    } catch (const WitnessError& err) {
      return from_error(bound, err, es[i]);
    }
    image.insert(f[i]);
    const Outcome o = misere_outcome(es[i].game);
    const Outcome expected = f[i] == 0 ? Outcome::N : (f[i] < 0 ? Outcome::L : Outcome::R);
    if (o != expected) {
      return refuted(bound, QzVerdict::Condition::outcome_sign, es[i],
                     "outcome " + std::string(1, to_char(o)) + " with f = " + std::to_string(f[i]));
    }
  }

  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i; j < es.size(); ++j) {
      if (es[i].descriptor.size() + es[j].descriptor.size() > bound) break;
      const Game s = sum(es[i].game, es[j].game);
      std::int64_t fs = 0;
      try {
        fs = compute_witness(u, s, cap_for(s, bound));
      } catch (const WitnessError& err) {
        return from_error(bound, err, Element{es[i].descriptor + es[j].descriptor, s});
      }
      if (fs != f[i] + f[j]) {
        return refuted(bound, QzVerdict::Condition::additivity,
                       Element{es[i].descriptor + es[j].descriptor, s},
                       "f(" + describe(u, es[i].descriptor) + ") + f(" + describe(u, es[j].descriptor) +
                           ") = " + std::to_string(f[i] + f[j]) + " but f(sum) = " + std::to_string(fs));
      }
    }
  }

  const auto b = static_cast<std::int64_t>(bound);
  for (std::int64_t n = -b; n <= b; ++n) {
    if (!image.contains(n)) {
      return refuted(bound, QzVerdict::Condition::surjectivity, std::nullopt,
                     "no enumerated element has f = " + std::to_string(n));
    }
  }
  QzVerdict v;
  v.bound = bound;
  return v;
}

QzVerdict verify_structural_conditions(const UniverseSpec& u, std::size_t bound) {
  const auto elems = closure_enumerate(u, bound);
  for (const auto& e : *elems) {
    try {
      const std::int64_t n = compute_witness(u, e.game, cap_for(e.game, bound));
      std::vector<std::int64_t> fl;
      std::vector<std::int64_t> fr;
      for (Game gl : left_options(e.game)) fl.push_back(compute_witness(u, gl, cap_for(gl, bound)));
      for (Game gr : right_options(e.game)) fr.push_back(compute_witness(u, gr, cap_for(gr, bound)));

      auto any = [](const std::vector<std::int64_t>& xs, auto pred) {
        return std::any_of(xs.begin(), xs.end(), pred);
      };
      auto all = [](const std::vector<std::int64_t>& xs, auto pred) {
        return std::all_of(xs.begin(), xs.end(), pred);
      };
      auto fail = [&](QzVerdict::Condition c, const std::string& what) {
        return refuted(bound, c, e, "f = " + std::to_string(n) + ": " + what);
      };

      if (n > 0) {
        if (!any(fl, [&](auto x) { return x == n - 1; }))
          return fail(QzVerdict::Condition::a, "no Left option with f = n-1");
        if (!all(fl, [&](auto x) { return x >= n - 1; }))
          return fail(QzVerdict::Condition::a, "a Left option has f < n-1");
      }
      if (n >= 0) {
        if (!fr.empty() && !any(fr, [&](auto x) { return 1 <= x && x <= n + 1; }))
          return fail(QzVerdict::Condition::b, "no Right option with 1 <= f <= n+1");
        if (!all(fr, [&](auto x) { return x <= n + 1; }))
          return fail(QzVerdict::Condition::b, "a Right option has f > n+1");
      }
      if (n < 0) {
        if (!any(fr, [&](auto x) { return x == n + 1; }))
          return fail(QzVerdict::Condition::c, "no Right option with f = n+1");
        if (!all(fr, [&](auto x) { return x <= n + 1; }))
          return fail(QzVerdict::Condition::c, "a Right option has f > n+1");
      }
      if (n <= 0) {
        if (!fl.empty() && !any(fl, [&](auto x) { return -1 >= x && x >= n - 1; }))
          return fail(QzVerdict::Condition::d, "no Left option with n-1 <= f <= -1");
        if (!all(fl, [&](auto x) { return x >= n - 1; }))
          return fail(QzVerdict::Condition::d, "a Left option has f < n-1");
      }
    } catch (const WitnessError& err) {
      return from_error(bound, err, e);
    }
  }
  QzVerdict v;
  v.bound = bound;
  return v;
}

QzVerdict is_qz(const UniverseSpec& u, std::size_t bound) {
  if (auto p = find_p_position(u, bound)) {
    return refuted(bound, QzVerdict::Condition::p_position, *p,
                   "P-position " + describe(u, p->descriptor));
  }
  if (auto v = verify_witness_axioms(u, bound); !v.passed()) return v;
  return verify_structural_conditions(u, bound);
}

}  // namespace misere
