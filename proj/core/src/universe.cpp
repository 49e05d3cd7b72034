#include "misere/universe.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "misere/notation.hpp"
#include "misere/outcome.hpp"

namespace misere {

std::size_t Descriptor::size() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

Descriptor operator+(const Descriptor& x, const Descriptor& y) {
  if (x.counts.size() != y.counts.size()) {
    throw std::invalid_argument("descriptors over different bases");
  }
  Descriptor out = x;
  for (std::size_t i = 0; i < y.counts.size(); ++i) out.counts[i] += y.counts[i];
  return out;
}

AVector operator+(const AVector& x, const AVector& y) {
  AVector out;
  for (std::size_t i = 0; i < 4; ++i) out.k[i] = x.k[i] + y.k[i];
  return out;
}

std::string to_string(const AVector& v) {
  return "a:" + std::to_string(v.k[0]) + "," + std::to_string(v.k[1]) + "," +
         std::to_string(v.k[2]) + "," + std::to_string(v.k[3]);
}

namespace {

std::string basis_key(const GameList& basis) {
  std::string key;
  for (Game g : basis) key += std::to_string(g.id()) + ",";
  return key;
}

struct CountsHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto c : v) h = h * 1000003U ^ c;
    return h;
  }
};

// Descriptor -> game memo for one basis. realize(d) = realize(d - e_i) + b_i
// where i is the last nonzero coordinate, so each new game costs one sum with
// a single basis atom.
class Realizer {
 public:
  explicit Realizer(GameList basis) : basis_(std::move(basis)) {}

  Game operator()(const Descriptor& d) {
    if (d.counts.size() != basis_.size()) throw std::invalid_argument("descriptor has wrong length");
    if (d.is_zero()) return games::zero();
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(d.counts); it != memo_.end()) return it->second;
    }
    std::size_t last = d.counts.size();
    while (d.counts[last - 1] == 0) --last;
    Descriptor parent = d;
    --parent.counts[last - 1];
    Game g = sum((*this)(parent), basis_[last - 1]);
    std::unique_lock lock(mutex_);
    memo_.emplace(d.counts, g);
    return g;
  }

 private:
  GameList basis_;
  std::shared_mutex mutex_;
  std::unordered_map<std::vector<std::uint16_t>, Game, CountsHash> memo_;
};

Realizer& realizer_for(const GameList& basis) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Realizer>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[basis_key(basis)];
  if (!slot) slot = std::make_unique<Realizer>(basis);
  return *slot;
}

GameList generated_basis(const GameList& generators, bool conjugate_closed) {
  std::unordered_set<Game> atoms;
  for (Game g : generators) {
    for (Game f : followers(g)) {
      atoms.insert(f);
      if (conjugate_closed) atoms.insert(conjugate(f));
    }
  }
  atoms.erase(games::zero());
  GameList basis(atoms.begin(), atoms.end());
  std::sort(basis.begin(), basis.end(), [](Game x, Game y) {
    const auto bx = birthday(x);
    const auto by = birthday(y);
    return bx != by ? bx < by : x < y;
  });
  return basis;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

UniverseSpec UniverseSpec::generated(GameList generators, bool conjugate_closed) {
  UniverseSpec u;
  u.kind_ = Kind::generated;
  u.conjugate_closed_ = conjugate_closed;
  u.basis_ = generated_basis(generators, conjugate_closed);
  u.generators_ = std::move(generators);
  return u;
}

UniverseSpec UniverseSpec::named(NamedUniverse tag) {
  UniverseSpec u;
  u.kind_ = Kind::named;
  u.tag_ = tag;
  switch (tag) {
    case NamedUniverse::mz:
      u.generators_ = {games::one()};
      u.basis_ = {games::one(), games::one_bar()};
      break;
    case NamedUniverse::cl_a:
      // 2 = 1 + 1, so a, ~a, 1, ~1 generate every element as a sum.
      u.generators_ = {games::a()};
      u.basis_ = {games::a(), games::a_bar(), games::one(), games::one_bar()};
      break;
    case NamedUniverse::cl_2sharp0:
      u.generators_ = {games::two_sharp0()};
      u.basis_ = generated_basis(u.generators_, true);
      break;
    case NamedUniverse::cl_2sharp20:
      u.generators_ = {games::two_sharp20()};
      u.basis_ = generated_basis(u.generators_, true);
      break;
  }
  return u;
}

UniverseSpec UniverseSpec::sum_of(std::vector<UniverseSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("sum of zero universes");
  UniverseSpec u;
  u.kind_ = Kind::sum_of;
  for (const auto& p : parts) {
    for (Game g : p.basis()) {
      if (std::find(u.basis_.begin(), u.basis_.end(), g) == u.basis_.end()) u.basis_.push_back(g);
    }
    u.generators_.insert(u.generators_.end(), p.generators().begin(), p.generators().end());
  }
  u.conjugate_closed_ = std::all_of(parts.begin(), parts.end(),
                                    [](const UniverseSpec& p) { return p.conjugate_closed(); });
  u.parts_ = std::move(parts);
  return u;
}

std::optional<std::size_t> UniverseSpec::basis_index(Game g) const {
  auto it = std::find(basis_.begin(), basis_.end(), g);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::string UniverseSpec::to_string() const {
  switch (kind_) {
    case Kind::named:
      switch (*tag_) {
        case NamedUniverse::mz: return "MZ";
        case NamedUniverse::cl_a: return "CL_A";
        case NamedUniverse::cl_2sharp0: return "CL_2SHARP0";
        case NamedUniverse::cl_2sharp20: return "CL_2SHARP20";
      }
      break;
    case Kind::generated: {
      std::string out = conjugate_closed_ ? "gens:" : "rawgens:";
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i > 0) out += ';';
        out += render(generators_[i], RenderMode::pretty);
      }
      return out;
    }
    case Kind::sum_of: {
      std::string out = "sum:";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += '+';
        out += "(" + parts_[i].to_string() + ")";
      }
      return out;
    }
  }
  return {};
}

UniverseSpec parse_universe(std::string_view text) {
  text = trim(text);
  if (text == "MZ") return UniverseSpec::mz();
  if (text == "CL_A") return UniverseSpec::cl_a();
  if (text == "CL_2SHARP0") return UniverseSpec::cl_2sharp0();
  if (text == "CL_2SHARP20") return UniverseSpec::cl_2sharp20();

  auto generated_from = [](std::string_view body, bool conj) {
    GameList gens;
    for (const auto& part : split_top_level(body, ';')) {
      if (trim(part).empty()) continue;
      gens.push_back(parse_expression(part));
    }
    if (gens.empty()) throw std::invalid_argument("universe spec has no generators");
    return UniverseSpec::generated(std::move(gens), conj);
  };
  if (text.starts_with("gens:")) return generated_from(text.substr(5), true);
  if (text.starts_with("rawgens:")) return generated_from(text.substr(8), false);
  if (text.starts_with("sum:")) {
    std::vector<UniverseSpec> parts;
    for (const auto& part : split_top_level(text.substr(4), '+')) {
      auto p = trim(part);
      if (p.size() < 2 || p.front() != '(' || p.back() != ')') {
        throw std::invalid_argument("sum: parts must be parenthesized, got '" + std::string(p) + "'");
      }
      parts.push_back(parse_universe(p.substr(1, p.size() - 2)));
    }
    return UniverseSpec::sum_of(std::move(parts));
  }
  throw std::invalid_argument("unknown universe spec '" + std::string(text) + "'");
}

UniverseSpec sum_universe(const UniverseSpec& u1, const UniverseSpec& u2) {
  return UniverseSpec::sum_of({u1, u2});
}

Game realize(const UniverseSpec& u, const Descriptor& d) { return realizer_for(u.basis())(d); }

std::shared_ptr<const std::vector<Element>> closure_enumerate(const UniverseSpec& u,
                                                              std::size_t bound) {
  using Cache = std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const std::vector<Element>>>;
  static std::mutex mutex;
  static Cache cache;
  const auto key = std::make_pair(basis_key(u.basis()), bound);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const std::size_t n = u.basis().size();
  auto& realizer = realizer_for(u.basis());
  auto out = std::make_shared<std::vector<Element>>();
  out->push_back(Element{Descriptor{std::vector<std::uint16_t>(n, 0)}, games::zero()});

  // Level s holds the nondecreasing index sequences of length s, kept in
  // lexicographic order; only the last index is needed to extend them.
  struct Seq {
    Descriptor d;
    std::size_t last;
  };
  std::vector<Seq> level{{Descriptor{std::vector<std::uint16_t>(n, 0)}, 0}};
  for (std::size_t s = 1; s <= bound && n > 0; ++s) {
    std::vector<Seq> next;
    for (const auto& seq : level) {
      for (std::size_t j = seq.last; j < n; ++j) {
        Seq child{seq.d, j};
        ++child.d.counts[j];
        out->push_back(Element{child.d, realizer(child.d)});
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }

  std::shared_ptr<const std::vector<Element>> result = std::move(out);
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

Descriptor to_descriptor(const AVector& v) {
  Descriptor d{std::vector<std::uint16_t>(4)};
  for (std::size_t i = 0; i < 4; ++i) d.counts[i] = static_cast<std::uint16_t>(v.k[i]);
  return d;
}

AVector to_avector(const Descriptor& d) {
  if (d.counts.size() != 4) throw std::invalid_argument("not an a-closure descriptor");
  AVector v;
  for (std::size_t i = 0; i < 4; ++i) v.k[i] = d.counts[i];
  return v;
}

Game avector_game(const AVector& v) { return realize(UniverseSpec::cl_a(), to_descriptor(v)); }

std::string describe(const UniverseSpec& u, const Descriptor& d) {
  std::string out;
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    const std::string atom = render(u.basis().at(i), RenderMode::pretty);
    for (std::size_t c = 0; c < d.counts[i]; ++c) {
      if (!out.empty()) out += '+';
      out += atom;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Descriptor> split_descriptor(const UniverseSpec& u, const Descriptor& d) {
  if (u.kind() != UniverseSpec::Kind::sum_of) return {d};
  std::vector<Descriptor> out;
  for (const auto& p : u.parts()) out.push_back(Descriptor{std::vector<std::uint16_t>(p.basis().size(), 0)});
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (d.counts[i] == 0) continue;
    const Game atom = u.basis()[i];
    bool placed = false;
    for (std::size_t p = 0; p < u.parts().size() && !placed; ++p) {
      if (auto idx = u.parts()[p].basis_index(atom)) {
        out[p].counts[*idx] = d.counts[i];
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("sum basis atom missing from every part");
  }
  return out;
}

std::optional<Element> find_p_position(const UniverseSpec& u, std::size_t bound) {
  for (const auto& e : *closure_enumerate(u, bound)) {
    if (misere_outcome(e.game) == Outcome::P) return e;
  }
  return std::nullopt;
}

std::string_view to_string(ClosureReport::Violation v) {
  switch (v) {
    case ClosureReport::Violation::conjugate: return "conjugate";
    case ClosureReport::Violation::sum: return "sum";
    case ClosureReport::Violation::option: return "option";
  }
  return "unknown";
}

ClosureReport check_universe_closure(const UniverseSpec& u, std::size_t bound) {
  ClosureReport report;
  report.bound = bound;
  const auto elements = closure_enumerate(u, bound);
  const auto wide = closure_enumerate(u, 2 * bound);
  std::unordered_set<Game> ids;
  for (const auto& e : *elements) ids.insert(e.game);
  std::unordered_set<Game> wide_ids;
  for (const auto& e : *wide) wide_ids.insert(e.game);

  auto escape = [&](ClosureReport::Violation kind, const Element& source, Game missing) {
    report.closed = false;
    report.escapee = ClosureReport::Escapee{kind, source, missing};
    return report;
  };

  for (std::size_t i = 0; i < elements->size(); ++i) {
    const auto& e = (*elements)[i];
    ++report.elements_checked;
    if (Game c = conjugate(e.game); !ids.contains(c)) {
      return escape(ClosureReport::Violation::conjugate, e, c);
    }
    for (auto side : {left_options(e.game), right_options(e.game)}) {
      for (Game opt : side) {
        if (!wide_ids.contains(opt)) return escape(ClosureReport::Violation::option, e, opt);
      }
    }
    const std::size_t size_i = e.descriptor.size();
    for (std::size_t j = i; j < elements->size(); ++j) {
      const auto& f = (*elements)[j];
      if (size_i + f.descriptor.size() > bound) break;
      if (Game s = sum(e.game, f.game); !ids.contains(s)) {
        return escape(ClosureReport::Violation::sum, e, s);
      }
    }
  }
  return report;
}

}  // namespace misere
