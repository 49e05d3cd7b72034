#include "misere/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace misere {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string word_text(const std::vector<char>& gens, const std::vector<unsigned>& exps) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (exps[i] == 0) continue;
    out += gens[i];
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Congruence generated by the relations, restricted to exponent vectors in
// the box [0, side)^g. Equalities whose every derivation leaves the box are
// missed, so results are only trusted once they stop changing as the box
// grows.
class BoxedCongruence {
 public:
  BoxedCongruence(std::size_t gens, unsigned side,
                  const std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>>& rels)
      : gens_(gens), side_(side), total_(1) {
    for (std::size_t i = 0; i < gens_; ++i) total_ *= side_;
    uf_.emplace(total_);
    std::vector<unsigned> w(gens_, 0);
    for (std::size_t idx = 0; idx < total_; ++idx) {
      decode(idx, w);
      for (const auto& [u, v] : rels) {
        auto a = index_of_sum(w, u);
        auto b = index_of_sum(w, v);
        if (a && b) uf_->unite(*a, *b);
      }
    }
  }

  std::optional<std::size_t> index_of(const std::vector<unsigned>& x) const {
    std::size_t idx = 0;
    for (std::size_t i = gens_; i-- > 0;) {
      if (x[i] >= side_) return std::nullopt;
      idx = idx * side_ + x[i];
    }
    return idx;
  }

  std::optional<std::size_t> class_of(const std::vector<unsigned>& x) {
    auto idx = index_of(x);
    if (!idx) return std::nullopt;
    return uf_->find(*idx);
  }

 private:
  void decode(std::size_t idx, std::vector<unsigned>& out) const {
    for (std::size_t i = 0; i < gens_; ++i) {
      out[i] = static_cast<unsigned>(idx % side_);
      idx /= side_;
    }
  }

  std::optional<std::size_t> index_of_sum(const std::vector<unsigned>& x,
                                          const std::vector<unsigned>& y) const {
    std::vector<unsigned> s(gens_);
    for (std::size_t i = 0; i < gens_; ++i) s[i] = x[i] + y[i];
    return index_of(s);
  }

  std::size_t gens_;
  std::size_t side_;
  std::size_t total_;
  std::optional<UnionFind> uf_;
};

std::optional<FiniteMonoid> enumerate_in_box(const MonoidPresentation& p, unsigned side,
                                             std::size_t max_elements) {
  const std::size_t g = p.generators.size();
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> rels;
  for (const auto& [lhs, rhs] : p.relations) rels.emplace_back(parse_word(p, lhs), parse_word(p, rhs));
  BoxedCongruence cong(g, side, rels);

  FiniteMonoid m;
  std::map<std::size_t, std::size_t> element_of_class;
  auto add_element = [&](const std::vector<unsigned>& x) -> std::optional<std::size_t> {
    auto c = cong.class_of(x);
    if (!c) return std::nullopt;
    if (auto it = element_of_class.find(*c); it != element_of_class.end()) return it->second;
    const std::size_t id = m.exponents.size();
    element_of_class.emplace(*c, id);
    m.exponents.push_back(x);
    return id;
  };

  add_element(std::vector<unsigned>(g, 0));
  for (std::size_t next = 0; next < m.exponents.size(); ++next) {
    if (m.exponents.size() > max_elements) return std::nullopt;
    for (std::size_t i = 0; i < g; ++i) {
      auto x = m.exponents[next];
      ++x[i];
      if (!add_element(x)) return std::nullopt;
    }
  }

  const std::size_t n = m.exponents.size();
  m.table.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<unsigned> s(g);
      for (std::size_t i = 0; i < g; ++i) s[i] = m.exponents[x][i] + m.exponents[y][i];
      auto c = cong.class_of(s);
      if (!c) return std::nullopt;
      auto it = element_of_class.find(*c);
      if (it == element_of_class.end()) return std::nullopt;
      m.table.mul[x][y] = it->second;
    }
  }

  m.table.outcome.assign(n, Outcome::N);
  for (const auto& [outcome, words] : p.portions) {
    for (const auto& w : words) {
      auto c = cong.class_of(parse_word(p, w));
      if (!c || !element_of_class.contains(*c)) return std::nullopt;
      m.table.outcome[element_of_class.at(*c)] = outcome;
    }
  }
  for (const auto& x : m.exponents) m.words.push_back(word_text(p.generators, x));
  return m;
}

}  // namespace

MonoidPresentation parse_presentation(std::string_view text) {
  MonoidPresentation p;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw PresentationError("line " + std::to_string(line_no) + ": bad section header");
      section = std::string(line.substr(1, line.size() - 2));
      if (section != "generators" && section != "relations" && section != "P" && section != "L" &&
          section != "R") {
        throw PresentationError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      }
      continue;
    }
    if (section == "generators") {
      for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
        if (!std::islower(static_cast<unsigned char>(c))) {
          throw PresentationError("line " + std::to_string(line_no) + ": generators are single lowercase letters");
        }
        p.generators.push_back(c);
      }
    } else if (section == "relations") {
      auto eq = line.find('=');
      if (eq == std::string_view::npos) throw PresentationError("line " + std::to_string(line_no) + ": expected word=word");
      p.relations.emplace_back(std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))));
    } else if (section == "P" || section == "L" || section == "R") {
      const Outcome o = *outcome_from_char(section[0]);
      for (const auto& w : split(line, ',')) {
        if (!trim(w).empty()) p.portions[o].emplace_back(trim(w));
      }
    } else {
      throw PresentationError("line " + std::to_string(line_no) + ": content outside a section");
    }
  }
  for (const auto& [lhs, rhs] : p.relations) {
    parse_word(p, lhs);
    parse_word(p, rhs);
  }
  for (const auto& [o, words] : p.portions) {
    for (const auto& w : words) parse_word(p, w);
  }
  return p;
}

MonoidPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError("cannot open presentation file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::vector<unsigned> parse_word(const MonoidPresentation& p, std::string_view word) {
  std::vector<unsigned> exps(p.generators.size(), 0);
  word = trim(word);
  if (word == "1" || word.empty()) return exps;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto it = std::find(p.generators.begin(), p.generators.end(), c);
    if (it == p.generators.end()) {
      throw PresentationError("unknown generator '" + std::string(1, c) + "' in word '" + std::string(word) + "'");
    }
    ++i;
    unsigned e = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i]))) {
        throw PresentationError("missing exponent in word '" + std::string(word) + "'");
      }
      e = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) {
        e = e * 10 + static_cast<unsigned>(word[i] - '0');
        ++i;
      }
    }
    exps[static_cast<std::size_t>(it - p.generators.begin())] += e;
  }
  return exps;
}

std::size_t FiniteMonoid::element_of(const MonoidPresentation& p, std::string_view word) const {
  // Multiply generator images along the word using the table.
  const auto exps = parse_word(p, word);
  std::size_t acc = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::vector<unsigned> unit(exps.size(), 0);
    unit[i] = 1;
    const auto gen = static_cast<std::size_t>(std::find(exponents.begin(), exponents.end(), unit) - exponents.begin());
    if (gen == exponents.size()) throw PresentationError("generator is not a listed element");
    for (unsigned k = 0; k < exps[i]; ++k) acc = table.mul[acc][gen];
  }
  return acc;
}

FiniteMonoid enumerate_monoid(const MonoidPresentation& p, std::size_t max_elements) {
  unsigned max_exp = 1;
  for (const auto& [lhs, rhs] : p.relations) {
    for (unsigned e : parse_word(p, lhs)) max_exp = std::max(max_exp, e);
    for (unsigned e : parse_word(p, rhs)) max_exp = std::max(max_exp, e);
  }
  constexpr std::size_t kMaxBoxCells = 1U << 22;
  std::optional<FiniteMonoid> previous;
  for (unsigned side = 2 * max_exp + 2;; side += side / 2) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < p.generators.size(); ++i) cells *= side;
    if (cells > kMaxBoxCells) break;
    auto current = enumerate_in_box(p, side, max_elements);
    if (current && previous && current->table.mul == previous->table.mul &&
        current->exponents == previous->exponents) {
      return *current;
    }
    previous = std::move(current);
  }
  throw PresentationError("presentation did not stabilize to a finite monoid");
}

std::vector<std::vector<std::size_t>> find_isomorphisms(const MonoidTable& from, const MonoidTable& to) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = from.size();
  if (n != to.size() || n == 0) return out;

  // Greedy generating set of `from`, and a spanning description of every
  // element as parent * generator.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> via(n, {n, n});
  auto close = [&] {
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
      if (reached[x]) queue.push_back(x);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const std::size_t y = from.mul[queue[q]][gens[gi]];
        if (!reached[y]) {
          reached[y] = true;
          via[y] = {queue[q], gi};
          queue.push_back(y);
        }
      }
    }
  };
  reached[0] = true;
  for (std::size_t x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    close();
  }

  std::vector<std::size_t> order;  // elements in an order where parents come first
  {
    std::vector<bool> placed(n, false);
    placed[0] = true;
    order.push_back(0);
    while (order.size() < n) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!placed[x] && placed[via[x].first]) {
          placed[x] = true;
          order.push_back(x);
        }
      }
    }
  }

  std::vector<std::size_t> images(gens.size());
  auto try_assignment = [&] {
    std::vector<std::size_t> phi(n, n);
    phi[0] = 0;
    for (std::size_t x : order) {
      if (x == 0) continue;
      phi[x] = to.mul[phi[via[x].first]][images[via[x].second]];
    }
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (hit[phi[x]] || from.outcome[x] != to.outcome[phi[x]]) return;
      hit[phi[x]] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (phi[from.mul[x][y]] != to.mul[phi[x]][phi[y]]) return;
      }
    }
    out.push_back(std::move(phi));
  };

  auto assign = [&](auto&& self, std::size_t gi) -> void {
    if (gi == gens.size()) {
      try_assignment();
      return;
    }
    for (std::size_t c = 1; c < n; ++c) {
      if (to.outcome[c] != from.outcome[gens[gi]]) continue;
      images[gi] = c;
      self(self, gi + 1);
    }
  };
  assign(assign, 0);
  return out;
}

MonoidPresentation two_sharp_presentation() {
  return parse_presentation(
      "[generators]\n"
      "a b c\n"
      "[relations]\n"
      "a^2=1\n"
      "b^3=b\n"
      "b^2c=c\n"
      "c^3=ac^2\n"
      "[P]\n"
      "a, b^2, bc, c^2\n");
}

}  // namespace misere
