// misere: command-line front end for the misère game toolkit.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "misere/acceptance.hpp"
#include "misere/cache.hpp"
#include "misere/compare.hpp"
#include "misere/game.hpp"
#include "misere/notation.hpp"
#include "misere/outcome.hpp"
#include "misere/parallel.hpp"
#include "misere/presentation.hpp"
#include "misere/qz.hpp"
#include "misere/quotient.hpp"
#include "misere/universe.hpp"

using nlohmann::json;
using namespace misere;

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

struct Options {
  bool json = false;
  bool pretty = false;
  std::string universe = "MZ";
  std::size_t bound = 6;
  std::size_t elem_bound = 8;
  std::size_t test_bound = 8;
  std::string presentation;
  std::vector<std::string> games;
  bool ge_only = false;
  std::vector<int> criteria;
};

class Printer {
 public:
  explicit Printer(const Options& o) : opts_(o) {}

  std::string game(Game g) const { return render(g, opts_.pretty ? RenderMode::pretty : RenderMode::raw); }

  json element(const UniverseSpec& u, const Element& e) const {
    return json{{"game", game(e.game)}, {"terms", describe(u, e.descriptor)}};
  }

  void emit(const json& j, const std::string& text) const {
    if (opts_.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
  }

 private:
  const Options& opts_;
};

std::string outcome_text(Outcome o) { return std::string(1, to_char(o)); }

Game game_arg(const Options& o, std::size_t i) { return parse_expression(o.games.at(i)); }

int cmd_outcome(const Options& o, const Printer& p) {
  const Game g = game_arg(o, 0);
  const Outcome out = misere_outcome(g);
  p.emit({{"game", p.game(g)}, {"outcome", outcome_text(out)}}, outcome_text(out));
  return kExitVerdict;
}

int cmd_sum(const Options& o, const Printer& p) {
  GameList terms;
  for (std::size_t i = 0; i < o.games.size(); ++i) terms.push_back(game_arg(o, i));
  const Game g = sum(terms);
  p.emit({{"game", p.game(g)}}, p.game(g));
  return kExitVerdict;
}

int cmd_conj(const Options& o, const Printer& p) {
  const Game g = conjugate(game_arg(o, 0));
  p.emit({{"game", p.game(g)}}, p.game(g));
  return kExitVerdict;
}

int cmd_followers(const Options& o, const Printer& p) {
  json list = json::array();
  std::string text;
  for (Game f : followers(game_arg(o, 0))) {
    list.push_back(p.game(f));
    text += p.game(f) + "\n";
  }
  p.emit({{"followers", list}}, text);
  return kExitVerdict;
}

int cmd_parse_check(const Options& o, const Printer& p) {
  try {
    const Game g = parse_expression(o.games.at(0));
    p.emit({{"valid", true}, {"game", p.game(g)}}, "valid: " + p.game(g));
  } catch (const ParseError& e) {
    p.emit({{"valid", false}, {"position", e.position()}, {"error", e.what()}},
           std::string("invalid: ") + e.what());
  }
  return kExitVerdict;
}

json verdict_json(const Printer& p, const UniverseSpec& u, const CompareVerdict& v) {
  json j{{"status", std::string(to_string(v.status))}, {"bound", v.bound}};
  if (v.witness) j["witness"] = p.element(u, *v.witness);
  if (v.direction) j["direction"] = std::string(to_string(*v.direction));
  if (v.lhs_outcome) j["lhs_outcome"] = outcome_text(*v.lhs_outcome);
  if (v.rhs_outcome) j["rhs_outcome"] = outcome_text(*v.rhs_outcome);
  return j;
}

std::string verdict_text(const UniverseSpec& u, const CompareVerdict& v, const std::string& holds_word) {
  if (v.holds()) return holds_word + " up to bound " + std::to_string(v.bound);
  std::ostringstream s;
  s << "distinguished at bound " << v.bound << " by X = " << describe(u, v.witness->descriptor) << ": o(G+X) = "
    << to_char(*v.lhs_outcome) << ", o(H+X) = " << to_char(*v.rhs_outcome);
  if (v.direction == CompareVerdict::Direction::rhs_ge_lhs) s << " (H >= G fails)";
  return s.str();
}

int cmd_compare(const Options& o, const Printer& p) {
  const auto u = parse_universe(o.universe);
  const Game g = game_arg(o, 0);
  const Game h = game_arg(o, 1);
  const auto v = o.ge_only ? ge_mod(g, h, u, o.bound) : equiv_mod(g, h, u, o.bound);
  p.emit(verdict_json(p, u, v), verdict_text(u, v, o.ge_only ? "G >= H" : "equivalent"));
  return kExitVerdict;
}

int cmd_invertible(const Options& o, const Printer& p) {
  const auto u = parse_universe(o.universe);
  const auto v = is_invertible(game_arg(o, 0), u, o.bound);
  json j = verdict_json(p, u, v);
  j["invertible"] = v.holds();
  p.emit(j, v.holds() ? "invertible up to bound " + std::to_string(v.bound)
                      : "not invertible: G+~G vs 0 " + verdict_text(u, v, ""));
  return kExitVerdict;
}

int cmd_cancellative(const Options& o, const Printer& p) {
  const auto u = parse_universe(o.universe);
  const auto w = cancellative_check(game_arg(o, 0), u, o.bound);
  json j{{"bound", o.bound}, {"cancellative", !w.has_value()}};
  std::string text = "no cancellation failure up to bound " + std::to_string(o.bound);
  if (w) {
    j["h"] = p.element(u, w->h);
    j["k"] = p.element(u, w->k);
    j["x"] = p.element(u, w->x);
    text = "not cancellative: G+H == G+K with H = " + describe(u, w->h.descriptor) + ", K = " +
           describe(u, w->k.descriptor) + ", separated by X = " + describe(u, w->x.descriptor);
  }
  p.emit(j, text);
  return kExitVerdict;
}

int cmd_qz(const Options& o, const Printer& p) {
  const auto u = parse_universe(o.universe);
  const auto v = is_qz(u, o.bound);
  json j{{"status", std::string(to_string(v.status))}, {"bound", v.bound}};
  std::string text = "Q_Z up to bound " + std::to_string(v.bound);
  if (!v.passed()) {
    j["condition"] = std::string(to_string(*v.condition));
    j["detail"] = v.detail;
    text = "refuted (" + std::string(to_string(*v.condition)) + "): " + v.detail;
    if (v.counterexample) {
      j["counterexample"] = p.element(u, *v.counterexample);
      text += " at " + p.game(v.counterexample->game);
    }
  }
  p.emit(j, text);
  return kExitVerdict;
}

int cmd_closure(const Options& o, const Printer& p) {
  const auto u = parse_universe(o.universe);
  const auto r = check_universe_closure(u, o.bound);
  json basis = json::array();
  for (Game b : u.basis()) basis.push_back(p.game(b));
  json j{{"closed", r.closed}, {"bound", r.bound}, {"elements_checked", r.elements_checked}, {"basis", basis}};
  std::string text = "closed up to bound " + std::to_string(r.bound) + " (" +
                     std::to_string(r.elements_checked) + " elements)";
  if (r.escapee) {
    j["violation"] = std::string(to_string(r.escapee->kind));
    j["source"] = p.element(u, r.escapee->source);
    j["missing"] = p.game(r.escapee->missing);
    text = "not closed: " + std::string(to_string(r.escapee->kind)) + " of " +
           describe(u, r.escapee->source.descriptor) + " gives " + p.game(r.escapee->missing);
  }
  p.emit(j, text);
  return kExitVerdict;
}

int cmd_quotient(const Options& o, const Printer& p) {
  const auto u = parse_universe(o.universe);
  const auto q = quotient_estimate(u, o.elem_bound, o.test_bound);
  json classes = json::array();
  std::ostringstream text;
  text << q.size() << " classes at bounds (" << o.elem_bound << ", " << o.test_bound << ")\n";
  std::map<char, json> partition;
  for (std::size_t c = 0; c < q.size(); ++c) {
    const auto& cls = q.classes()[c];
    classes.push_back({{"id", c},
                       {"representative", p.element(u, cls.representative)},
                       {"outcome", outcome_text(cls.outcome)},
                       {"members", cls.members}});
    partition[to_char(cls.outcome)].push_back(c);
    text << "  [" << c << "] " << to_char(cls.outcome) << "  " << describe(u, cls.representative.descriptor)
         << "  (" << cls.members << " members)\n";
  }
  json mul = json::array();
  for (std::size_t x = 0; x < q.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < q.size(); ++y) {
      const auto m = q.mul(x, y);
      row.push_back(m ? json(*m) : json(nullptr));
    }
    mul.push_back(row);
  }
  json part = json::object();
  for (auto& [k, v] : partition) part[std::string(1, k)] = v;
  json j{{"universe", u.to_string()},
         {"elem_bound", o.elem_bound},
         {"test_bound", o.test_bound},
         {"classes", classes},
         {"mul", mul},
         {"outcome_partition", part}};
  const auto unknown = q.unknown_entries();
  j["unknown_entries"] = unknown.size();

  if (!o.presentation.empty()) {
    const auto pres = load_presentation(o.presentation);
    json isos = json::array();
    const auto matches = check_presentation(q, pres);
    for (const auto& m : matches) isos.push_back(m.class_words);
    j["presentation"] = {{"file", o.presentation}, {"matches", !matches.empty()}, {"isomorphisms", isos}};
    text << (matches.empty() ? "presentation does not match\n"
                             : "presentation matches (" + std::to_string(matches.size()) + " isomorphisms)\n");
    for (std::size_t i = 0; i < matches.size(); ++i) {
      text << "  isomorphism " << i << ":";
      for (std::size_t c = 0; c < q.size(); ++c) text << " [" << c << "]->" << matches[i].class_words[c];
      text << "\n";
    }
  }
  p.emit(j, text.str());
  return kExitVerdict;
}

int cmd_verify(const Options& o, const Printer& p) {
  std::vector<CriterionResult> results;
  auto line = [&](const CriterionResult& r) {
    if (!o.json) {
      std::printf("%-4s %2d  %-26s %8.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.number, r.name.c_str(), r.seconds,
                  r.detail.c_str());
      std::fflush(stdout);
    }
  };
  if (o.criteria.empty()) {
    results = run_acceptance(line);
  } else {
    for (int n : o.criteria) {
      results.push_back(run_criterion(n));
      line(results.back());
    }
  }
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    rows.push_back({{"criterion", r.number},
                    {"item", r.name},
                    {"passed", r.passed},
                    {"seconds", r.seconds},
                    {"detail", r.detail}});
  }
  if (o.json) {
    p.emit({{"all_passed", all}, {"items", rows}}, "");
  } else {
    std::printf("%s\n", all ? "all items PASS" : "some items FAIL");
  }
  return kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  std::size_t jobs = 1;
  CLI::App app{"Misère partizan game toolkit: outcomes, comparison modulo universes, quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_flag("--pretty", o.pretty, "Render games with named constants");
  app.add_option("--jobs", jobs, "Worker threads for enumeration loops")->check(CLI::PositiveNumber);

  auto add_universe = [&](CLI::App* c) {
    c->add_option("--universe", o.universe, "MZ, CL_A, CL_2SHARP0, CL_2SHARP20, gens:g;..., sum:(U)+(V)");
  };
  auto add_bound = [&](CLI::App* c) { c->add_option("--bound", o.bound, "Enumeration bound (multiset size)"); };

  std::map<CLI::App*, int (*)(const Options&, const Printer&)> handlers;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Options&, const Printer&)) {
    CLI::App* c = app.add_subcommand(name, help);
    handlers[c] = fn;
    return c;
  };

  verb("outcome", "Misère outcome of a game", cmd_outcome)->add_option("game", o.games)->required()->expected(1);
  verb("sum", "Disjunctive sum of games", cmd_sum)->add_option("games", o.games)->required();
  verb("conj", "Conjugate of a game", cmd_conj)->add_option("game", o.games)->required()->expected(1);
  verb("followers", "All followers of a game", cmd_followers)->add_option("game", o.games)->required()->expected(1);
  verb("parse-check", "Validate game notation", cmd_parse_check)->add_option("text", o.games)->required()->expected(1);

  auto* compare = verb("compare", "Compare two games modulo a universe", cmd_compare);
  compare->add_option("games", o.games)->required()->expected(2);
  compare->add_flag("--ge", o.ge_only, "Only test G >= H");
  add_universe(compare);
  add_bound(compare);

  auto* inv = verb("invertible", "Is G + ~G equivalent to 0 modulo a universe", cmd_invertible);
  inv->add_option("game", o.games)->required()->expected(1);
  add_universe(inv);
  add_bound(inv);

  auto* canc = verb("cancellative", "Search for a cancellation failure of G", cmd_cancellative);
  canc->add_option("game", o.games)->required()->expected(1);
  add_universe(canc);
  add_bound(canc);

  auto* qz = verb("qz-check", "Check whether a universe has quotient Z", cmd_qz);
  add_universe(qz);
  add_bound(qz);

  auto* closure = verb("closure", "Check closure of a universe description", cmd_closure);
  add_universe(closure);
  add_bound(closure);

  auto* quotient = verb("quotient", "Estimate the misère quotient of a universe", cmd_quotient);
  add_universe(quotient);
  quotient->add_option("--elem-bound", o.elem_bound, "Element bound")->check(CLI::PositiveNumber);
  quotient->add_option("--test-bound", o.test_bound, "Test bound")->check(CLI::PositiveNumber);
  quotient->add_option("--presentation", o.presentation, "Presentation file to match")->check(CLI::ExistingFile);

  auto* verify = verb("verify-paper", "Run the acceptance suite", cmd_verify);
  verify->add_option("--criterion", o.criteria, "Run only these criteria")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitVerdict : kExitUsage;
  }

  set_worker_count(jobs);
  const Printer printer(o);
  const auto cache = cache_path_from_env();
  try {
    if (cache) load_cache(*cache);
    int code = kExitVerdict;
    for (auto& [sub, fn] : handlers) {
      if (sub->parsed()) code = fn(o, printer);
    }
    if (cache) save_cache(*cache);
    return code;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr ||
        dynamic_cast<const std::out_of_range*>(&e) != nullptr) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
