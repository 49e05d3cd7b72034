#include "misere/notation.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <unordered_map>
#include <utility>

namespace misere {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

struct NamedConstant {
  std::string_view name;
  Game (*make)();
};

// Longest names first so that prefix matching picks "2#20" over "2#".
constexpr std::array<NamedConstant, 9> kConstants{{
    {"2#20", games::two_sharp20},
    {"2#0", games::two_sharp0},
    {"2#", games::two_sharp},
    {"*2", games::star2},
    {"*", games::star},
    {"0", games::zero},
    {"1", games::one},
    {"2", games::two},
    {"a", games::a},
}};

constexpr std::string_view kMiddleDot = "\xC2\xB7";

class Parser {
 public:
  Parser(std::string_view text, bool allow_sums) : text_(text), allow_sums_(allow_sums) {}

  Game parse_all() {
    Game g = allow_sums_ ? expression() : game();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_empty_marker() {
    skip_ws();
    if (text_.substr(pos_).starts_with(kMiddleDot)) {
      pos_ += kMiddleDot.size();
      return true;
    }
    return accept('.');
  }

  Game expression() {
    Game total = term();
    while (accept('+')) total = sum(total, term());
    return total;
  }

  Game term() {
    skip_ws();
    if (text_.substr(pos_).starts_with("a:")) {
      pos_ += 2;
      std::array<std::size_t, 4> k{};
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i > 0) expect(',');
        k[i] = number();
      }
      return sum(sum(n_copies(games::a(), k[0]), n_copies(games::a_bar(), k[1])),
                 sum(n_copies(games::one(), k[2]), n_copies(games::one_bar(), k[3])));
    }
    return game();
  }

  std::size_t number() {
    skip_ws();
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a natural number");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  Game game() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('~')) return conjugate(game());
    if (accept('{')) {
      GameList left = options('|');
      expect('|');
      GameList right = options('}');
      expect('}');
      return mk_game(std::move(left), std::move(right));
    }
    for (const auto& c : kConstants) {
      if (text_.substr(pos_).starts_with(c.name)) {
        pos_ += c.name.size();
        return c.make();
      }
    }
    fail("unknown constant or unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  GameList options(char terminator) {
    GameList out;
    if (peek(terminator)) return out;
    if (accept_empty_marker()) return out;
    out.push_back(allow_sums_ ? expression() : game());
    while (accept(',')) out.push_back(allow_sums_ ? expression() : game());
    return out;
  }

  std::string_view text_;
  bool allow_sums_;
  std::size_t pos_ = 0;
};

void render_into(Game g, RenderMode mode, std::string& out,
                 std::unordered_map<Game, std::string>& memo) {
  if (auto it = memo.find(g); it != memo.end()) {
    out += it->second;
    return;
  }
  std::string text;
  if (mode == RenderMode::pretty) text = constant_name(g);
  if (text.empty()) {
    text += '{';
    bool first = true;
    for (Game l : left_options(g)) {
      if (!first) text += ',';
      first = false;
      render_into(l, mode, text, memo);
    }
    text += '|';
    first = true;
    for (Game r : right_options(g)) {
      if (!first) text += ',';
      first = false;
      render_into(r, mode, text, memo);
    }
    text += '}';
  }
  out += text;
  memo.emplace(g, std::move(text));
}

}  // namespace

Game parse(std::string_view text) { return Parser(text, false).parse_all(); }

Game parse_expression(std::string_view text) { return Parser(text, true).parse_all(); }

std::string constant_name(Game g) {
  for (const auto& c : kConstants) {
    if (c.make() == g) return std::string(c.name);
  }
  for (const auto& c : kConstants) {
    Game conj = conjugate(c.make());
    if (conj != c.make() && conj == g) return "~" + std::string(c.name);
  }
  return {};
}

std::string render(Game g, RenderMode mode) {
  std::string out;
  std::unordered_map<Game, std::string> memo;
  render_into(g, mode, out, memo);
  return out;
}

}  // namespace misere
