#pragma once

// Bracket notation for games.
//
//   game  := "{" opts "|" opts "}" | "~" game | constant
//   opts  := "" | "." | "·" | game ("," game)*
//
// Constants: 0 1 2 * *2 2# 2#0 2#20 a. Whitespace is ignored.
// parse_expression additionally accepts sums `term + term + ...`, where a
// term is a game or `a:k1,k2,k3,k4` (k1·a + k2·~a + k3·1 + k4·~1).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "misere/game.hpp"

namespace misere {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);

  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class RenderMode { raw, pretty };

Game parse(std::string_view text);
Game parse_expression(std::string_view text);

/// Raw mode prints nested braces only ("{|}" for zero); pretty mode
/// abbreviates named constants and their conjugates.
std::string render(Game g, RenderMode mode = RenderMode::raw);

/// Short name of a named constant ("*2", "~a", ...), or empty.
std::string constant_name(Game g);

}  // namespace misere
