#pragma once

// Short partizan game trees as hash-consed nodes of a global DAG.
//
// Every game is identified by a `Game` handle. Two structurally equal games
// always share a handle, so structural identities such as commutativity of
// the disjunctive sum or the involution property of conjugation become plain
// handle equalities.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace misere {

/// Opaque handle of an interned game. Ids are assigned in insertion order;
/// every option of a game has a strictly smaller id than the game itself.
class Game {
 public:
  using id_type = std::uint32_t;

  constexpr Game() = default;
  constexpr explicit Game(id_type id) : id_(id) {}

  [[nodiscard]] constexpr id_type id() const { return id_; }

  friend constexpr auto operator<=>(Game, Game) = default;

 private:
  id_type id_ = 0;
};

using GameList = std::vector<Game>;

/// Interns {left | right}. Option sets are sorted by id and deduplicated.
Game mk_game(GameList left, GameList right);

std::span<const Game> left_options(Game g);
std::span<const Game> right_options(Game g);

/// Number of games interned so far.
std::size_t arena_size();

Game conjugate(Game g);
Game sum(Game g, Game h);
Game sum(std::span<const Game> terms);
Game n_copies(Game g, std::size_t k);

/// Reflexive-transitive closure under taking options, sorted by id.
GameList followers(Game g);

bool is_left_end(Game g);
bool is_right_end(Game g);
bool is_left_dead_end(Game g);
bool is_right_dead_end(Game g);
bool is_dead_end(Game g);
bool is_dead_ending(Game g);

std::size_t birthday(Game g);

namespace games {

Game zero();         // {|}
Game one();          // {0|}
Game one_bar();      // {|0}
Game two();          // {1|}
Game two_bar();      // {|~1}
Game star();         // {0|0}
Game star2();        // {0,*|0,*}
Game two_sharp();    // {*2|*2}
Game two_sharp0();   // {0,2#|0,2#}
Game two_sharp20();  // {0,*2,2#|0,*2,2#}
Game a();            // {|2}
Game a_bar();        // {~2|}

}  // namespace games

}  // namespace misere

template <>
struct std::hash<misere::Game> {
  std::size_t operator()(misere::Game g) const noexcept {
    return std::hash<misere::Game::id_type>{}(g.id());
  }
};
