#pragma once

// End-to-end verification suite shared by the acceptance test binary and
// the `misere verify-paper` command.

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "misere/game.hpp"

namespace misere {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `number` (1-based). Exceeding the time limit fails it.
CriterionResult run_criterion(int number);

/// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_result = {});

/// Random game of birthday at most `depth` with at most `width` options per
/// side, built bottom-up from zero.
Game random_game(std::mt19937_64& rng, std::size_t depth, std::size_t width);

/// Random game whose Left and Right option sets coincide at every follower.
Game random_impartial_game(std::mt19937_64& rng, std::size_t depth, std::size_t width);

}  // namespace misere
