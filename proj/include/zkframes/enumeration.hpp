#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "zkframes/matrix.hpp"

namespace zkf {

/// LLL-reduce the rows of an integer basis in place (delta = 0.99). Gram-Schmidt
/// data is kept in long double; the basis itself only ever sees unimodular
/// integer row operations, so the lattice is unchanged exactly.
void lll_reduce(IntMatrix& basis, double delta = 0.99);

/// Called with y = shift + z*B (exact integer vector) and its exact squared
/// length y.y. Returns the radius to continue with (return the current one to
/// keep going, something smaller to shrink the search).
using BallVisitor = std::function<std::int64_t(std::span<const std::int64_t> y, std::int64_t norm)>;

struct BallSearch {
  /// Vectors with y.y <= radius are visited.
  std::int64_t radius = 0;
  /// Optional integer translate; empty means the lattice itself.
  std::span<const std::int64_t> shift{};
  /// When enumerating the lattice itself, visit one vector of each pair
  /// {y, -y} and skip the zero vector.
  bool halve = true;
  /// Maximum number of enumeration nodes before BudgetExceeded is thrown.
  std::uint64_t node_budget = 0;
};

/// Fincke-Pohst enumeration of all points of shift + L inside a ball.
///
/// Branch bounds use a long double LDL^T factorisation with a small relative
/// slack; every reported point is re-checked with exact integer arithmetic, so
/// the result is exact as long as rounding stays inside the slack. Returns the
/// number of nodes visited.
std::uint64_t enumerate_ball(const IntMatrix& basis, const BallSearch& search,
                             const BallVisitor& visit);

}  // namespace zkf
