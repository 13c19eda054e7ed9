#pragma once

#include "gqm/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gqm::detail {

struct NonnegativeCombination {
  bool feasible = false;
  std::vector<Rat> x;          // per column, present when feasible
  std::vector<Rat> separator;  // per row, present when infeasible: y.b > 0 >= y.A_j
};

/// Decides whether b = A x has a solution x >= 0, where every column of A is a
/// 0/1 vector given by the rows holding a 1. Phase one of the revised simplex
/// method in exact arithmetic with Bland's rule, so it terminates on
/// degenerate problems. Requires b >= 0.
NonnegativeCombination solve_nonnegative_combination(std::size_t rows,
                                                     std::span<const std::vector<std::uint32_t>> columns,
                                                     std::span<const Rat> b);

}  // namespace gqm::detail
