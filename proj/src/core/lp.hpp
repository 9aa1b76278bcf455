#pragma once

// Exact rational linear programming, dense two-phase simplex with Bland's
// rule.  Problems here are tiny (a handful of equality constraints over a
// few dozen variables), so clarity and determinism beat sparsity.

#include <optional>
#include <stdexcept>
#include <vector>

#include "core/rational.hpp"

namespace semitoric {

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimizes c.x subject to A x = b, x >= 0.  Returns std::nullopt when
// infeasible; throws LpError when unbounded or malformed.  Bland's rule
// makes the returned vertex deterministic.
std::optional<std::vector<Rat>> lp_solve_min(
    const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
    const std::vector<Rat>& c);

}  // namespace semitoric
