#pragma once

#include "gqm/composite.hpp"
#include "gqm/gf.hpp"

#include <string>
#include <vector>

namespace gqm {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::uint32_t q;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// The expected singlet correlation row for a pattern, independent of q.
CorrelationRow reference_row(Table1Pattern pattern);

/// The reproduction checks that apply to one field: the singlet correlation
/// table, the CHSH bound, the state counts, the single-spin probabilities, the
/// singlet bracket identity, the local-hidden-variable verdicts (q <= 3), the
/// field axioms and absolute-value multiplicativity (q <= 9), product-state
/// factorization (q <= 3) and the F1 consistency report (N <= 6).
VerifyReport verify_all(const Field& field);

}  // namespace gqm
