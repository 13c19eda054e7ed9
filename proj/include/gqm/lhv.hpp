#pragma once

#include "gqm/composite.hpp"
#include "gqm/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gqm {

/// m1 observables on the first party, m2 on the second, outcomes +1 / -1.
struct Scenario {
  unsigned m1;
  unsigned m2;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Largest m1 + m2 accepted; the strategy count is 2^(m1+m2).
inline constexpr unsigned kMaxObservables = 20;

/// Per observable pair (i, j), the probabilities of ++, +-, -+, --.
class JointTable {
 public:
  using Row = std::array<Rat, 4>;

  /// Rows in pair order (i * m2 + j). Throws BadTable on a wrong row count,
  /// a negative entry, or a row not summing to 1.
  static JointTable make(Scenario scenario, std::vector<Row> rows);

  Scenario scenario() const { return scenario_; }
  const Row& at(unsigned i, unsigned j) const { return rows_[i * scenario_.m2 + j]; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  JointTable(Scenario scenario, std::vector<Row> rows) : scenario_(scenario), rows_(std::move(rows)) {}

  Scenario scenario_;
  std::vector<Row> rows_;
};

/// A deterministic local assignment. Bit i (i < m1) set means the first
/// party's observable i yields -1; bit m1 + j likewise for the second party.
struct Strategy {
  std::uint32_t bits;

  int first(unsigned i) const { return (bits >> i) & 1u ? -1 : 1; }
  int second(unsigned j, Scenario s) const { return (bits >> (s.m1 + j)) & 1u ? -1 : 1; }
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// "+-|-+": the first party's outcomes, then the second party's.
std::string to_string(Strategy strategy, Scenario scenario);

/// All 2^(m1+m2) strategies in bit order. Throws InvalidArgs for an empty side
/// and TooLarge beyond kMaxObservables.
std::vector<Strategy> deterministic_strategies(Scenario scenario);

/// The outcome index (0..3, ++ first) the strategy produces on pair (i, j).
std::size_t strategy_outcome(Strategy strategy, Scenario scenario, unsigned i, unsigned j);

struct WeightedStrategy {
  Strategy strategy;
  Rat weight;
};

/// A linear functional on tables, laid out like JointTable rows.
using Certificate = std::vector<JointTable::Row>;

struct LhvVerdict {
  bool feasible = false;
  std::vector<WeightedStrategy> weights;  // nonzero weights only, when feasible
  std::optional<Certificate> certificate;  // when infeasible
};

/// Exact decision whether the table is a convex combination of deterministic
/// strategies. Infeasible verdicts carry a certificate F with F(table) > 0 and
/// F(strategy) <= 0 for every strategy, scaled so that its first nonzero
/// coefficient is +1 or -1.
LhvVerdict lhv_feasible(const JointTable& table);

Rat certificate_value(const Certificate& certificate, const JointTable& table);
/// F evaluated on one strategy's behavior.
Rat certificate_value(const Certificate& certificate, Strategy strategy, Scenario scenario);

/// Substitution checks, independent of the solver.
bool weights_reproduce(const JointTable& table, std::span<const WeightedStrategy> weights);
bool certificate_separates(const JointTable& table, const Certificate& certificate);

/// CHSH combination E(0,0) + E(0,1) + E(1,0) - E(1,1) of a table with
/// m1, m2 >= 2, using the first two observables per side.
Rat table_chsh(const JointTable& table);

/// Max |E00 + E01 + E10 - E11| over deterministic strategies. Throws
/// InvalidArgs unless m1 = m2 = 2.
Rat lhv_chsh_max(Scenario scenario);

/// 1/4 everywhere.
JointTable uniform_table(Scenario scenario);

/// Popescu-Rohrlich box: perfectly correlated except anti-correlated on (1, 1).
JointTable pr_box();

/// The table a two-spin state produces for the spin observables A_rs with
/// r < s (one orientation per direction), the same list on both sides.
struct GqmTable {
  std::vector<SpinDirection> directions;
  JointTable table;
};

GqmTable gqm_joint_table(const TwoSpinState& state, const Field& field);

/// Convex combination of strategy behaviors.
JointTable mixture_table(Scenario scenario, std::span<const WeightedStrategy> weights);

}  // namespace gqm
