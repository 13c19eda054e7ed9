#include "gqm/lhv.hpp"

#include "exact_lp.hpp"
#include "gqm/error.hpp"

namespace gqm {

namespace {

void check_scenario(Scenario s) {
  if (s.m1 < 1 || s.m2 < 1) throw Error(ErrorKind::InvalidArgs, "each party needs at least one observable");
  if (s.m1 + s.m2 > kMaxObservables) {
    throw Error(ErrorKind::TooLarge, "m1 + m2 exceeds " + std::to_string(kMaxObservables));
  }
}

}  // namespace

JointTable JointTable::make(Scenario scenario, std::vector<Row> rows) {
  if (scenario.m1 < 1 || scenario.m2 < 1) throw Error(ErrorKind::BadTable, "empty scenario");
  if (rows.size() != static_cast<std::size_t>(scenario.m1) * scenario.m2) {
    throw Error(ErrorKind::BadTable, "expected " + std::to_string(scenario.m1 * scenario.m2) + " observable pairs, got " +
                                         std::to_string(rows.size()));
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Rat sum = 0;
    for (const auto& p : rows[k]) {
      if (p < 0) throw Error(ErrorKind::BadTable, "negative probability in pair " + std::to_string(k));
      sum += p;
    }
    if (sum != 1) throw Error(ErrorKind::BadTable, "pair " + std::to_string(k) + " sums to " + to_string(sum));
  }
  return JointTable(scenario, std::move(rows));
}

std::string to_string(Strategy strategy, Scenario scenario) {
  std::string out;
  for (unsigned i = 0; i < scenario.m1; ++i) out += strategy.first(i) > 0 ? '+' : '-';
  out += '|';
  for (unsigned j = 0; j < scenario.m2; ++j) out += strategy.second(j, scenario) > 0 ? '+' : '-';
  return out;
}

std::vector<Strategy> deterministic_strategies(Scenario scenario) {
  check_scenario(scenario);
  const std::uint32_t count = std::uint32_t{1} << (scenario.m1 + scenario.m2);
  std::vector<Strategy> out;
  out.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) out.push_back({bits});
  return out;
}

std::size_t strategy_outcome(Strategy strategy, Scenario scenario, unsigned i, unsigned j) {
  return outcome_pair_index({strategy.first(i), strategy.second(j, scenario)});
}

LhvVerdict lhv_feasible(const JointTable& table) {
  const Scenario s = table.scenario();
  const auto strategies = deterministic_strategies(s);
  const std::size_t pairs = static_cast<std::size_t>(s.m1) * s.m2;

  std::vector<std::vector<std::uint32_t>> columns;
  columns.reserve(strategies.size());
  for (const auto& st : strategies) {
    std::vector<std::uint32_t> col;
    col.reserve(pairs);
    for (unsigned i = 0; i < s.m1; ++i) {
      for (unsigned j = 0; j < s.m2; ++j) {
        col.push_back(static_cast<std::uint32_t>(4 * (i * s.m2 + j) + strategy_outcome(st, s, i, j)));
      }
    }
    columns.push_back(std::move(col));
  }
  std::vector<Rat> rhs;
  rhs.reserve(4 * pairs);
  for (const auto& row : table.rows()) rhs.insert(rhs.end(), row.begin(), row.end());

  const auto lp = detail::solve_nonnegative_combination(rhs.size(), columns, rhs);

  LhvVerdict verdict;
  verdict.feasible = lp.feasible;
  if (lp.feasible) {
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      if (lp.x[k] != 0) verdict.weights.push_back({strategies[k], lp.x[k]});
    }
    return verdict;
  }

  Rat norm = 0;
  for (const auto& v : lp.separator) {
    if (v != 0) {
      norm = v < 0 ? Rat(-v) : v;
      break;
    }
  }
  Certificate cert(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    for (std::size_t o = 0; o < 4; ++o) cert[k][o] = lp.separator[4 * k + o] / norm;
  }
  verdict.certificate = std::move(cert);
  return verdict;
}

Rat certificate_value(const Certificate& certificate, const JointTable& table) {
  if (certificate.size() != table.rows().size()) throw Error(ErrorKind::ShapeMismatch, "certificate size");
  Rat sum = 0;
  for (std::size_t k = 0; k < certificate.size(); ++k) {
    for (std::size_t o = 0; o < 4; ++o) sum += certificate[k][o] * table.rows()[k][o];
  }
  return sum;
}

Rat certificate_value(const Certificate& certificate, Strategy strategy, Scenario scenario) {
  if (certificate.size() != static_cast<std::size_t>(scenario.m1) * scenario.m2) {
    throw Error(ErrorKind::ShapeMismatch, "certificate size");
  }
  Rat sum = 0;
  for (unsigned i = 0; i < scenario.m1; ++i) {
    for (unsigned j = 0; j < scenario.m2; ++j) {
      sum += certificate[i * scenario.m2 + j][strategy_outcome(strategy, scenario, i, j)];
    }
  }
  return sum;
}

bool weights_reproduce(const JointTable& table, std::span<const WeightedStrategy> weights) {
  Rat total = 0;
  for (const auto& w : weights) {
    if (w.weight < 0) return false;
    total += w.weight;
  }
  if (total != 1) return false;
  return mixture_table(table.scenario(), weights).rows() == table.rows();
}

bool certificate_separates(const JointTable& table, const Certificate& certificate) {
  const Scenario s = table.scenario();
  if (certificate.size() != table.rows().size()) return false;
  const Rat on_table = certificate_value(certificate, table);
  for (const auto& st : deterministic_strategies(s)) {
    if (certificate_value(certificate, st, s) >= on_table) return false;
  }
  return true;
}

Rat table_chsh(const JointTable& table) {
  const Scenario s = table.scenario();
  if (s.m1 < 2 || s.m2 < 2) throw Error(ErrorKind::InvalidArgs, "CHSH needs two observables per side");
  auto corr = [&](unsigned i, unsigned j) {
    const auto& p = table.at(i, j);
    return p[0] - p[1] - p[2] + p[3];
  };
  return corr(0, 0) + corr(0, 1) + corr(1, 0) - corr(1, 1);
}

Rat lhv_chsh_max(Scenario scenario) {
  if (scenario.m1 != 2 || scenario.m2 != 2) throw Error(ErrorKind::InvalidArgs, "CHSH scenario is m1 = m2 = 2");
  int best = 0;
  for (const auto& st : deterministic_strategies(scenario)) {
    auto e = [&](unsigned i, unsigned j) { return st.first(i) * st.second(j, scenario); };
    const int v = e(0, 0) + e(0, 1) + e(1, 0) - e(1, 1);
    best = std::max(best, v < 0 ? -v : v);
  }
  return Rat(best);
}

JointTable uniform_table(Scenario scenario) {
  check_scenario(scenario);
  const JointTable::Row quarter{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)};
  return JointTable::make(scenario, std::vector<JointTable::Row>(scenario.m1 * scenario.m2, quarter));
}

JointTable pr_box() {
  const JointTable::Row correlated{Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)};
  const JointTable::Row anti{Rat(0), Rat(1, 2), Rat(1, 2), Rat(0)};
  return JointTable::make({2, 2}, {correlated, correlated, correlated, anti});
}

GqmTable gqm_joint_table(const TwoSpinState& state, const Field& field) {
  std::vector<SpinDirection> dirs;
  std::vector<Observable> obs;
  const unsigned points = field.order() + 1;
  for (unsigned r = 0; r < points; ++r) {
    for (unsigned s = r + 1; s < points; ++s) {
      dirs.push_back({r, s});
      obs.push_back(spin_observable(r, s, field));
    }
  }
  const auto m = static_cast<unsigned>(dirs.size());
  check_scenario({m, m});
  std::vector<JointTable::Row> rows;
  rows.reserve(m * m);
  for (const auto& a : obs) {
    for (const auto& b : obs) rows.push_back(joint_distribution(product_observable(a, b), state));
  }
  return {dirs, JointTable::make({m, m}, std::move(rows))};
}

JointTable mixture_table(Scenario scenario, std::span<const WeightedStrategy> weights) {
  check_scenario(scenario);
  std::vector<JointTable::Row> rows(scenario.m1 * scenario.m2, JointTable::Row{Rat(0), Rat(0), Rat(0), Rat(0)});
  for (const auto& w : weights) {
    for (unsigned i = 0; i < scenario.m1; ++i) {
      for (unsigned j = 0; j < scenario.m2; ++j) {
        rows[i * scenario.m2 + j][strategy_outcome(w.strategy, scenario, i, j)] += w.weight;
      }
    }
  }
  return JointTable::make(scenario, std::move(rows));
}

}  // namespace gqm
