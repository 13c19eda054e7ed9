#include "gqm/verify.hpp"

#include "gqm/composite.hpp"
#include "gqm/f1.hpp"
#include "gqm/lhv.hpp"
#include "gqm/qcount.hpp"

#include <algorithm>
#include <array>

namespace gqm {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CorrelationRow reference_row(Table1Pattern pattern) {
  switch (pattern) {
    case Table1Pattern::Same: return {pattern, {Rat(0), Rat(1, 2), Rat(1, 2), Rat(0)}, Rat(-1)};
    case Table1Pattern::SharedFirst: return {pattern, {Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, Rat(-1, 3)};
    case Table1Pattern::Chained: return {pattern, {Rat(1, 3), Rat(1, 3), Rat(0), Rat(1, 3)}, Rat(1, 3)};
    case Table1Pattern::Disjoint: return {pattern, {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}, Rat(0)};
  }
  return {pattern, {}, Rat(0)};
}

namespace {

void check_table1(const Field& field, std::vector<Check>& out) {
  const auto table = table1(field);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& entry = table[i];
    const auto expected = reference_row(entry.pattern);
    const std::string name = "table1 " + std::string(label(entry.pattern));
    if (!entry.row) {
      const bool should_skip = entry.pattern == Table1Pattern::Disjoint && field.order() < 3;
      out.push_back({name, should_skip, "RowSkipped"});
      continue;
    }
    const bool ok = entry.row->probs == expected.probs && entry.row->ev == expected.ev;
    out.push_back({name, ok, "ev " + to_string(entry.row->ev) + " over " + std::to_string(entry.assignments) +
                                 " assignments"});
  }
}

void check_chsh(const Field& field, std::vector<Check>& out) {
  const std::array<TwoSpinState, 1> s{singlet(0, 1, field)};
  const auto r = chsh_max(field, s);
  out.push_back({"chsh max on singlet = 2", r.max_abs == 2, to_string(r.max_abs)});
  if (field.order() <= 4) {
    const auto census = enumerate_two_spin_states(field);
    const auto all = chsh_max(field, census.entangled);
    out.push_back({"chsh max over entangled states = 2", all.max_abs == 2, to_string(all.max_abs)});
  }
}

void check_counts(const Field& field, std::vector<Check>& out) {
  const std::uint64_t q = field.order();
  out.push_back({"|PG(1,q)| = q+1", enumerate_points(2, field).size() == q + 1, ""});
  const auto census = enumerate_two_spin_states(field);
  out.push_back({"two-spin states = q^3+q^2+q+1", census.all.size() == q * q * q + q * q + q + 1,
                 std::to_string(census.all.size())});
  out.push_back({"product states = (q+1)^2", census.product.size() == (q + 1) * (q + 1),
                 std::to_string(census.product.size())});
  out.push_back({"entangled states = q(q^2-1)", census.entangled.size() == q * (q * q - 1),
                 std::to_string(census.entangled.size())});
  for (unsigned N = 1; N <= 4; ++N) {
    if (q > 5 && N > 3) break;
    out.push_back({"|PG(" + std::to_string(N - 1) + ",q)| = [" + std::to_string(N) + "]_q",
                   BigInt(enumerate_points(N, field).size()) == q_int(N, q), ""});
  }
  if (q <= 3) {
    for (unsigned N = 1; N <= 4; ++N) {
      for (int k = -1; k < static_cast<int>(N); ++k) {
        const auto formula = subspace_count(N, k, q);
        const auto brute = brute_force_subspace_count(N, k, q);
        out.push_back({"subspaces N=" + std::to_string(N) + " k=" + std::to_string(k), formula == brute,
                       formula.str() + " vs " + brute.str()});
      }
    }
  }
}

void check_spin_probabilities(const Field& field, std::vector<Check>& out) {
  const unsigned points = field.order() + 1;
  const auto elements = field.elements();
  bool table_ok = true;
  bool normalized = true;
  bool invariant = true;
  for (unsigned r = 0; r < points; ++r) {
    for (unsigned s = 0; s < points; ++s) {
      if (r == s) continue;
      const auto obs = spin_observable(r, s, field);
      for (unsigned t = 0; t < points; ++t) {
        const auto psi = ket(t, field);
        const auto probs = distribution(obs, psi);
        const Rat expected_plus = t == s ? Rat(1) : t == r ? Rat(0) : Rat(1, 2);
        table_ok = table_ok && probs[0] == expected_plus && probs[1] == 1 - expected_plus;
        normalized = normalized && probs[0] + probs[1] == 1;
        for (std::size_t c = 1; c < elements.size(); ++c) {
          const auto scaled = ProjVector::canonicalize(scale(elements[c], psi.entries()));
          invariant = invariant && distribution(obs, scaled) == probs;
          // The raw scaled vector goes through the same rule without canonicalization.
          std::array<Vec, 2> duals{obs.outcomes()[0].dual.entries(), obs.outcomes()[1].dual.entries()};
          invariant = invariant && distribution(duals, scale(elements[c], psi.entries())) == probs;
        }
      }
    }
  }
  out.push_back({"P(A_rs=+1|s)=1, P(A_rs=+1|r)=0, otherwise 1/2", table_ok, ""});
  out.push_back({"single-spin probabilities sum to 1", normalized, ""});
  out.push_back({"probabilities invariant under nonzero scaling", invariant, ""});
}

void check_singlet_brackets(const Field& field, std::vector<Check>& out) {
  const unsigned points = field.order() + 1;
  bool ok = true;
  for (unsigned r = 0; r < points; ++r) {
    for (unsigned s = 0; s < points; ++s) {
      ok = ok && to_int(singlet_bracket_rule(r, s, field)) == (r == s ? 0 : 1);
    }
  }
  out.push_back({"|(<r| x <s|) S| = 1 - delta_rs", ok, ""});
}

void check_lhv(const Field& field, std::vector<Check>& out) {
  const auto uniform = uniform_table({2, 2});
  const auto u = lhv_feasible(uniform);
  out.push_back({"uniform table is local", u.feasible && weights_reproduce(uniform, u.weights), ""});
  const auto box = pr_box();
  const auto b = lhv_feasible(box);
  out.push_back({"PR box is not local", !b.feasible && b.certificate && certificate_separates(box, *b.certificate),
                 ""});
  out.push_back({"deterministic CHSH max = 2", lhv_chsh_max({2, 2}) == 2, ""});
  if (field.order() > 3) return;

  const auto table = gqm_joint_table(singlet(0, 1, field), field);
  const auto v = lhv_feasible(table.table);
  out.push_back({"singlet table is not local",
                 !v.feasible && v.certificate && certificate_separates(table.table, *v.certificate), ""});
  bool products_local = true;
  for (const auto& state : enumerate_two_spin_states(field).product) {
    const auto t = gqm_joint_table(state, field);
    const auto pv = lhv_feasible(t.table);
    products_local = products_local && pv.feasible && weights_reproduce(t.table, pv.weights);
  }
  out.push_back({"every product-state table is local", products_local, ""});
}

void check_field_properties(const Field& field, std::vector<Check>& out) {
  const auto els = field.elements();
  const auto zero = field.zero();
  const auto one = field.one();
  bool axioms = true;
  for (const auto& a : els) {
    axioms = axioms && a + zero == a && a * one == a && a + (-a) == zero;
    if (!a.is_zero()) axioms = axioms && a * a.inv() == one;
    for (const auto& b : els) {
      axioms = axioms && a + b == b + a && a * b == b * a;
      for (const auto& c : els) {
        axioms = axioms && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
      }
    }
  }
  out.push_back({"field axioms", axioms, ""});
  bool multiplicative = true;
  for (const auto& a : els) {
    for (const auto& b : els) multiplicative = multiplicative && abs_map(a * b) == abs_map(a) * abs_map(b);
  }
  out.push_back({"|kl| = |k||l|", multiplicative, ""});
}

void check_factorization(const Field& field, std::vector<Check>& out) {
  const auto points = enumerate_points(2, field);
  const auto dirs = spin_directions(field);
  bool ok = true;
  for (const auto& u : points) {
    for (const auto& v : points) {
      const auto state = tensor_ket(u, v);
      for (const auto& da : dirs) {
        const auto A = spin_observable(da.r, da.s, field);
        const auto pu = distribution(A, u);
        for (const auto& db : dirs) {
          const auto B = spin_observable(db.r, db.s, field);
          const auto pv = distribution(B, v);
          const auto joint = joint_distribution(product_observable(A, B), state);
          ok = ok && joint[0] == pu[0] * pv[0] && joint[1] == pu[0] * pv[1] && joint[2] == pu[1] * pv[0] &&
               joint[3] == pu[1] * pv[1];
        }
      }
    }
  }
  out.push_back({"product-state probabilities factorize", ok, ""});
}

void check_f1(std::vector<Check>& out) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto report = f1::q1_consistency_report(n);
    const bool ok = std::all_of(report.begin(), report.end(), [](const f1::ReportCheck& c) { return c.pass; });
    out.push_back({"F1 consistency N=" + std::to_string(n), ok, ""});
  }
}

}  // namespace

VerifyReport verify_all(const Field& field) {
  VerifyReport report{field.order(), {}};
  check_table1(field, report.checks);
  check_chsh(field, report.checks);
  check_counts(field, report.checks);
  check_spin_probabilities(field, report.checks);
  check_singlet_brackets(field, report.checks);
  check_lhv(field, report.checks);
  if (field.order() <= 9) check_field_properties(field, report.checks);
  if (field.order() <= 3) check_factorization(field, report.checks);
  check_f1(report.checks);
  return report;
}

}  // namespace gqm
