#include "gqm/composite.hpp"

#include "gqm/error.hpp"

#include <algorithm>
#include <numeric>

namespace gqm {

Vec kron(const Vec& u, const Vec& v) {
  Vec out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u) {
    for (const auto& b : v) out.push_back(a * b);
  }
  return out;
}

TwoSpinState TwoSpinState::from_vector(Vec entries) {
  if (entries.size() != 4) {
    throw Error(ErrorKind::ShapeMismatch, "two-spin states are 4-dimensional, got " + std::to_string(entries.size()));
  }
  auto v = ProjVector::canonicalize(std::move(entries));
  const bool entangled = !(v[0] * v[3] - v[1] * v[2]).is_zero();
  return TwoSpinState(std::move(v), entangled);
}

TwoSpinState tensor_ket(const ProjVector& u, const ProjVector& v) {
  if (u.dim() != 2 || v.dim() != 2) throw Error(ErrorKind::ShapeMismatch, "tensor_ket expects two 2-vectors");
  if (!u.field().same_as(v.field())) throw Error(ErrorKind::FieldMismatch, "tensor_ket across fields");
  return TwoSpinState::from_vector(kron(u.entries(), v.entries()));
}

DualVector tensor_bra(const DualVector& x, const DualVector& y) {
  if (x.dim() != 2 || y.dim() != 2) throw Error(ErrorKind::ShapeMismatch, "tensor_bra expects two 2-vectors");
  if (!x.field().same_as(y.field())) throw Error(ErrorKind::FieldMismatch, "tensor_bra across fields");
  return DualVector::make(kron(x.entries(), y.entries()));
}

TwoSpinCensus enumerate_two_spin_states(const Field& field) {
  TwoSpinCensus census;
  for (auto& point : enumerate_points(4, field)) {
    auto state = TwoSpinState::from_vector(point.entries());
    (state.is_entangled() ? census.entangled : census.product).push_back(state);
    census.all.push_back(std::move(state));
  }
  return census;
}

TwoSpinState singlet(unsigned r, unsigned s, const Field& field) {
  if (r == s) throw Error(ErrorKind::DegenerateSinglet, "singlet needs r != s");
  const auto rs = kron(ket(r, field).entries(), ket(s, field).entries());
  const auto sr = kron(ket(s, field).entries(), ket(r, field).entries());
  Vec out;
  out.reserve(4);
  for (std::size_t i = 0; i < 4; ++i) out.push_back(rs[i] + signed_coefficient(-1, sr[i]));
  return TwoSpinState::from_vector(std::move(out));
}

AbsValue singlet_bracket_rule(unsigned r, unsigned s, const Field& field) {
  const auto dual = tensor_bra(bra(r, field), bra(s, field));
  return abs_map(bracket(dual, singlet(0, 1, field).vector()));
}

std::size_t outcome_pair_index(OutcomePair pair) {
  for (std::size_t i = 0; i < kOutcomePairs.size(); ++i) {
    if (kOutcomePairs[i] == pair) return i;
  }
  throw Error(ErrorKind::InvalidArgs, "outcome pairs are (+-1, +-1)");
}

namespace {

// Returns (dual for +1, dual for -1).
std::pair<DualVector, DualVector> spin_duals(const Observable& obs) {
  if (obs.dim() != 2 || obs.outcomes().front().dual.dim() != 2) {
    throw Error(ErrorKind::BadObservable, obs.name() + " is not a two-outcome spin observable");
  }
  const auto& o = obs.outcomes();
  if (o[0].value == 1 && o[1].value == -1) return {o[0].dual, o[1].dual};
  if (o[0].value == -1 && o[1].value == 1) return {o[1].dual, o[0].dual};
  throw Error(ErrorKind::BadObservable, obs.name() + " does not have outcomes +1 and -1");
}

}  // namespace

ProductObservable product_observable(const Observable& a, const Observable& b) {
  const auto [a_plus, a_minus] = spin_duals(a);
  const auto [b_plus, b_minus] = spin_duals(b);
  std::array<ProductObservable::Entry, 4> entries{{
      {tensor_bra(a_plus, b_plus), kOutcomePairs[0]},
      {tensor_bra(a_plus, b_minus), kOutcomePairs[1]},
      {tensor_bra(a_minus, b_plus), kOutcomePairs[2]},
      {tensor_bra(a_minus, b_minus), kOutcomePairs[3]},
  }};
  std::vector<DualVector> duals;
  for (const auto& e : entries) duals.push_back(e.dual);
  if (!is_dual_basis(duals)) {
    throw Error(ErrorKind::InternalInvariantViolation, "tensor duals are not a basis");
  }
  return ProductObservable(std::move(entries), a.name(), b.name());
}

std::array<Rat, 4> joint_distribution(const ProductObservable& po, const TwoSpinState& psi) {
  std::array<Vec, 4> duals{po.entries()[0].dual.entries(), po.entries()[1].dual.entries(),
                           po.entries()[2].dual.entries(), po.entries()[3].dual.entries()};
  auto probs = distribution(duals, psi.vector().entries());
  return {probs[0], probs[1], probs[2], probs[3]};
}

Rat joint_probability(const ProductObservable& po, OutcomePair outcome, const TwoSpinState& psi) {
  return joint_distribution(po, psi)[outcome_pair_index(outcome)];
}

Rat correlation(const ProductObservable& po, const TwoSpinState& psi) {
  const auto probs = joint_distribution(po, psi);
  Rat ev = 0;
  for (std::size_t i = 0; i < 4; ++i) ev += kOutcomePairs[i].first * kOutcomePairs[i].second * probs[i];
  return ev;
}

Rat chsh_value(const Observable& A, const Observable& a, const Observable& B, const Observable& b,
               const TwoSpinState& psi) {
  return correlation(product_observable(A, B), psi) + correlation(product_observable(A, b), psi) +
         correlation(product_observable(a, B), psi) - correlation(product_observable(a, b), psi);
}

std::string_view label(Table1Pattern pattern) {
  switch (pattern) {
    case Table1Pattern::Same: return "A_rs A_rs";
    case Table1Pattern::SharedFirst: return "A_rs A_rt";
    case Table1Pattern::Chained: return "A_rs A_st";
    case Table1Pattern::Disjoint: return "A_rs A_tu";
  }
  return "?";
}

namespace {

// Index tuples of `arity` pairwise distinct labels from [0, count), lexicographic.
void distinct_tuples(unsigned count, unsigned arity, std::vector<unsigned>& prefix,
                     std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() == arity) {
    out.push_back(prefix);
    return;
  }
  for (unsigned i = 0; i < count; ++i) {
    if (std::find(prefix.begin(), prefix.end(), i) != prefix.end()) continue;
    prefix.push_back(i);
    distinct_tuples(count, arity, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Table1Entry> table1(const Field& field) {
  const unsigned points = field.order() + 1;
  const auto S = singlet(0, 1, field);
  std::vector<std::optional<Observable>> cache(points * points);
  auto spin = [&](unsigned r, unsigned s) -> const Observable& {
    auto& slot = cache[r * points + s];
    if (!slot) slot = spin_observable(r, s, field);
    return *slot;
  };

  std::vector<Table1Entry> out;
  for (auto pattern : kTable1Patterns) {
    const unsigned arity = pattern == Table1Pattern::Same ? 2 : pattern == Table1Pattern::Disjoint ? 4 : 3;
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> prefix;
    if (arity <= points) distinct_tuples(points, arity, prefix, tuples);

    std::optional<CorrelationRow> row;
    for (const auto& t : tuples) {
      const Observable& first = spin(t[0], t[1]);
      const Observable& second = pattern == Table1Pattern::Same          ? spin(t[0], t[1])
                                 : pattern == Table1Pattern::SharedFirst ? spin(t[0], t[2])
                                 : pattern == Table1Pattern::Chained     ? spin(t[1], t[2])
                                                                         : spin(t[2], t[3]);
      const auto po = product_observable(first, second);
      CorrelationRow current{pattern, joint_distribution(po, S), correlation(po, S)};
      if (!row) {
        row = current;
      } else if (row->probs != current.probs || row->ev != current.ev) {
        throw Error(ErrorKind::InternalInvariantViolation,
                    std::string(label(pattern)) + " depends on the index assignment");
      }
    }
    out.push_back({pattern, row, tuples.size()});
  }
  return out;
}

std::vector<SpinDirection> spin_directions(const Field& field) {
  std::vector<SpinDirection> out;
  const unsigned points = field.order() + 1;
  for (unsigned r = 0; r < points; ++r) {
    for (unsigned s = 0; s < points; ++s) {
      if (r != s) out.push_back({r, s});
    }
  }
  return out;
}

ChshResult chsh_max(const Field& field, std::span<const TwoSpinState> states) {
  if (states.empty()) throw Error(ErrorKind::InvalidArgs, "chsh_max needs at least one state");
  const auto dirs = spin_directions(field);
  const std::size_t m = dirs.size();
  std::vector<Observable> observables;
  observables.reserve(m);
  for (const auto& d : dirs) observables.push_back(spin_observable(d.r, d.s, field));
  std::vector<ProductObservable> products;
  products.reserve(m * m);
  for (const auto& x : observables) {
    for (const auto& y : observables) products.push_back(product_observable(x, y));
  }

  std::optional<ChshResult> best;
  long long best_scaled = -1;
  BigInt best_scale = 1;
  std::vector<long long> corr(m * m);
  for (const auto& psi : states) {
    // Correlations share small denominators; scale them to integers for the sweep.
    std::vector<Rat> exact;
    exact.reserve(m * m);
    BigInt scale = 1;
    for (const auto& po : products) {
      exact.push_back(correlation(po, psi));
      scale = boost::multiprecision::lcm(scale, denominator_of(exact.back()));
    }
    for (std::size_t i = 0; i < exact.size(); ++i) {
      corr[i] = static_cast<long long>(numerator_of(exact[i]) * (scale / denominator_of(exact[i])));
    }
    std::array<std::size_t, 4> arg{};
    long long local = -1;
    long long local_signed = 0;
    for (std::size_t A = 0; A < m; ++A) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t B = 0; B < m; ++B) {
          const long long partial = corr[A * m + B] + corr[a * m + B];
          for (std::size_t b = 0; b < m; ++b) {
            const long long v = partial + corr[A * m + b] - corr[a * m + b];
            const long long mag = v < 0 ? -v : v;
            if (mag > local) {
              local = mag;
              local_signed = v;
              arg = {A, a, B, b};
            }
          }
        }
      }
    }
    // Compare local / scale against best_scaled / best_scale exactly.
    if (!best || BigInt(local) * best_scale > BigInt(best_scaled) * scale) {
      best = ChshResult{Rat(BigInt(local), scale), Rat(BigInt(local_signed), scale),
                        {dirs[arg[0]], dirs[arg[1]], dirs[arg[2]], dirs[arg[3]]}, psi};
      best_scaled = local;
      best_scale = scale;
    }
  }
  return *best;
}

}  // namespace gqm
