#include "gqm/measurement.hpp"

#include "gqm/error.hpp"

namespace gqm {

AbsValue abs_map(const FieldElement& k) { return k.is_zero() ? AbsValue::Zero : AbsValue::One; }

AbsValue operator*(AbsValue a, AbsValue b) {
  return (a == AbsValue::One && b == AbsValue::One) ? AbsValue::One : AbsValue::Zero;
}

Observable Observable::make(std::vector<Outcome> outcomes, std::string name) {
  std::vector<DualVector> duals;
  duals.reserve(outcomes.size());
  for (const auto& o : outcomes) duals.push_back(o.dual);
  if (!is_dual_basis(duals)) throw Error(ErrorKind::BadBasis, "outcome duals of " + name + " are not a basis");
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
      if (outcomes[i].value == outcomes[j].value) {
        throw Error(ErrorKind::DegenerateObservable, "repeated outcome value in " + name);
      }
    }
  }
  return Observable(std::move(outcomes), std::move(name));
}

std::size_t Observable::index_of(const DualVector& x) const {
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    if (outcomes_[i].dual == x) return i;
  }
  throw Error(ErrorKind::OutcomeNotInObservable, to_string(x.entries()) + " is not an outcome of " + name_);
}

std::vector<Rat> distribution(std::span<const Vec> duals, const Vec& psi) {
  std::vector<int> weight;
  weight.reserve(duals.size());
  int total = 0;
  for (const auto& y : duals) {
    weight.push_back(to_int(abs_map(bracket(y, psi))));
    total += weight.back();
  }
  // A basis always has some dual with nonzero bracket against a nonzero vector.
  if (total == 0) throw Error(ErrorKind::InternalInvariantViolation, "all brackets vanish");
  std::vector<Rat> out;
  out.reserve(weight.size());
  for (int w : weight) out.emplace_back(w, total);
  return out;
}

std::vector<Rat> distribution(const Observable& obs, const ProjVector& psi) {
  std::vector<Vec> duals;
  duals.reserve(obs.dim());
  for (const auto& o : obs.outcomes()) duals.push_back(o.dual.entries());
  return distribution(duals, psi.entries());
}

Rat probability(const DualVector& x, const Observable& obs, const ProjVector& psi) {
  return distribution(obs, psi)[obs.index_of(x)];
}

Observable spin_observable(unsigned r, unsigned s, const Field& field) {
  if (r == s) throw Error(ErrorKind::DegenerateObservable, "A_rs needs r != s");
  return Observable::make({{bra(r, field), Rat(1)}, {bra(s, field), Rat(-1)}},
                          "A_" + std::to_string(r) + "," + std::to_string(s));
}

Rat expectation(const Observable& obs, const ProjVector& psi) {
  const auto probs = distribution(obs, psi);
  Rat ev = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) ev += obs.outcomes()[i].value * probs[i];
  return ev;
}

std::vector<Eigenstate> eigenstates(const Observable& obs, std::span<const ProjVector> states) {
  std::vector<Eigenstate> out;
  for (const auto& psi : states) {
    const auto probs = distribution(obs, psi);
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] == 1) {
        out.push_back({psi, obs.outcomes()[i].value});
        break;
      }
    }
  }
  return out;
}

}  // namespace gqm
