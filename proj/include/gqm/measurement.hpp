#pragma once

#include "gqm/projective.hpp"
#include "gqm/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace gqm {

/// The 0/1 "absolute value" of a field element.
enum class AbsValue : int { Zero = 0, One = 1 };

AbsValue abs_map(const FieldElement& k);
AbsValue operator*(AbsValue a, AbsValue b);
inline int to_int(AbsValue a) { return static_cast<int>(a); }

struct Outcome {
  DualVector dual;
  Rat value;
};

/// A dual basis with a distinct real outcome value attached to each member.
class Observable {
 public:
  /// Throws BadBasis if the duals do not form a basis, DegenerateObservable if
  /// two outcome values coincide.
  static Observable make(std::vector<Outcome> outcomes, std::string name);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return outcomes_.size(); }
  const Field& field() const { return outcomes_.front().dual.field(); }

  /// Index of x among the outcomes; throws OutcomeNotInObservable.
  std::size_t index_of(const DualVector& x) const;

 private:
  Observable(std::vector<Outcome> outcomes, std::string name)
      : outcomes_(std::move(outcomes)), name_(std::move(name)) {}

  std::vector<Outcome> outcomes_;
  std::string name_;
};

/// |<x|psi>| divided by the sum of |<y|psi>| over the observable's basis.
Rat probability(const DualVector& x, const Observable& obs, const ProjVector& psi);

/// Probabilities of all outcomes, in the observable's order.
std::vector<Rat> distribution(const Observable& obs, const ProjVector& psi);

/// Probabilities for an explicit basis of duals, applied to a raw vector.
/// Used by the composite system, whose duals are tensor products.
std::vector<Rat> distribution(std::span<const Vec> duals, const Vec& psi);

/// A_rs = {(<r|, +1), (<s|, -1)}. Throws DegenerateObservable for r == s.
Observable spin_observable(unsigned r, unsigned s, const Field& field);

Rat expectation(const Observable& obs, const ProjVector& psi);

struct Eigenstate {
  ProjVector state;
  Rat value;
};

/// States on which exactly one outcome has probability 1, with that outcome.
std::vector<Eigenstate> eigenstates(const Observable& obs, std::span<const ProjVector> states);

}  // namespace gqm
