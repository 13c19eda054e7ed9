#pragma once

#include "gqm/measurement.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gqm {

/// Kronecker product; component i*dim(v) + j holds u_i v_j.
Vec kron(const Vec& u, const Vec& v);

/// A point of PG(3, q) viewed as a state of two two-level systems, with
/// components ordered |00>, |01>, |10>, |11> (index 2i + j).
class TwoSpinState {
 public:
  /// Canonicalizes; throws ShapeMismatch unless 4-dimensional, ZeroVector for 0.
  static TwoSpinState from_vector(Vec entries);

  const ProjVector& vector() const { return vector_; }
  /// psi_00 psi_11 - psi_01 psi_10 != 0, i.e. the 2x2 reshape is invertible.
  bool is_entangled() const { return entangled_; }

  friend bool operator==(const TwoSpinState& a, const TwoSpinState& b) { return a.vector_ == b.vector_; }

 private:
  TwoSpinState(ProjVector v, bool entangled) : vector_(std::move(v)), entangled_(entangled) {}

  ProjVector vector_;
  bool entangled_;
};

TwoSpinState tensor_ket(const ProjVector& u, const ProjVector& v);
DualVector tensor_bra(const DualVector& x, const DualVector& y);

struct TwoSpinCensus {
  std::vector<TwoSpinState> all;
  std::vector<TwoSpinState> product;
  std::vector<TwoSpinState> entangled;
};

/// Every point of PG(3, q), in enumerate_points order, split by entanglement.
TwoSpinCensus enumerate_two_spin_states(const Field& field);

/// |r>|s> - |s>|r> (a plus sign in characteristic 2). Throws DegenerateSinglet
/// for r == s.
TwoSpinState singlet(unsigned r, unsigned s, const Field& field);

/// |(<r| x <s|) S| for the singlet S = singlet(0, 1).
AbsValue singlet_bracket_rule(unsigned r, unsigned s, const Field& field);

struct OutcomePair {
  int first;
  int second;
  friend bool operator==(const OutcomePair&, const OutcomePair&) = default;
};

/// ++, +-, -+, -- in that order.
inline constexpr std::array<OutcomePair, 4> kOutcomePairs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

std::size_t outcome_pair_index(OutcomePair pair);

/// The four tensor duals of a product of two spin observables, in the
/// order ++, +-, -+, --.
class ProductObservable {
 public:
  struct Entry {
    DualVector dual;
    OutcomePair outcome;
  };

  ProductObservable(std::array<Entry, 4> entries, std::string first, std::string second)
      : entries_(std::move(entries)), first_(std::move(first)), second_(std::move(second)) {}

  const std::array<Entry, 4>& entries() const { return entries_; }
  std::string label() const { return first_ + " " + second_; }

 private:
  std::array<Entry, 4> entries_;
  std::string first_;
  std::string second_;
};

/// Throws BadObservable unless both factors are two-outcome observables with
/// outcome values +1 and -1 on two-dimensional spaces.
ProductObservable product_observable(const Observable& a, const Observable& b);

/// Probabilities of ++, +-, -+, --.
std::array<Rat, 4> joint_distribution(const ProductObservable& po, const TwoSpinState& psi);
Rat joint_probability(const ProductObservable& po, OutcomePair outcome, const TwoSpinState& psi);
Rat correlation(const ProductObservable& po, const TwoSpinState& psi);

/// <AB> + <Ab> + <aB> - <ab>; A, a act on the first spin, B, b on the second.
Rat chsh_value(const Observable& A, const Observable& a, const Observable& B, const Observable& b,
               const TwoSpinState& psi);

enum class Table1Pattern { Same, SharedFirst, Chained, Disjoint };

inline constexpr std::array<Table1Pattern, 4> kTable1Patterns{
    Table1Pattern::Same, Table1Pattern::SharedFirst, Table1Pattern::Chained, Table1Pattern::Disjoint};

/// "A_rs A_rs", "A_rs A_rt", "A_rs A_st", "A_rs A_tu".
std::string_view label(Table1Pattern pattern);

struct CorrelationRow {
  Table1Pattern pattern;
  std::array<Rat, 4> probs;  // ++, +-, -+, --
  Rat ev;
};

/// One pattern of the singlet correlation table. `row` is empty (RowSkipped)
/// when the field has too few points to choose the distinct indices.
struct Table1Entry {
  Table1Pattern pattern;
  std::optional<CorrelationRow> row;
  std::size_t assignments;  // distinct index assignments evaluated
};

/// Evaluates every distinct-index assignment of every pattern on the singlet
/// and throws InternalInvariantViolation if two assignments of one pattern
/// disagree.
std::vector<Table1Entry> table1(const Field& field);

/// A spin direction A_rs.
struct SpinDirection {
  unsigned r;
  unsigned s;
  friend bool operator==(const SpinDirection&, const SpinDirection&) = default;
};

/// All ordered directions (r, s), r != s, r outer.
std::vector<SpinDirection> spin_directions(const Field& field);

struct ChshResult {
  Rat max_abs;
  Rat value;                             // signed value at the witness
  std::array<SpinDirection, 4> witness;  // A, a, B, b
  TwoSpinState state;
};

/// Maximum of |chsh_value| over all ordered quadruples of spin observables and
/// all given states. Ties go to the first (state, A, a, B, b) in enumeration
/// order. Throws InvalidArgs for an empty state list.
ChshResult chsh_max(const Field& field, std::span<const TwoSpinState> states);

}  // namespace gqm
