#pragma once

#include "gqm/gf.hpp"

#include <span>
#include <string>
#include <vector>

namespace gqm {

using Vec = std::vector<FieldElement>;

/// A point of PG(N-1, q): a nonzero column vector scaled so that its last
/// nonzero entry is 1.
class ProjVector {
 public:
  /// Throws ZeroVector for an all-zero (or empty) input.
  static ProjVector canonicalize(Vec entries);

  const Vec& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }
  const Field& field() const { return entries_.front().field(); }
  const FieldElement& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const ProjVector&, const ProjVector&) = default;

 private:
  explicit ProjVector(Vec entries) : entries_(std::move(entries)) {}
  Vec entries_;
};

/// A nonzero row vector, stored exactly as given so that the labelled bras
/// keep their printed form. Use canonical() or projective_equal for
/// label-free comparison.
class DualVector {
 public:
  /// Throws ZeroVector for an all-zero (or empty) input.
  static DualVector make(Vec entries);

  const Vec& entries() const { return entries_; }
  std::size_t dim() const { return entries_.size(); }
  const Field& field() const { return entries_.front().field(); }
  const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
  Vec canonical() const;

  friend bool operator==(const DualVector&, const DualVector&) = default;

 private:
  explicit DualVector(Vec entries) : entries_(std::move(entries)) {}
  Vec entries_;
};

/// Scales by the inverse of the last nonzero entry. Throws ZeroVector.
Vec canonical_form(const Vec& v);

bool projective_equal(const ProjVector& u, const ProjVector& v);
bool projective_equal(const DualVector& u, const DualVector& v);

/// c * v, entrywise.
Vec scale(const FieldElement& c, const Vec& v);

/// All points of PG(N-1, q), ordered by the position of the last nonzero
/// entry and then by the codes of the free (earlier) entries, the first entry
/// most significant.
std::vector<ProjVector> enumerate_points(unsigned N, const Field& field);

/// Kets of the two-level model: |0> = [1,0], |1> = [0,1], |r> = [g^(r-1), 1]
/// for 2 <= r <= q, g the field generator. Throws BadIndex for r > q.
ProjVector ket(unsigned r, const Field& field);

/// Bras of the two-level model: <0| = [0,-1], <1| = [1,0],
/// <r| = [1, -g^(r-1)]. Throws BadIndex for r > q.
DualVector bra(unsigned r, const Field& field);

/// sum_i x_i psi_i. Throws ShapeMismatch or FieldMismatch.
FieldElement bracket(const DualVector& x, const ProjVector& psi);
FieldElement bracket(const Vec& x, const Vec& psi);

/// True iff the N x N matrix of the rows is invertible. Throws BadBasis when
/// the number of rows differs from their length.
bool is_dual_basis(std::span<const DualVector> basis);

/// Rank of a row list over its field (exact Gaussian elimination).
std::size_t rank(std::vector<Vec> rows);

std::string to_string(const Vec& v);

}  // namespace gqm
