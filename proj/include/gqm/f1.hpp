#pragma once

#include "gqm/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gqm::f1 {

/// The multiplicative monoid {0, 1}. There is no addition beyond adding 0.
enum class F1Element : unsigned char { Zero = 0, One = 1 };

F1Element mul_f1(F1Element a, F1Element b);

/// Returns the other operand when one is Zero; 1 + 1 throws AdditionForbidden.
F1Element add_f1(F1Element a, F1Element b);

/// A vector of F1^N: a basis vector e_i or the zero vector. Nothing else is
/// constructible.
class F1Vector {
 public:
  static F1Vector zero(std::size_t dim);
  /// Throws BadIndex for index >= dim.
  static F1Vector basis(std::size_t dim, std::size_t index);
  /// sum_i c_i e_i; throws AdditionForbidden when two coefficients are One.
  static F1Vector combination(const std::vector<F1Element>& coeffs);

  std::size_t dim() const { return dim_; }
  std::optional<std::size_t> support() const { return support_; }
  bool is_zero() const { return !support_; }
  F1Element operator[](std::size_t i) const;
  std::vector<F1Element> entries() const;

  friend bool operator==(const F1Vector&, const F1Vector&) = default;

 private:
  F1Vector(std::size_t dim, std::optional<std::size_t> support) : dim_(dim), support_(support) {}

  std::size_t dim_;
  std::optional<std::size_t> support_;
};

/// u + v, allowed only when one side is zero (AdditionForbidden otherwise).
F1Vector add(const F1Vector& u, const F1Vector& v);

/// Kronecker product e_i (x) e_j = e_(i*dim(v) + j).
F1Vector tensor(const F1Vector& u, const F1Vector& v);

/// Sum_i x_i psi_i, evaluated with add_f1.
F1Element bracket(const F1Vector& x, const F1Vector& psi);

/// An N x N matrix with at most one One per row, stored as the column of
/// each row's One.
class F1Matrix {
 public:
  /// Throws AdditionForbidden if a row holds more than one One, ShapeMismatch
  /// for a non-square input.
  static F1Matrix from_entries(const std::vector<std::vector<F1Element>>& rows);
  /// Throws BadIndex for a column index >= size.
  static F1Matrix from_row_columns(std::vector<std::optional<std::size_t>> row_columns);
  static F1Matrix identity(std::size_t n);
  /// Permutation matrix sending e_i to e_(image[i]). Throws InvalidArgs unless
  /// image is a permutation.
  static F1Matrix permutation(const std::vector<std::size_t>& image);

  std::size_t size() const { return rows_.size(); }
  const std::vector<std::optional<std::size_t>>& row_columns() const { return rows_; }
  F1Element at(std::size_t row, std::size_t col) const;
  /// Exactly one One in every row and every column.
  bool is_automorphism() const;

  friend bool operator==(const F1Matrix&, const F1Matrix&) = default;
  friend auto operator<=>(const F1Matrix&, const F1Matrix&) = default;

 private:
  explicit F1Matrix(std::vector<std::optional<std::size_t>> rows) : rows_(std::move(rows)) {}
  std::vector<std::optional<std::size_t>> rows_;
};

/// M v. Throws ShapeMismatch.
F1Vector f1_apply(const F1Matrix& m, const F1Vector& v);

/// Matrix product a * b. Throws ShapeMismatch.
F1Matrix compose(const F1Matrix& a, const F1Matrix& b);

inline constexpr std::size_t kMaxAutomorphismDim = 8;

/// The N! permutation matrices, ordered by the lexicographic order of their
/// permutations. Throws TooLarge for N > kMaxAutomorphismDim.
std::vector<F1Matrix> f1_automorphisms(std::size_t n);

/// Closure, identity and inverses within the given list.
bool is_group(const std::vector<F1Matrix>& elements);

/// PG(N-1, 1): N points, and for each k the (k+1)-element subsets.
struct F1Geometry {
  std::size_t points;
  /// subspaces[k] lists the k-dimensional subspaces as sorted point indices.
  std::vector<std::vector<std::vector<std::size_t>>> subspaces;
};

/// Throws InvalidArgs for N = 0.
F1Geometry pg_n_1(std::size_t n);

struct F1Outcome {
  F1Vector dual;
  Rat value;
  std::string name;
};

/// Outcome probabilities in the q = 1 model: the absolute value of each
/// bracket (0 or 1) normalized over the basis.
std::vector<Rat> f1_distribution(const std::vector<F1Outcome>& observable, const F1Vector& psi);
Rat f1_expectation(const std::vector<F1Outcome>& observable, const F1Vector& psi);

struct NamedState {
  std::string name;
  F1Vector vector;
};

/// The two-level system at q = 1.
struct Q1SpinModel {
  NamedState up;    // [1, 0]
  NamedState down;  // [0, 1]
  std::vector<F1Outcome> observable;  // A = {(<up|, +1), (<down|, -1)}

  std::vector<NamedState> states() const { return {up, down}; }
  /// |up> + |down>; always throws AdditionForbidden.
  F1Vector superpose() const;
};

Q1SpinModel q1_spin_model();

struct Q1TwoSpinModel {
  std::vector<NamedState> states;  // up-up, up-down, down-up, down-down
  /// AA: the four tensor duals with outcome pairs ++, +-, -+, --; the outcome
  /// value stored is the product of the pair.
  std::vector<F1Outcome> observable;
  std::vector<std::pair<int, int>> outcome_pairs;
  std::size_t entangled_count;

  /// Index of the outcome with probability 1 on the state, if any.
  std::optional<std::size_t> definite_outcome(const F1Vector& state) const;
  /// Max |<AB> + <Ab> + <aB> - <ab>| with A, a, B, b ranging over the
  /// surviving observables A and -A, maximized over all states.
  Rat chsh_bound() const;
};

Q1TwoSpinModel q1_two_spin_model();

struct ReportCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

/// Compares the F1 constructions with the q = 1 values of the q-analog
/// formulas: point count, automorphism group order, subspace counts, and
/// that every point is an eigenstate of every coordinate observable.
std::vector<ReportCheck> q1_consistency_report(std::size_t n);

}  // namespace gqm::f1
