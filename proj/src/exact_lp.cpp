#include "exact_lp.hpp"

#include "gqm/error.hpp"

#include <optional>

namespace gqm::detail {

namespace {

// Signs of Y.A_j for structural columns. Y is integral, so the int64 path
// is exact whenever every |Y_k| * (column length) stays far from overflow.
class Pricer {
 public:
  explicit Pricer(const std::vector<BigInt>& y) : y_(y) {
    const BigInt limit = BigInt(1) << 40;
    for (const auto& v : y) {
      if (boost::multiprecision::abs(v) >= limit) return;
    }
    fast_.reserve(y.size());
    for (const auto& v : y) fast_.push_back(static_cast<long long>(v));
  }

  bool improves(const std::vector<std::uint32_t>& column) const {
    if (!fast_.empty()) {
      long long sum = 0;
      for (auto r : column) sum += fast_[r];
      return sum > 0;
    }
    BigInt sum = 0;
    for (auto r : column) sum += y_[r];
    return sum > 0;
  }

 private:
  const std::vector<BigInt>& y_;
  std::vector<long long> fast_;
};

}  // namespace

// The basis inverse is kept fraction-free: B^-1 = M / d and x_B = X / d with
// M, X integral and d = |det B| > 0. A pivot on row l with U = M a_j gives
// d' = |U_l|, M'_l = sign(U_l) M_l and M'_i = sign(U_l) (U_l M_i - U_i M_l) / d,
// where the division is exact (Bareiss).
NonnegativeCombination solve_nonnegative_combination(std::size_t rows,
                                                     std::span<const std::vector<std::uint32_t>> columns,
                                                     std::span<const Rat> b) {
  if (b.size() != rows) throw Error(ErrorKind::ShapeMismatch, "right-hand side length");
  for (const auto& v : b) {
    if (v < 0) throw Error(ErrorKind::InvalidArgs, "right-hand side must be nonnegative");
  }
  for (const auto& col : columns) {
    for (auto r : col) {
      if (r >= rows) throw Error(ErrorKind::ShapeMismatch, "column row index out of range");
    }
  }

  const std::size_t m = rows;
  const std::size_t n = columns.size();

  // Scale b to integers; the scale cancels in every decision and is divided
  // back out of x.
  BigInt b_scale = 1;
  for (const auto& v : b) b_scale = boost::multiprecision::lcm(b_scale, denominator_of(v));

  // Variables 0..n-1 are structural, n+i is the artificial of row i.
  std::vector<std::size_t> basis(m);
  std::vector<bool> basic(n + m, false);
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = n + i;
    basic[n + i] = true;
  }
  std::vector<BigInt> M(m * m, BigInt(0));
  for (std::size_t i = 0; i < m; ++i) M[i * m + i] = 1;
  BigInt d = 1;
  std::vector<BigInt> X(m);
  for (std::size_t i = 0; i < m; ++i) X[i] = numerator_of(b[i]) * (b_scale / denominator_of(b[i]));

  // Phase-one duals, scaled by d: Y = sum of the M rows of artificial basics.
  std::vector<BigInt> Y(m);
  auto compute_duals = [&] {
    for (auto& v : Y) v = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (!M[i * m + k].is_zero()) Y[k] += M[i * m + k];
      }
    }
  };

  std::vector<BigInt> U(m);
  for (;;) {
    compute_duals();
    const Pricer pricer(Y);
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < n + m && !entering; ++j) {
      if (basic[j]) continue;
      // An artificial's reduced cost is 1 - y_k.
      const bool improving = j < n ? pricer.improves(columns[j]) : Y[j - n] > d;
      if (improving) entering = j;
    }
    if (!entering) break;

    const std::size_t j = *entering;
    for (std::size_t i = 0; i < m; ++i) {
      if (j < n) {
        BigInt acc = 0;
        for (auto r : columns[j]) {
          if (!M[i * m + r].is_zero()) acc += M[i * m + r];
        }
        U[i] = std::move(acc);
      } else {
        U[i] = M[i * m + (j - n)];
      }
    }

    // Bland's ratio test: min X_i / U_i over U_i > 0, ties to the smallest
    // basic variable index.
    std::optional<std::size_t> leave;
    for (std::size_t i = 0; i < m; ++i) {
      if (U[i] <= 0) continue;
      if (!leave) {
        leave = i;
        continue;
      }
      const BigInt lhs = X[i] * U[*leave];
      const BigInt rhs = X[*leave] * U[i];
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[*leave])) leave = i;
    }
    // Phase one is bounded below by zero.
    if (!leave) throw Error(ErrorKind::InternalInvariantViolation, "phase one reported unbounded");

    const std::size_t l = *leave;
    const BigInt pivot = U[l];  // > 0 by the ratio test
    for (std::size_t i = 0; i < m; ++i) {
      if (i == l) continue;
      BigInt* row = &M[i * m];
      const BigInt* prow = &M[l * m];
      if (U[i].is_zero()) {
        for (std::size_t k = 0; k < m; ++k) {
          if (!row[k].is_zero()) row[k] = row[k] * pivot / d;
        }
        X[i] = X[i] * pivot / d;
      } else {
        for (std::size_t k = 0; k < m; ++k) {
          if (row[k].is_zero() && prow[k].is_zero()) continue;
          row[k] = (pivot * row[k] - U[i] * prow[k]) / d;
        }
        X[i] = (pivot * X[i] - U[i] * X[l]) / d;
      }
    }
    d = pivot;
    basic[basis[l]] = false;
    basis[l] = j;
    basic[j] = true;
  }

  bool zero_objective = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n && !X[i].is_zero()) zero_objective = false;
  }

  NonnegativeCombination out;
  if (zero_objective) {
    out.feasible = true;
    out.x.assign(n, Rat(0));
    const BigInt denom = d * b_scale;
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) out.x[basis[i]] = make_rat(X[i], denom);
    }
  } else {
    out.feasible = false;
    out.separator.reserve(m);
    for (const auto& v : Y) out.separator.push_back(make_rat(v, d));
  }
  return out;
}

}  // namespace gqm::detail
