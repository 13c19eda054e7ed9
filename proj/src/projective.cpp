#include "gqm/projective.hpp"

#include "gqm/error.hpp"

#include <algorithm>

namespace gqm {

namespace {

void require_nonzero(const Vec& v) {
  if (v.empty() || std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw Error(ErrorKind::ZeroVector, "the zero vector is not a projective point");
  }
}

void require_compatible(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ShapeMismatch,
                "dimension " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (!a.empty() && !a.front().field().same_as(b.front().field())) {
    throw Error(ErrorKind::FieldMismatch, "vectors over different fields");
  }
}

}  // namespace

Vec canonical_form(const Vec& v) {
  require_nonzero(v);
  auto last = std::find_if(v.rbegin(), v.rend(), [](const FieldElement& x) { return !x.is_zero(); });
  return scale(last->inv(), v);
}

Vec scale(const FieldElement& c, const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

ProjVector ProjVector::canonicalize(Vec entries) { return ProjVector(canonical_form(entries)); }

DualVector DualVector::make(Vec entries) {
  require_nonzero(entries);
  return DualVector(std::move(entries));
}

Vec DualVector::canonical() const { return canonical_form(entries_); }

bool projective_equal(const ProjVector& u, const ProjVector& v) {
  require_compatible(u.entries(), v.entries());
  return u.entries() == v.entries();
}

bool projective_equal(const DualVector& u, const DualVector& v) {
  require_compatible(u.entries(), v.entries());
  return u.canonical() == v.canonical();
}

std::vector<ProjVector> enumerate_points(unsigned N, const Field& field) {
  std::vector<ProjVector> out;
  const auto elems = field.elements();
  const std::uint32_t q = field.order();
  for (unsigned lead = 0; lead < N; ++lead) {
    // lead free entries precede the trailing 1; iterate them first-most-significant.
    std::uint64_t count = 1;
    for (unsigned i = 0; i < lead; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      Vec v(N, field.zero());
      std::uint64_t rest = t;
      for (unsigned i = lead; i-- > 0;) {
        v[i] = elems[rest % q];
        rest /= q;
      }
      v[lead] = field.one();
      out.push_back(ProjVector::canonicalize(std::move(v)));
    }
  }
  return out;
}

ProjVector ket(unsigned r, const Field& field) {
  if (r > field.order()) throw Error(ErrorKind::BadIndex, "ket index " + std::to_string(r) + " > q");
  if (r == 0) return ProjVector::canonicalize({field.one(), field.zero()});
  if (r == 1) return ProjVector::canonicalize({field.zero(), field.one()});
  return ProjVector::canonicalize({field.exp(r - 1), field.one()});
}

DualVector bra(unsigned r, const Field& field) {
  if (r > field.order()) throw Error(ErrorKind::BadIndex, "bra index " + std::to_string(r) + " > q");
  if (r == 0) return DualVector::make({field.zero(), signed_coefficient(-1, field.one())});
  if (r == 1) return DualVector::make({field.one(), field.zero()});
  return DualVector::make({field.one(), signed_coefficient(-1, field.exp(r - 1))});
}

FieldElement bracket(const Vec& x, const Vec& psi) {
  require_compatible(x, psi);
  FieldElement sum = x.front().field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * psi[i];
  return sum;
}

FieldElement bracket(const DualVector& x, const ProjVector& psi) { return bracket(x.entries(), psi.entries()); }

std::size_t rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                              [c](const Vec& row) { return !row[c].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), pivot);
    const FieldElement inv = rows[r][c].inv();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool is_dual_basis(std::span<const DualVector> basis) {
  if (basis.empty()) throw Error(ErrorKind::BadBasis, "empty basis");
  const std::size_t n = basis.front().dim();
  if (basis.size() != n) {
    throw Error(ErrorKind::BadBasis,
                std::to_string(basis.size()) + " dual vectors for dimension " + std::to_string(n));
  }
  std::vector<Vec> rows;
  rows.reserve(n);
  for (const auto& b : basis) {
    require_compatible(basis.front().entries(), b.entries());
    rows.push_back(b.entries());
  }
  return rank(std::move(rows)) == n;
}

std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_poly_string(v[i]);
  }
  return out + "]";
}

}  // namespace gqm
