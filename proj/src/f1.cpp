#include "gqm/f1.hpp"

#include "gqm/error.hpp"
#include "gqm/qcount.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gqm::f1 {

F1Element mul_f1(F1Element a, F1Element b) {
  return (a == F1Element::One && b == F1Element::One) ? F1Element::One : F1Element::Zero;
}

F1Element add_f1(F1Element a, F1Element b) {
  if (a == F1Element::Zero) return b;
  if (b == F1Element::Zero) return a;
  throw Error(ErrorKind::AdditionForbidden, "1 + 1 is not defined over F1");
}

F1Vector F1Vector::zero(std::size_t dim) { return F1Vector(dim, std::nullopt); }

F1Vector F1Vector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorKind::BadIndex, "basis index out of range");
  return F1Vector(dim, index);
}

F1Vector F1Vector::combination(const std::vector<F1Element>& coeffs) {
  F1Vector acc = zero(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == F1Element::One) acc = add(acc, basis(coeffs.size(), i));
  }
  return acc;
}

F1Element F1Vector::operator[](std::size_t i) const {
  if (i >= dim_) throw Error(ErrorKind::BadIndex, "entry index out of range");
  return support_ == i ? F1Element::One : F1Element::Zero;
}

std::vector<F1Element> F1Vector::entries() const {
  std::vector<F1Element> out(dim_, F1Element::Zero);
  if (support_) out[*support_] = F1Element::One;
  return out;
}

F1Vector add(const F1Vector& u, const F1Vector& v) {
  if (u.dim() != v.dim()) throw Error(ErrorKind::ShapeMismatch, "vector dimensions differ");
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  throw Error(ErrorKind::AdditionForbidden, "F1 vectors admit no superposition");
}

F1Vector tensor(const F1Vector& u, const F1Vector& v) {
  const std::size_t dim = u.dim() * v.dim();
  if (u.is_zero() || v.is_zero()) return F1Vector::zero(dim);
  return F1Vector::basis(dim, *u.support() * v.dim() + *v.support());
}

F1Element bracket(const F1Vector& x, const F1Vector& psi) {
  if (x.dim() != psi.dim()) throw Error(ErrorKind::ShapeMismatch, "bracket dimensions differ");
  F1Element sum = F1Element::Zero;
  for (std::size_t i = 0; i < x.dim(); ++i) sum = add_f1(sum, mul_f1(x[i], psi[i]));
  return sum;
}

F1Matrix F1Matrix::from_entries(const std::vector<std::vector<F1Element>>& rows) {
  std::vector<std::optional<std::size_t>> cols;
  cols.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::ShapeMismatch, "F1 matrices are square");
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != F1Element::One) continue;
      if (col) throw Error(ErrorKind::AdditionForbidden, "a row with two ones would add basis vectors");
      col = j;
    }
    cols.push_back(col);
  }
  return F1Matrix(std::move(cols));
}

F1Matrix F1Matrix::from_row_columns(std::vector<std::optional<std::size_t>> row_columns) {
  for (const auto& c : row_columns) {
    if (c && *c >= row_columns.size()) throw Error(ErrorKind::BadIndex, "column index out of range");
  }
  return F1Matrix(std::move(row_columns));
}

F1Matrix F1Matrix::identity(std::size_t n) {
  std::vector<std::optional<std::size_t>> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return F1Matrix(std::move(cols));
}

F1Matrix F1Matrix::permutation(const std::vector<std::size_t>& image) {
  std::vector<std::optional<std::size_t>> cols(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= image.size() || cols[image[i]]) throw Error(ErrorKind::InvalidArgs, "not a permutation");
    // Column i carries e_i to e_image[i], so row image[i] has its one in column i.
    cols[image[i]] = i;
  }
  return F1Matrix(std::move(cols));
}

F1Element F1Matrix::at(std::size_t row, std::size_t col) const {
  return rows_.at(row) == col ? F1Element::One : F1Element::Zero;
}

bool F1Matrix::is_automorphism() const {
  std::vector<bool> seen(rows_.size(), false);
  for (const auto& c : rows_) {
    if (!c || seen[*c]) return false;
    seen[*c] = true;
  }
  return true;
}

F1Vector f1_apply(const F1Matrix& m, const F1Vector& v) {
  if (m.size() != v.dim()) throw Error(ErrorKind::ShapeMismatch, "matrix and vector sizes differ");
  F1Vector out = F1Vector::zero(v.dim());
  for (std::size_t i = 0; i < m.size(); ++i) {
    F1Element entry = F1Element::Zero;
    for (std::size_t j = 0; j < m.size(); ++j) entry = add_f1(entry, mul_f1(m.at(i, j), v[j]));
    if (entry == F1Element::One) out = add(out, F1Vector::basis(v.dim(), i));
  }
  return out;
}

F1Matrix compose(const F1Matrix& a, const F1Matrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "matrix sizes differ");
  std::vector<std::optional<std::size_t>> cols(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto mid = a.row_columns()[i];
    if (mid) cols[i] = b.row_columns()[*mid];
  }
  return F1Matrix::from_row_columns(std::move(cols));
}

std::vector<F1Matrix> f1_automorphisms(std::size_t n) {
  if (n > kMaxAutomorphismDim) {
    throw Error(ErrorKind::TooLarge, "automorphism listing is capped at N = " + std::to_string(kMaxAutomorphismDim));
  }
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  std::vector<F1Matrix> out;
  do {
    out.push_back(F1Matrix::permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

bool is_group(const std::vector<F1Matrix>& elements) {
  if (elements.empty()) return false;
  const std::set<F1Matrix> members(elements.begin(), elements.end());
  const auto id = F1Matrix::identity(elements.front().size());
  if (!members.contains(id)) return false;
  for (const auto& a : elements) {
    bool has_inverse = false;
    for (const auto& b : elements) {
      if (!members.contains(compose(a, b))) return false;
      if (compose(a, b) == id && compose(b, a) == id) has_inverse = true;
    }
    if (!has_inverse) return false;
  }
  return true;
}

F1Geometry pg_n_1(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgs, "PG(N-1, 1) needs N >= 1");
  F1Geometry geom{n, {}};
  geom.subspaces.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    // (k+1)-subsets in lexicographic order via a selection mask.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k + 1), true);
    do {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) subset.push_back(i);
      }
      geom.subspaces[k].push_back(std::move(subset));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return geom;
}

std::vector<Rat> f1_distribution(const std::vector<F1Outcome>& observable, const F1Vector& psi) {
  std::vector<int> weight;
  int total = 0;
  for (const auto& o : observable) {
    weight.push_back(bracket(o.dual, psi) == F1Element::One ? 1 : 0);
    total += weight.back();
  }
  if (total == 0) throw Error(ErrorKind::InternalInvariantViolation, "all brackets vanish");
  std::vector<Rat> out;
  for (int w : weight) out.emplace_back(w, total);
  return out;
}

Rat f1_expectation(const std::vector<F1Outcome>& observable, const F1Vector& psi) {
  const auto probs = f1_distribution(observable, psi);
  Rat ev = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) ev += observable[i].value * probs[i];
  return ev;
}

F1Vector Q1SpinModel::superpose() const { return add(up.vector, down.vector); }

Q1SpinModel q1_spin_model() {
  const auto up = F1Vector::basis(2, 0);
  const auto down = F1Vector::basis(2, 1);
  // <up| = [1 0], <down| = [0 1]; as rows they coincide with the kets' entries.
  return Q1SpinModel{{"up", up}, {"down", down}, {{up, Rat(1), "up"}, {down, Rat(-1), "down"}}};
}

Q1TwoSpinModel q1_two_spin_model() {
  const auto single = q1_spin_model();
  Q1TwoSpinModel model;
  for (const auto& a : single.states()) {
    for (const auto& b : single.states()) {
      model.states.push_back({a.name + "," + b.name, tensor(a.vector, b.vector)});
    }
  }
  for (const auto& a : single.observable) {
    for (const auto& b : single.observable) {
      const int va = a.value > 0 ? 1 : -1;
      const int vb = b.value > 0 ? 1 : -1;
      model.observable.push_back({tensor(a.dual, b.dual), Rat(va * vb), a.name + "," + b.name});
      model.outcome_pairs.emplace_back(va, vb);
    }
  }
  // A state of F1^4 has one nonzero entry, so its 2x2 reshape is never invertible.
  model.entangled_count = 0;
  for (const auto& s : model.states) {
    const auto e = s.vector.entries();
    if (mul_f1(e[0], e[3]) == F1Element::One || mul_f1(e[1], e[2]) == F1Element::One) ++model.entangled_count;
  }
  return model;
}

std::optional<std::size_t> Q1TwoSpinModel::definite_outcome(const F1Vector& state) const {
  const auto probs = f1_distribution(observable, state);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] == 1) return i;
  }
  return std::nullopt;
}

Rat Q1TwoSpinModel::chsh_bound() const {
  // The only observables are A and -A = A with the outcome values swapped.
  auto correlation = [&](int sign_first, int sign_second, const F1Vector& psi) {
    const auto probs = f1_distribution(observable, psi);
    Rat ev = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      ev += sign_first * outcome_pairs[i].first * sign_second * outcome_pairs[i].second * probs[i];
    }
    return ev;
  };
  Rat best = 0;
  const int signs[] = {1, -1};
  for (const auto& s : states) {
    for (int A : signs) {
      for (int a : signs) {
        for (int B : signs) {
          for (int b : signs) {
            Rat v = correlation(A, B, s.vector) + correlation(A, b, s.vector) + correlation(a, B, s.vector) -
                    correlation(a, b, s.vector);
            if (v < 0) v = -v;
            if (v > best) best = v;
          }
        }
      }
    }
  }
  return best;
}

std::vector<ReportCheck> q1_consistency_report(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgs, "consistency report needs N >= 2");
  std::vector<ReportCheck> out;
  auto check = [&](std::string name, const BigInt& expected, const BigInt& actual) {
    out.push_back({std::move(name), expected.str(), actual.str(), expected == actual});
  };
  const auto N = static_cast<unsigned>(n);

  const auto geom = pg_n_1(n);
  check("points of PG(N-1,1) = [N]_1", q_int(N, 1), BigInt(geom.points));

  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!F1Vector::basis(n, i).is_zero()) ++nonzero;
  }
  check("nonzero vectors of F1^N = [N]_1", q_int(N, 1), BigInt(nonzero));

  const auto autos = f1_automorphisms(n);
  check("|PGL(N,1)| = [N]_1!", q_factorial(N, 1), BigInt(autos.size()));
  const bool all_perm = std::all_of(autos.begin(), autos.end(), [](const F1Matrix& m) { return m.is_automorphism(); });
  out.push_back({"automorphisms form a group", "true", is_group(autos) && all_perm ? "true" : "false",
                 is_group(autos) && all_perm});

  for (std::size_t k = 0; k < n; ++k) {
    const auto& subs = geom.subspaces[k];
    check(std::to_string(k) + "-subspaces = [N choose k+1]_1", gaussian_binomial(N, static_cast<unsigned>(k + 1), 1),
          BigInt(subs.size()));
    const bool sizes_ok = std::all_of(subs.begin(), subs.end(), [&](const auto& s) {
      return BigInt(s.size()) == points_per_subspace(static_cast<int>(k), 1);
    });
    out.push_back({std::to_string(k) + "-subspaces have [k+1]_1 points", "true", sizes_ok ? "true" : "false",
                   sizes_ok});
  }

  // Observables are orderings of the coordinate dual basis; give outcome i the value i+1.
  bool classical = true;
  for (const auto& perm : autos) {
    std::vector<F1Outcome> obs;
    for (std::size_t i = 0; i < n; ++i) {
      obs.push_back({F1Vector::basis(n, *perm.row_columns()[i]), Rat(static_cast<long long>(i + 1)),
                     std::to_string(i)});
    }
    for (std::size_t i = 0; i < n && classical; ++i) {
      const auto probs = f1_distribution(obs, F1Vector::basis(n, i));
      classical = std::count(probs.begin(), probs.end(), Rat(1)) == 1;
    }
  }
  out.push_back({"every state is an eigenstate of every observable", "true", classical ? "true" : "false",
                 classical});
  return out;
}

}  // namespace gqm::f1
