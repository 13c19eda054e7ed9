#include "gqm/f1.hpp"

#include "gqm/qcount.hpp"
#include "support.hpp"

#include <random>

using namespace gqm;
using namespace gqm::f1;

TEST(F1, MonoidOperations) {
  EXPECT_EQ(mul_f1(F1Element::One, F1Element::One), F1Element::One);
  EXPECT_EQ(mul_f1(F1Element::One, F1Element::Zero), F1Element::Zero);
  EXPECT_EQ(add_f1(F1Element::Zero, F1Element::One), F1Element::One);
  EXPECT_EQ(add_f1(F1Element::Zero, F1Element::Zero), F1Element::Zero);
  EXPECT_GQM_ERROR(add_f1(F1Element::One, F1Element::One), AdditionForbidden);
}

TEST(F1, VectorsHoldAtMostOneOne) {
  EXPECT_TRUE(F1Vector::zero(3).is_zero());
  const auto e1 = F1Vector::basis(3, 1);
  EXPECT_EQ(e1.support(), 1u);
  EXPECT_EQ(e1[1], F1Element::One);
  EXPECT_GQM_ERROR(F1Vector::basis(3, 3), BadIndex);
  EXPECT_EQ(F1Vector::combination({F1Element::Zero, F1Element::Zero, F1Element::One}), F1Vector::basis(3, 2));
  EXPECT_GQM_ERROR(F1Vector::combination({F1Element::One, F1Element::One}), AdditionForbidden);
  EXPECT_GQM_ERROR(add(F1Vector::basis(2, 0), F1Vector::basis(2, 1)), AdditionForbidden);
  EXPECT_EQ(add(F1Vector::basis(2, 0), F1Vector::zero(2)), F1Vector::basis(2, 0));
}

TEST(F1, TensorAndBracket) {
  EXPECT_EQ(tensor(F1Vector::basis(2, 1), F1Vector::basis(2, 0)), F1Vector::basis(4, 2));
  EXPECT_EQ(bracket(F1Vector::basis(3, 2), F1Vector::basis(3, 2)), F1Element::One);
  EXPECT_EQ(bracket(F1Vector::basis(3, 0), F1Vector::basis(3, 2)), F1Element::Zero);
}

TEST(F1, Matrices) {
  using E = F1Element;
  EXPECT_GQM_ERROR(F1Matrix::from_entries({{E::One, E::One}, {E::Zero, E::Zero}}), AdditionForbidden);
  EXPECT_GQM_ERROR(F1Matrix::from_entries({{E::One, E::Zero}}), ShapeMismatch);
  const auto swap = F1Matrix::permutation({1, 0});
  EXPECT_TRUE(swap.is_automorphism());
  EXPECT_EQ(f1_apply(swap, F1Vector::basis(2, 0)), F1Vector::basis(2, 1));
  EXPECT_EQ(compose(swap, swap), F1Matrix::identity(2));
  const auto collapse = F1Matrix::from_row_columns({0, std::nullopt});
  EXPECT_FALSE(collapse.is_automorphism());
  EXPECT_GQM_ERROR(F1Matrix::permutation({0, 0}), InvalidArgs);
  EXPECT_GQM_ERROR(f1_apply(swap, F1Vector::basis(3, 0)), ShapeMismatch);
}

TEST(F1, AutomorphismGroups) {
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    fact *= n;
    const auto g = f1_automorphisms(n);
    EXPECT_EQ(g.size(), fact);
    EXPECT_EQ(BigInt(g.size()), q_factorial(n, 1));
    EXPECT_TRUE(is_group(g));
    EXPECT_EQ(g.front(), F1Matrix::identity(n));
  }
  EXPECT_GQM_ERROR(f1_automorphisms(kMaxAutomorphismDim + 1), TooLarge);
}

TEST(F1, IsGroupRejectsIncompleteSets) {
  auto g = f1_automorphisms(3);
  g.pop_back();
  EXPECT_FALSE(is_group(g));
}

TEST(F1, GeometryDegeneratesFromGaussianBinomials) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto geo = pg_n_1(n);
    EXPECT_EQ(geo.points, n);
    ASSERT_EQ(geo.subspaces.size(), n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_EQ(BigInt(geo.subspaces[k].size()), gaussian_binomial(n, k + 1, 1));
      for (const auto& sub : geo.subspaces[k]) EXPECT_EQ(BigInt(sub.size()), points_per_subspace(k, 1));
    }
  }
  EXPECT_GQM_ERROR(pg_n_1(0), InvalidArgs);
}

TEST(Q1Spin, TwoClassicalStates) {
  const auto m = q1_spin_model();
  EXPECT_EQ(m.states().size(), 2u);
  EXPECT_EQ(f1_expectation(m.observable, m.up.vector), 1);
  EXPECT_EQ(f1_expectation(m.observable, m.down.vector), -1);
  for (const auto& st : m.states()) {
    const auto p = f1_distribution(m.observable, st.vector);
    EXPECT_TRUE(p[0] == 1 || p[1] == 1);
  }
  EXPECT_GQM_ERROR(m.superpose(), AdditionForbidden);
}

TEST(Q1TwoSpin, NoEntanglementAndClassicalBound) {
  const auto m = q1_two_spin_model();
  EXPECT_EQ(m.states.size(), 4u);
  EXPECT_EQ(m.entangled_count, 0u);
  for (std::size_t k = 0; k < m.states.size(); ++k) {
    const auto idx = m.definite_outcome(m.states[k].vector);
    ASSERT_TRUE(idx.has_value());
    EXPECT_EQ(*idx, k);
  }
  EXPECT_EQ(m.chsh_bound(), 2);
}

TEST(Q1Report, PassesUpToSix) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& c : q1_consistency_report(n)) EXPECT_TRUE(c.pass) << n << ": " << c.name << " " << c.actual;
}

TEST(F1Property, NoSuperpositionUnderRandomMaps) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<std::optional<std::size_t>> cols(n);
    for (auto& c : cols) {
      if (rng() % 4 != 0) c = rng() % n;
    }
    const auto m = F1Matrix::from_row_columns(cols);
    const auto v = rng() % 5 == 0 ? F1Vector::zero(n) : F1Vector::basis(n, rng() % n);
    // f1_apply either yields a vector with at most one One or refuses.
    try {
      const auto out = f1_apply(m, v);
      std::size_t ones = 0;
      for (auto e : out.entries()) ones += e == F1Element::One;
      EXPECT_LE(ones, 1u);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::AdditionForbidden);
    }
  }
}
