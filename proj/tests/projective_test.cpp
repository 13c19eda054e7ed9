#include "gqm/projective.hpp"

#include "gqm/qcount.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace gqm;

namespace {

Vec ints(const Field& f, std::initializer_list<long long> xs) {
  Vec v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

TEST(Projective, CanonicalFormEndsInOne) {
  auto f = Field::create(3, 1);
  EXPECT_EQ(canonical_form(ints(*f, {1, 2})), ints(*f, {2, 1}));
  EXPECT_EQ(canonical_form(ints(*f, {2, 0})), ints(*f, {1, 0}));
  EXPECT_EQ(ProjVector::canonicalize(ints(*f, {0, 2, 2, 0})).entries(), ints(*f, {0, 1, 1, 0}));
  EXPECT_GQM_ERROR(ProjVector::canonicalize(ints(*f, {0, 0})), ZeroVector);
  EXPECT_GQM_ERROR(ProjVector::canonicalize(Vec{}), ZeroVector);
}

TEST(Projective, KetsAndBras) {
  auto f = Field::create(3, 1);
  EXPECT_EQ(ket(0, *f).entries(), ints(*f, {1, 0}));
  EXPECT_EQ(ket(1, *f).entries(), ints(*f, {0, 1}));
  const auto g = f->generator();
  EXPECT_EQ(ket(2, *f).entries(), (Vec{g.pow(1), f->one()}));
  EXPECT_EQ(ket(3, *f).entries(), (Vec{g.pow(2), f->one()}));
  EXPECT_EQ(bra(0, *f).entries(), ints(*f, {0, -1}));
  EXPECT_EQ(bra(1, *f).entries(), ints(*f, {1, 0}));
  EXPECT_EQ(bra(3, *f).entries(), (Vec{f->one(), -g.pow(2)}));
  EXPECT_GQM_ERROR(ket(4, *f), BadIndex);
  EXPECT_GQM_ERROR(bra(4, *f), BadIndex);
}

TEST(Projective, BraKillsItsOwnKet) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    unsigned p = 0, n = 0;
    factor_prime_power(q, p, n);
    auto f = Field::create(p, n);
    for (unsigned r = 0; r <= q; ++r)
      for (unsigned s = 0; s <= q; ++s)
        EXPECT_EQ(bracket(bra(r, *f), ket(s, *f)).is_zero(), r == s) << "q=" << q << " r=" << r << " s=" << s;
  }
}

TEST(Projective, KetsEnumerateTheLine) {
  auto f = Field::create(5, 1);
  std::set<Vec> kets;
  for (unsigned r = 0; r <= 5; ++r) kets.insert(ket(r, *f).entries());
  std::set<Vec> points;
  for (const auto& pnt : enumerate_points(2, *f)) points.insert(pnt.entries());
  EXPECT_EQ(kets, points);
}

TEST(Projective, EnumerationOrder) {
  auto f = Field::create(2, 1);
  const auto pts = enumerate_points(2, *f);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].entries(), ints(*f, {1, 0}));
  EXPECT_EQ(pts[1].entries(), ints(*f, {0, 1}));
  EXPECT_EQ(pts[2].entries(), ints(*f, {1, 1}));
}

TEST(Projective, PointCountsMatchQIntegers) {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (unsigned N = 1; N <= 4; ++N) {
      unsigned p = 0, n = 0;
      factor_prime_power(q, p, n);
      auto f = Field::create(p, n);
      const auto pts = enumerate_points(N, *f);
      EXPECT_EQ(BigInt(pts.size()), q_int(N, q));
      std::set<Vec> unique;
      for (const auto& pt : pts) unique.insert(pt.entries());
      EXPECT_EQ(unique.size(), pts.size());
    }
}

TEST(Projective, BracketErrors) {
  auto f = Field::create(3, 1);
  auto g = Field::create(5, 1);
  EXPECT_GQM_ERROR(bracket(ints(*f, {1, 0}), ints(*f, {1, 0, 0})), ShapeMismatch);
  EXPECT_GQM_ERROR(bracket(ints(*f, {1, 0}), ints(*g, {1, 0})), FieldMismatch);
}

TEST(Projective, DualBasisDetection) {
  auto f = Field::create(3, 1);
  const std::vector<DualVector> good{bra(0, *f), bra(1, *f)};
  EXPECT_TRUE(is_dual_basis(good));
  const std::vector<DualVector> dependent{DualVector::make(ints(*f, {1, 1})), DualVector::make(ints(*f, {2, 2}))};
  EXPECT_FALSE(is_dual_basis(dependent));
  const std::vector<DualVector> short_list{bra(0, *f)};
  EXPECT_GQM_ERROR(is_dual_basis(short_list), BadBasis);
}

TEST(ProjectiveProperty, CanonicalizeIsIdempotentAndScaleInvariant) {
  std::mt19937 rng(20240501);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    unsigned p = 0, n = 0;
    factor_prime_power(q, p, n);
    auto f = Field::create(p, n);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Vec v;
      for (int i = 0; i < 4; ++i) v.push_back(f->element(pick(rng)));
      if (std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); })) continue;
      const auto c = canonical_form(v);
      EXPECT_EQ(canonical_form(c), c);
      for (const auto& k : f->elements()) {
        if (k.is_zero()) continue;
        EXPECT_EQ(canonical_form(scale(k, v)), c);
        EXPECT_TRUE(projective_equal(ProjVector::canonicalize(scale(k, v)), ProjVector::canonicalize(v)));
      }
    }
  }
}

TEST(ProjectiveProperty, RankOfRandomRows) {
  auto f = Field::create(2, 1);
  EXPECT_EQ(rank({ints(*f, {1, 0, 1}), ints(*f, {0, 1, 1}), ints(*f, {1, 1, 0})}), 2u);
  EXPECT_EQ(rank({ints(*f, {1, 0, 0}), ints(*f, {0, 1, 0}), ints(*f, {0, 0, 1})}), 3u);
}
