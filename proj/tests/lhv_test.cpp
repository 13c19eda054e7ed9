#include "gqm/lhv.hpp"

#include "support.hpp"

#include <random>

using namespace gqm;

namespace {

FieldPtr field_of(std::uint64_t q) {
  unsigned p = 0, n = 0;
  factor_prime_power(q, p, n);
  return Field::create(p, n);
}

JointTable blend(const JointTable& a, const JointTable& b, const Rat& v) {
  std::vector<JointTable::Row> rows(a.rows().size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t o = 0; o < 4; ++o) rows[k][o] = v * a.rows()[k][o] + (1 - v) * b.rows()[k][o];
  return JointTable::make(a.scenario(), rows);
}

void expect_verdict_verified(const JointTable& t) {
  const auto verdict = lhv_feasible(t);
  if (verdict.feasible) {
    EXPECT_TRUE(weights_reproduce(t, verdict.weights));
    EXPECT_FALSE(verdict.certificate.has_value());
  } else {
    ASSERT_TRUE(verdict.certificate.has_value());
    EXPECT_TRUE(certificate_separates(t, *verdict.certificate));
  }
}

}  // namespace

TEST(JointTable, Validation) {
  const JointTable::Row ok{Rat(1, 2), Rat(1, 2), 0, 0};
  const JointTable::Row negative{Rat(3, 2), Rat(-1, 2), 0, 0};
  const JointTable::Row short_sum{Rat(1, 2), 0, 0, 0};
  EXPECT_NO_THROW(JointTable::make({1, 1}, {ok}));
  EXPECT_GQM_ERROR(JointTable::make({1, 1}, {negative}), BadTable);
  EXPECT_GQM_ERROR(JointTable::make({1, 1}, {short_sum}), BadTable);
  EXPECT_GQM_ERROR(JointTable::make({1, 2}, {ok}), BadTable);
  EXPECT_GQM_ERROR(JointTable::make({0, 1}, {}), BadTable);
}

TEST(Strategies, EnumerationAndLabels) {
  const Scenario s{2, 2};
  const auto all = deterministic_strategies(s);
  ASSERT_EQ(all.size(), 16u);
  EXPECT_EQ(to_string(all[0], s), "++|++");
  EXPECT_EQ(to_string(all[1], s), "-+|++");
  EXPECT_EQ(to_string(all[4], s), "++|-+");
  EXPECT_EQ(strategy_outcome(all[1], s, 0, 0), 2u);  // (-,+)
  EXPECT_GQM_ERROR(deterministic_strategies({0, 3}), InvalidArgs);
  EXPECT_GQM_ERROR(deterministic_strategies({11, 10}), TooLarge);
}

TEST(Lhv, UniformTableIsLocal) {
  const auto t = uniform_table({2, 2});
  const auto verdict = lhv_feasible(t);
  ASSERT_TRUE(verdict.feasible);
  EXPECT_TRUE(weights_reproduce(t, verdict.weights));
  EXPECT_EQ(table_chsh(t), 0);
}

TEST(Lhv, PrBoxIsNotLocal) {
  const auto t = pr_box();
  EXPECT_EQ(table_chsh(t), 4);
  const auto verdict = lhv_feasible(t);
  ASSERT_FALSE(verdict.feasible);
  ASSERT_TRUE(verdict.certificate.has_value());
  EXPECT_TRUE(certificate_separates(t, *verdict.certificate));
  EXPECT_GT(certificate_value(*verdict.certificate, t), 0);
  for (const auto& st : deterministic_strategies(t.scenario()))
    EXPECT_LE(certificate_value(*verdict.certificate, st, t.scenario()), 0);
}

TEST(Lhv, DeterministicChshMaximumIsTwo) {
  EXPECT_EQ(lhv_chsh_max({2, 2}), 2);
  EXPECT_GQM_ERROR(lhv_chsh_max({3, 2}), InvalidArgs);
}

TEST(Lhv, PrBoxNoiseThreshold) {
  // v PR + (1 - v) uniform has CHSH value 4v and is local exactly up to v = 1/2.
  const auto pr = pr_box();
  const auto noise = uniform_table({2, 2});
  for (const auto& v : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(501, 1000), Rat(3, 4), Rat(1)}) {
    const auto t = blend(pr, noise, v);
    EXPECT_EQ(lhv_feasible(t).feasible, v <= Rat(1, 2)) << to_string(v);
    expect_verdict_verified(t);
  }
}

TEST(LhvProperty, RandomMixturesAreLocal) {
  std::mt19937 rng(7);
  for (const Scenario s : {Scenario{2, 2}, Scenario{3, 2}, Scenario{3, 3}, Scenario{4, 4}}) {
    const auto strategies = deterministic_strategies(s);
    std::uniform_int_distribution<std::size_t> pick(0, strategies.size() - 1);
    std::uniform_int_distribution<int> weight(1, 9);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<WeightedStrategy> mix;
      int total = 0;
      const int parts = 1 + trial % 5;
      std::vector<int> raw;
      for (int k = 0; k < parts; ++k) total += raw.emplace_back(weight(rng));
      for (int k = 0; k < parts; ++k) mix.push_back({strategies[pick(rng)], Rat(raw[k], total)});
      const auto t = mixture_table(s, mix);
      const auto verdict = lhv_feasible(t);
      ASSERT_TRUE(verdict.feasible);
      EXPECT_TRUE(weights_reproduce(t, verdict.weights));
    }
  }
}

TEST(LhvProperty, FeasibilityIsMonotoneUnderMixing) {
  // Mixing a nonlocal table with more local noise never makes it less local.
  const auto pr = pr_box();
  const auto noise = uniform_table({2, 2});
  bool seen_local = false;
  for (int k = 10; k >= 0; --k) {
    const bool local = lhv_feasible(blend(pr, noise, Rat(k, 10))).feasible;
    if (seen_local) EXPECT_TRUE(local) << k;
    seen_local = seen_local || local;
  }
  EXPECT_TRUE(seen_local);
}

TEST(LhvGqm, SingletTablesAreNotLocal) {
  for (std::uint64_t q : {2, 3}) {
    auto f = field_of(q);
    const auto g = gqm_joint_table(singlet(0, 1, *f), *f);
    EXPECT_EQ(g.directions.size(), (q + 1) * q / 2);
    const auto verdict = lhv_feasible(g.table);
    EXPECT_FALSE(verdict.feasible) << "q=" << q;
    ASSERT_TRUE(verdict.certificate.has_value());
    EXPECT_TRUE(certificate_separates(g.table, *verdict.certificate));
  }
}

TEST(LhvGqm, ProductStateTablesAreLocal) {
  auto f = field_of(2);
  for (unsigned r = 0; r <= 2; ++r)
    for (unsigned s = 0; s <= 2; ++s) {
      const auto g = gqm_joint_table(tensor_ket(ket(r, *f), ket(s, *f)), *f);
      const auto verdict = lhv_feasible(g.table);
      EXPECT_TRUE(verdict.feasible);
      EXPECT_TRUE(weights_reproduce(g.table, verdict.weights));
    }
}

TEST(LhvGqm, SingletChshWithinSubtable) {
  auto f = field_of(3);
  const auto g = gqm_joint_table(singlet(0, 1, *f), *f);
  // Restrict to the first two observables on each side.
  std::vector<JointTable::Row> rows{g.table.at(0, 0), g.table.at(0, 1), g.table.at(1, 0), g.table.at(1, 1)};
  const auto sub = JointTable::make({2, 2}, rows);
  const Rat v = table_chsh(sub);
  EXPECT_LE(v < 0 ? Rat(-v) : v, 2);
}
