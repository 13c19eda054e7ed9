#include "gqm/qcount.hpp"

#include "support.hpp"

using namespace gqm;

TEST(QCount, QIntegers) {
  EXPECT_EQ(q_int(3, 2), 7);
  EXPECT_EQ(q_int(4, 3), 40);
  EXPECT_EQ(q_int(0, 5), 0);
  EXPECT_EQ(q_int(5, 1), 5);
}

TEST(QCount, QFactorial) {
  EXPECT_EQ(q_factorial(3, 2), 1 * 3 * 7);
  EXPECT_EQ(q_factorial(0, 7), 1);
  EXPECT_EQ(q_factorial(5, 1), 120);
}

TEST(QCount, GaussianBinomialValues) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13);
  EXPECT_EQ(gaussian_binomial(4, 2, 1), 6);
  EXPECT_EQ(gaussian_binomial(6, 0, 9), 1);
  EXPECT_GQM_ERROR(gaussian_binomial(2, 3, 2), InvalidArgs);
}

TEST(QCount, SubspaceCountsOfProjectivePlane) {
  // PG(2,2): 7 points, 7 lines, one plane, one empty subspace.
  EXPECT_EQ(subspace_count(3, -1, 2), 1);
  EXPECT_EQ(subspace_count(3, 0, 2), 7);
  EXPECT_EQ(subspace_count(3, 1, 2), 7);
  EXPECT_EQ(subspace_count(3, 2, 2), 1);
  EXPECT_EQ(points_per_subspace(1, 2), 3);
  EXPECT_EQ(points_per_subspace(-1, 5), 0);
  EXPECT_GQM_ERROR(subspace_count(3, 3, 2), InvalidArgs);
  EXPECT_GQM_ERROR(subspace_count(3, -2, 2), InvalidArgs);
}

TEST(QCount, LargeValuesStayExact) {
  // [20]_9 exceeds 64 bits.
  QInt expect = 0;
  QInt power = 1;
  for (int i = 0; i < 20; ++i, power *= 9) expect += power;
  EXPECT_EQ(q_int(20, 9), expect);
  EXPECT_EQ(gaussian_binomial(20, 10, 9), gaussian_binomial(20, 10, 9));
  EXPECT_GT(gaussian_binomial(20, 10, 9), QInt(1) << 64);
}

TEST(QCountProperty, Symmetry) {
  for (std::uint64_t q : {1, 2, 3, 4, 5, 7, 8, 9})
    for (unsigned N = 0; N <= 8; ++N)
      for (unsigned M = 0; M <= N; ++M) EXPECT_EQ(gaussian_binomial(N, M, q), gaussian_binomial(N, N - M, q));
}

TEST(QCountProperty, PascalRecurrence) {
  // [N, M]_q = [N-1, M-1]_q + q^M [N-1, M]_q
  for (std::uint64_t q : {1, 2, 3, 5})
    for (unsigned N = 1; N <= 8; ++N)
      for (unsigned M = 1; M < N; ++M) {
        QInt qm = 1;
        for (unsigned i = 0; i < M; ++i) qm *= q;
        EXPECT_EQ(gaussian_binomial(N, M, q), gaussian_binomial(N - 1, M - 1, q) + qm * gaussian_binomial(N - 1, M, q));
      }
}

TEST(QCountProperty, DegeneratesToOrdinaryCombinatoricsAtOne) {
  QInt fact = 1;
  for (unsigned N = 0; N <= 10; ++N) {
    if (N > 0) fact *= N;
    EXPECT_EQ(q_int(N, 1), N);
    EXPECT_EQ(q_factorial(N, 1), fact);
    QInt binom = 1;
    for (unsigned M = 0; M <= N; ++M) {
      EXPECT_EQ(gaussian_binomial(N, M, 1), binom);
      binom = binom * (N - M) / (M + 1);
    }
  }
}

TEST(QCountProperty, FactorialQuotientAgrees) {
  for (std::uint64_t q : {2, 3, 4})
    for (unsigned N = 0; N <= 6; ++N)
      for (unsigned M = 0; M <= N; ++M)
        EXPECT_EQ(gaussian_binomial(N, M, q) * q_factorial(M, q) * q_factorial(N - M, q), q_factorial(N, q));
}

TEST(QCountProperty, MatchesBruteForceEnumeration) {
  for (std::uint64_t q : {2, 3})
    for (unsigned N = 1; N <= 4; ++N)
      for (int k = -1; k < static_cast<int>(N); ++k)
        EXPECT_EQ(brute_force_subspace_count(N, k, q), subspace_count(N, k, q)) << "q=" << q << " N=" << N << " k=" << k;
  EXPECT_EQ(brute_force_subspace_count(3, 1, 4), subspace_count(3, 1, 4));
}

TEST(QCount, BruteForceGuards) {
  EXPECT_GQM_ERROR(brute_force_subspace_count(2, 0, 6), InvalidField);
  EXPECT_GQM_ERROR(brute_force_subspace_count(30, 0, 2), TooLarge);
}
