#include <gtest/gtest.h>

#include <vector>

#include "tate/formulas.hpp"
#include "tate/weights.hpp"

using namespace tate;

namespace {

// Catalan numbers by the convolution recurrence C_{k+1} = sum C_i C_{k-i}.
std::vector<Integer> catalan(unsigned n) {
  std::vector<Integer> c{1};
  for (unsigned k = 0; k < n; ++k) {
    Integer s = 0;
    for (unsigned i = 0; i <= k; ++i) s += c[i] * c[k - i];
    c.push_back(s);
  }
  return c;
}

}  // namespace

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(10, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(60, 30), Integer("118264581564861424"));
}

TEST(LemmaEvenCount, Examples) {
  EXPECT_EQ(lemma_even_count(1), 1);
  EXPECT_EQ(lemma_even_count(2), 2);
  EXPECT_EQ(lemma_even_count(5), catalan(5)[5]);
  EXPECT_EQ(lemma_even_count(5), 42);
  EXPECT_THROW(lemma_even_count(0), InvalidArgument);
}

TEST(LemmaEvenCount, MatchesCatalanRecurrence) {
  const auto c = catalan(30);
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(lemma_even_count(n), c[n]) << n;
}

TEST(LemmaEvenCount, StrictlyIncreasing) {
  for (unsigned n = 2; n <= 40; ++n) EXPECT_GT(lemma_even_count(n), lemma_even_count(n - 1));
}

TEST(TateRank, Examples) {
  EXPECT_EQ(tate_rank({2, 2}), 1);
  EXPECT_EQ(tate_rank({4, 4}), 2);
  EXPECT_EQ(tate_rank({3, 6}), 0);
  EXPECT_EQ(tate_rank({2, 8}), 1);
  EXPECT_THROW(tate_rank({3, 4}), NotADivisor);
}

TEST(TateRank, PowerLaw) {
  for (unsigned m = 1; m <= 8; ++m) {
    for (unsigned d = m; d <= 48; d += m) {
      Integer expected;
      mpz_pow_ui(expected.get_mpz_t(), tate_rank({m, m}).get_mpz_t(), d / m);
      EXPECT_EQ(tate_rank({m, d}), expected) << m << " " << d;
    }
  }
}

TEST(TateRank, EnvelopeAgreement) {
  for (unsigned m = 2; m <= 8; m += 2) {
    for (unsigned d = m; d <= 12; d += m) {
      // 2^d is the product dimension; every case with d <= 12 is within the cap
      EXPECT_EQ(Integer(static_cast<long>(envelope_one_dim_count(m, d))), tate_rank({m, d})) << m << " " << d;
    }
  }
}
