#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "tate/error.hpp"
#include "tate/weights.hpp"

using namespace tate;

namespace {

Weight w(std::initializer_list<int> e) { return Weight{std::vector<int>(e)}; }

// Pascal table in machine integers, independent of the library's binomials.
std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// Weyl-type oracle: the multiplicity of highest weight (k_i, m_i) is the
// alternating sum of weight multiplicities over the raising steps
// (x, y) -> (x + 2, y - 1) applied to any subset of the factors.
std::int64_t weyl_multiplicity(const CharacterPoly& p, const HighestWeightTuple& hw) {
  const int r = static_cast<int>(hw.size());
  std::int64_t total = 0;
  for (int mask = 0; mask < (1 << r); ++mask) {
    Weight v{std::vector<int>(2 * r)};
    int sign = 1;
    for (int i = 0; i < r; ++i) {
      const int e = (mask >> i) & 1;
      v.exps[2 * i] = hw[i].k + 2 * e;
      v.exps[2 * i + 1] = hw[i].m - e;
      if (e) sign = -sign;
    }
    total += sign * p.multiplicity(v);
  }
  return total;
}

CharacterPoly std_power_product(int r, unsigned m) {
  CharacterPoly p = CharacterPoly::trivial(r);
  for (int j = 0; j < r; ++j) p = p * power(standard_char(r, j), m);
  return p;
}

}  // namespace

TEST(IrrChar, Examples) {
  const auto std1 = irr_char({{1, 0}});
  EXPECT_EQ(std1.terms().size(), 2U);
  EXPECT_EQ(std1.multiplicity(w({1, 0})), 1);
  EXPECT_EQ(std1.multiplicity(w({-1, 1})), 1);

  const auto det5 = irr_char({{0, 5}});
  EXPECT_EQ(det5.terms().size(), 1U);
  EXPECT_EQ(det5.multiplicity(w({0, 5})), 1);

  const auto two = irr_char({{1, 0}, {1, 0}});
  EXPECT_EQ(two.terms().size(), 4U);
  EXPECT_EQ(two, standard_char(2, 0) * standard_char(2, 1));
  EXPECT_EQ(irr_char({{3, 1}, {2, -1}}).dimension(), 12);
}

TEST(IrrChar, NegativeHighestWeight) { EXPECT_THROW(irr_char({{-1, 0}}), NegativeHighestWeight); }

TEST(CharacterPoly, MulAndPowExamples) {
  const auto s = standard_char(1);
  const auto sq = power(s, 2);
  EXPECT_EQ(sq.terms().size(), 3U);
  EXPECT_EQ(sq.multiplicity(w({2, 0})), 1);
  EXPECT_EQ(sq.multiplicity(w({0, 1})), 2);
  EXPECT_EQ(sq.multiplicity(w({-2, 2})), 1);

  EXPECT_EQ(s * CharacterPoly::trivial(1), s);
  EXPECT_EQ(power(s, 0), CharacterPoly::trivial(1));

  const auto cube = power(s, 3);
  EXPECT_EQ(cube.multiplicity(w({3, 0})), 1);
  EXPECT_EQ(cube.multiplicity(w({1, 1})), 3);
  EXPECT_EQ(cube.multiplicity(w({-1, 2})), 3);
  EXPECT_EQ(cube.multiplicity(w({-3, 3})), 1);
  EXPECT_EQ(cube.terms().size(), 4U);
}

TEST(CharacterPoly, FactorMismatch) {
  EXPECT_THROW(standard_char(1) * standard_char(2), FactorMismatch);
  EXPECT_THROW(standard_char(1) + standard_char(2), FactorMismatch);
}

TEST(CharacterPoly, DimensionCap) {
  EXPECT_NO_THROW(power(standard_char(1), 20));
  EXPECT_THROW(power(standard_char(1), 21), BoundExceeded);
}

TEST(Decompose, Examples) {
  const auto s = standard_char(1);
  EXPECT_EQ(decompose(power(s, 2)), (std::vector<Constituent>{{{{2, 0}}, 1}, {{{0, 1}}, 1}}));
  const auto four = decompose(power(s, 4));
  EXPECT_EQ(four, (std::vector<Constituent>{{{{4, 0}}, 1}, {{{2, 1}}, 3}, {{{0, 2}}, 2}}));
  std::int64_t dim = 0;
  for (const auto& c : four) dim += c.multiplicity * (c.highest_weight[0].k + 1);
  EXPECT_EQ(dim, 16);
}

TEST(Decompose, TwoFactorSquares) {
  const auto p = power(standard_char(2, 0), 2) * power(standard_char(2, 1), 2);
  const auto parts = decompose(p);
  // oracle: peel via the alternating-sum formula on the same weights
  std::int64_t dim = 0;
  bool saw_linear = false;
  for (const auto& c : parts) {
    EXPECT_EQ(c.multiplicity, weyl_multiplicity(p, c.highest_weight));
    dim += c.multiplicity * (c.highest_weight[0].k + 1) * (c.highest_weight[1].k + 1);
    if (c.highest_weight == HighestWeightTuple{{0, 1}, {0, 1}}) {
      saw_linear = true;
      EXPECT_EQ(c.multiplicity, 1);
    }
  }
  EXPECT_TRUE(saw_linear);
  EXPECT_EQ(dim, 16);
  EXPECT_EQ(parts.size(), 4U);
  EXPECT_EQ(p.terms().size(), 9U);
}

TEST(Decompose, NotACharacter) {
  CharacterPoly neg(1);
  neg.add(w({-1, 1}), 1);
  EXPECT_THROW(decompose(neg), NotACharacter);
  EXPECT_THROW(decompose(CharacterPoly::trivial(1) - standard_char(1)), NotACharacter);
  EXPECT_THROW(one_dim_count(neg), NotACharacter);
}

TEST(OneDim, Examples) {
  const auto s = standard_char(1);
  EXPECT_EQ(one_dim_count(power(s, 2)), 1);
  EXPECT_EQ(one_dim_types(power(s, 2)), (std::vector<Constituent>{{{{0, 1}}, 1}}));
  EXPECT_EQ(one_dim_count(power(s, 3)), 0);
  EXPECT_EQ(one_dim_count(power(s, 4)), 2);
  EXPECT_EQ(one_dim_types(power(s, 4)), (std::vector<Constituent>{{{{0, 2}}, 2}}));
}

TEST(WeightsProperty, ReconstructionAndDimension) {
  std::mt19937 gen(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + static_cast<int>(gen() % 3);
    CharacterPoly p = CharacterPoly::trivial(r);
    const int factors = 1 + static_cast<int>(gen() % 3);
    for (int f = 0; f < factors; ++f) {
      HighestWeightTuple hw;
      for (int i = 0; i < r; ++i) hw.push_back({static_cast<int>(gen() % 4), static_cast<int>(gen() % 5) - 2});
      p = p * irr_char(hw);
    }
    const auto parts = decompose(p);
    CharacterPoly rebuilt(r);
    std::int64_t dim = 0;
    for (const auto& c : parts) {
      EXPECT_GT(c.multiplicity, 0);
      EXPECT_EQ(c.multiplicity, weyl_multiplicity(p, c.highest_weight));
      const auto irr = irr_char(c.highest_weight);
      for (const auto& [wt, m] : irr.terms()) rebuilt.add(wt, c.multiplicity * m);
      std::int64_t d = c.multiplicity;
      for (const auto& f : c.highest_weight) d *= f.k + 1;
      dim += d;
    }
    EXPECT_EQ(rebuilt, p);
    EXPECT_EQ(dim, p.dimension());
  }
}

TEST(WeightsProperty, ClosedFormEvenAndOdd) {
  const auto s = standard_char(1);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(one_dim_count(power(s, 2 * n)), choose(2 * n, n) - choose(2 * n, n - 1)) << "n=" << n;
    for (const auto& t : one_dim_types(power(s, 2 * n))) EXPECT_EQ(t.highest_weight, (HighestWeightTuple{{0, n}}));
  }
  for (unsigned e = 1; e <= 15; e += 2) EXPECT_EQ(one_dim_count(power(s, e)), 0) << "e=" << e;
}

TEST(WeightsProperty, ProductRule) {
  for (unsigned m : {2U, 4U}) {
    for (int r = 1; r <= 3; ++r) {
      if (m * r > 12) continue;
      const auto single = one_dim_count(power(standard_char(1), m));
      std::int64_t expected = 1;
      for (int i = 0; i < r; ++i) expected *= single;
      EXPECT_EQ(one_dim_count(std_power_product(r, m)), expected) << "m=" << m << " r=" << r;
    }
  }
}

TEST(WeightsProperty, DeterminantTwistInvariance) {
  for (int r = 1; r <= 2; ++r) {
    const auto p = std_power_product(r, 4);
    for (int shift = -2; shift <= 3; ++shift) {
      CharacterPoly det(r);
      Weight b{std::vector<int>(2 * r, 0)};
      for (int i = 0; i < r; ++i) b.exps[2 * i + 1] = shift + i;
      det.add(b, 1);
      const auto twisted = p * det;
      EXPECT_EQ(one_dim_count(twisted), one_dim_count(p));
      const auto before = one_dim_types(p);
      const auto after = one_dim_types(twisted);
      ASSERT_EQ(before.size(), after.size());
      for (std::size_t j = 0; j < before.size(); ++j) {
        EXPECT_EQ(before[j].multiplicity, after[j].multiplicity);
        for (int i = 0; i < r; ++i) EXPECT_EQ(after[j].highest_weight[i].m, before[j].highest_weight[i].m + shift + i);
      }
    }
  }
}

TEST(WeightsText, RoundTripAndOrder) {
  const auto p = power(standard_char(1), 2);
  EXPECT_EQ(to_text(p), "-2 2 : 1\n0 1 : 2\n2 0 : 1\n");
  EXPECT_EQ(parse_character_poly(to_text(p)), p);
  const auto q = std_power_product(2, 2);
  EXPECT_EQ(parse_character_poly(to_text(q)), q);
  EXPECT_THROW(parse_character_poly("1 0 1"), InvalidArgument);
  EXPECT_EQ(to_string(HighestWeightTuple{{2, 0}, {0, 1}}), "(2,0)(0,1)");
}
