#include <gtest/gtest.h>

#include <array>
#include <random>
#include <set>

#include "support.hpp"
#include "tate/rep.hpp"

using namespace tate;
using testing_support::fixture;
using testing_support::fixture_names;
using testing_support::perm_group;

namespace {

ExactMatrix mat2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d) {
  return ExactMatrix(2, 2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

GroupPtr q8_group() { return perm_group(8, {"(1 3 5 7)(2 4 6 8)", "(1 2 5 6)(3 8 7 4)"}); }

MatrixRep q8_rep() {
  const auto z = cyc_root(4, 1);
  return MatrixRep::from_generator_images(q8_group(), {mat2(z, 0, 0, -z), mat2(0, -1, 1, 0)});
}

// Independent closure of 2x2 matrices mod p; returns {group order, number with det 1}.
std::pair<std::size_t, std::size_t> modl_oracle(unsigned p, const std::vector<std::array<int, 4>>& gens) {
  std::set<std::array<int, 4>> seen{{1, 0, 0, 1}};
  std::vector<std::array<int, 4>> todo{{1, 0, 0, 1}};
  while (!todo.empty()) {
    const auto m = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      const int q = static_cast<int>(p);
      std::array<int, 4> r{(g[0] * m[0] + g[1] * m[2]) % q, (g[0] * m[1] + g[1] * m[3]) % q,
                           (g[2] * m[0] + g[3] * m[2]) % q, (g[2] * m[1] + g[3] * m[3]) % q};
      for (auto& x : r) x = (x + q) % q;
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  std::size_t special = 0;
  for (const auto& m : seen) special += ((m[0] * m[3] - m[1] * m[2]) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p) == 1;
  return {seen.size(), special};
}

ModlRep modl(unsigned p, const std::vector<std::array<int, 4>>& gens) {
  std::vector<ModlRep::Matrix> m;
  for (const auto& g : gens) {
    ModlRep::Matrix x{};
    for (int i = 0; i < 4; ++i) x[i] = static_cast<unsigned>((g[i] % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p));
    m.push_back(x);
  }
  return ModlRep(p, m);
}

}  // namespace

TEST(MatrixRep, Q8TwoDimensional) {
  const auto rho = q8_rep();
  const auto& g = *rho.group();
  EXPECT_EQ(rho.degree(), 2U);
  const auto chi = rho.character();
  // standard table: 2 at 1, -2 at the central involution, 0 on elements of order 4
  for (Elem x = 0; x < g.order(); ++x) {
    const auto o = g.element_order(x);
    const Cyclotomic expected = o == 1 ? Cyclotomic(2) : o == 2 ? Cyclotomic(-2) : Cyclotomic(0);
    EXPECT_EQ(chi(x), expected) << x;
    EXPECT_EQ(rho(x).trace(), expected);
  }
  EXPECT_EQ(inner_product(chi, chi), 1);
}

TEST(MatrixRep, TrivialImages) {
  const auto g = perm_group(3, {"(1 2)", "(1 2 3)"});
  const auto rho = MatrixRep::from_generator_images(g, {ExactMatrix::identity(3), ExactMatrix::identity(3)});
  for (Elem x = 0; x < g->order(); ++x) EXPECT_TRUE(rho(x).is_identity());
}

TEST(MatrixRep, NotAHomomorphism) {
  const auto z = cyc_root(4, 1);
  try {
    MatrixRep::from_generator_images(q8_group(), {mat2(z, 0, 0, -z), mat2(0, 1, 1, 0)});
    FAIL() << "expected NotAHomomorphism";
  } catch (const NotAHomomorphism& e) {
    // the reported pair really violates the law in the extended images
    const auto& g = *q8_group();
    EXPECT_LT(e.first(), g.order());
    EXPECT_LT(e.second(), g.order());
  }
  EXPECT_THROW(MatrixRep::from_generator_images(q8_group(), {mat2(z, 0, 0, -z), mat2(0, 0, 1, 0)}), SingularImage);
  EXPECT_THROW(MatrixRep::from_generator_images(q8_group(), {mat2(z, 0, 0, -z)}), InvalidArgument);
}

TEST(MatrixRep, ViolationFinderLocatesPair) {
  const auto rho = q8_rep();
  std::vector<ExactMatrix> images(rho.images().begin(), rho.images().end());
  images[3] = images[3].scaled(Cyclotomic(-1));
  EXPECT_THROW(MatrixRep::from_element_images(rho.group(), images), NotAHomomorphism);
}

TEST(MatrixRep, TensorTwistRestrict) {
  const auto rho = q8_rep();
  for (const auto& lambda : linear_characters(rho.group())) {
    EXPECT_EQ(twist(rho, lambda).character(), rho.character() * lambda.to_character());
  }
  EXPECT_EQ(twist(rho, LinearCharacter::trivial(rho.group())).images().size(), rho.images().size());
  for (Elem x = 0; x < rho.group()->order(); ++x) EXPECT_EQ(twist(rho, LinearCharacter::trivial(rho.group()))(x), rho(x));

  const auto sq = tensor(rho, rho);
  EXPECT_EQ(sq.degree(), 4U);
  EXPECT_EQ(sq.character().degree(), Cyclotomic(4));
  EXPECT_EQ(sq.character(), rho.character() * rho.character());

  const auto s3 = perm_group(3, {"(1 2 3)", "(1 2)"});
  const std::vector<Elem> rot{s3->generators()[0]};
  const Subgroup a3(s3, rot);
  const auto res = restrict(MatrixRep::regular(s3), a3);
  const auto reg_a3 = Character::regular(a3.group());
  EXPECT_EQ(res.character(), reg_a3 + reg_a3);
  EXPECT_THROW(tensor(rho, MatrixRep::trivial(s3)), GroupMismatch);
}

TEST(MatrixRep, ConjRep) {
  const auto fx = fixture("sd16_q8.model");
  const auto& g = *fx.group;
  const auto& rho = fx.rho;
  for (Elem x = 0; x < fx.h.order(); ++x) EXPECT_EQ(conj_rep(rho, fx.h, 0)(x), rho(x));
  for (Elem h0 : fx.h.members()) EXPECT_EQ(conj_rep(rho, fx.h, h0).character(), rho.character());

  const Elem t = g.generators()[2];
  ASSERT_FALSE(fx.h.contains(t));
  const auto conj = conj_rep(rho, fx.h, t);
  const auto& hq = *fx.h.group();
  bool swapped = false;
  for (Elem x = 0; x < hq.order(); ++x) {
    const Elem image = *fx.h.from_parent(g.mul(g.mul(t, fx.h.to_parent(x)), g.inv(t)));
    EXPECT_EQ(conj(x), rho(image));
    if (hq.class_of(image) != hq.class_of(x)) {
      swapped = true;
      EXPECT_EQ(hq.conjugacy_classes()[hq.class_of(x)].size(), 2U);
    }
  }
  EXPECT_TRUE(swapped);
  EXPECT_EQ(conj.character(), rho.character());

  const auto s3 = perm_group(3, {"(1 2 3)", "(1 2)"});
  const std::vector<Elem> flip{s3->generators()[1]};
  const Subgroup c2(s3, flip);
  const auto sign = MatrixRep::from_generator_images(c2.group(), {ExactMatrix(1, 1, {Cyclotomic(-1)})});
  EXPECT_THROW(conj_rep(sign, c2, s3->generators()[0]), NotNormal);
}

TEST(InvariantDim, Examples) {
  const auto s3 = perm_group(3, {"(1 2)", "(1 2 3)"});
  const auto triv = MatrixRep::trivial(s3, 3);
  EXPECT_EQ(invariant_dim_kernel(triv), 3U);
  EXPECT_EQ(invariant_dim_char(triv), 3U);
  const auto reg = MatrixRep::regular(s3);
  EXPECT_EQ(invariant_dim_kernel(reg), 1U);
  EXPECT_EQ(invariant_dim_char(reg), 1U);
  EXPECT_EQ(invariant_dim_kernel(q8_rep()), 0U);
  EXPECT_EQ(invariant_dim_char(q8_rep()), 0U);
}

TEST(OneDimConstituents, Examples) {
  const auto s3 = perm_group(3, {"(1 2)", "(1 2 3)"});
  const auto reg = one_dim_constituents(MatrixRep::regular(s3));
  ASSERT_EQ(reg.size(), 2U);
  EXPECT_TRUE(reg[0].character.is_trivial());
  EXPECT_EQ(reg[0].multiplicity, 1U);
  EXPECT_EQ(reg[1].multiplicity, 1U);
  EXPECT_EQ(reg[1].character.order(), 2U);

  const auto rho = q8_rep();
  const auto sq = one_dim_constituents(tensor(rho, rho));
  EXPECT_EQ(sq.size(), 4U);
  for (const auto& c : sq) EXPECT_EQ(c.multiplicity, 1U);

  const auto triv = one_dim_constituents(MatrixRep::trivial(s3));
  ASSERT_EQ(triv.size(), 1U);
  EXPECT_TRUE(triv[0].character.is_trivial());
}

TEST(TwistEquivalent, Examples) {
  const auto rho = q8_rep();
  const auto self = twist_equivalent(rho, rho);
  ASSERT_TRUE(self);
  EXPECT_TRUE(self->is_trivial());
  for (const auto& lambda : linear_characters(rho.group())) {
    const auto twisted = twist(rho, lambda);
    const auto w = twist_equivalent(rho, twisted);
    ASSERT_TRUE(w);
    EXPECT_EQ(twisted.character(), rho.character() * w->to_character());
  }
  const auto fx = fixture("sd16_q8.model");
  const auto conj = conj_rep(fx.rho, fx.h, fx.group->generators()[2]);
  const auto w = twist_equivalent(fx.rho, conj);
  ASSERT_TRUE(w);
  EXPECT_EQ(conj.character(), fx.rho.character() * w->to_character());

  const auto swap = fixture("swap_s3.model");
  const auto other = conj_rep(swap.rho, swap.h, swap.group->generators()[4]);
  EXPECT_FALSE(twist_equivalent(swap.rho, other));
  EXPECT_THROW(twist_equivalent(rho, swap.rho), GroupMismatch);
}

TEST(Sl2ImageCheck, Examples) {
  const std::vector<std::array<int, 4>> elementary{{1, 1, 0, 1}, {1, 0, 1, 1}};
  EXPECT_EQ(modl_oracle(5, elementary).second, 120U);
  EXPECT_TRUE(sl2_image_check(modl(5, elementary)));

  const std::vector<std::array<int, 4>> borel{{1, 1, 0, 1}, {2, 0, 0, 1}, {1, 0, 0, 3}};
  EXPECT_FALSE(sl2_image_check(modl(5, borel)));
  EXPECT_EQ(modl_image_order(modl(5, borel)), modl_oracle(5, borel).first);

  const std::vector<std::array<int, 4>> gl{{3, 0, 0, 1}, {-1, 1, -1, 0}};
  const auto [order, special] = modl_oracle(7, gl);
  EXPECT_EQ(order, 2016U);
  EXPECT_EQ(special, 336U);
  EXPECT_TRUE(sl2_image_check(modl(7, gl)));
  EXPECT_EQ(modl_image_order(modl(7, gl)), 2016U);
}

TEST(Sl2ImageCheck, Errors) {
  EXPECT_THROW(ModlRep(4, {{1, 1, 0, 1}}), PrimeBound);
  EXPECT_THROW(ModlRep(17, {{1, 1, 0, 1}}), PrimeBound);
  EXPECT_THROW(ModlRep(1, {{1, 1, 0, 1}}), PrimeBound);
  EXPECT_THROW(ModlRep(5, {{1, 2, 2, 4}}), SingularImage);
}

TEST(RepProperty, FixtureOracles) {
  for (const auto& name : fixture_names()) {
    const auto fx = fixture(name);
    const auto& rho = fx.rho;
    EXPECT_EQ(invariant_dim_kernel(rho), invariant_dim_char(rho)) << name;
    const auto chi = rho.character();
    for (Elem x = 0; x < fx.h.order(); ++x) EXPECT_EQ(rho(x).trace(), chi(x)) << name;
    for (Elem h0 : fx.h.generators()) EXPECT_EQ(conj_rep(rho, fx.h, h0).character(), chi) << name;
    const auto base = one_dim_constituents(rho);
    std::size_t total = 0;
    for (const auto& c : base) total += c.multiplicity;
    EXPECT_LE(total, rho.degree());
    for (const auto& lambda : linear_characters(rho.group())) {
      const auto twisted = one_dim_constituents(twist(rho, lambda));
      ASSERT_EQ(twisted.size(), base.size()) << name;
      for (const auto& c : base) {
        const bool found = std::any_of(twisted.begin(), twisted.end(), [&](const LinearConstituent& t) {
          return t.multiplicity == c.multiplicity && t.character == c.character * lambda;
        });
        EXPECT_TRUE(found) << name;
      }
    }
  }
}

TEST(RepProperty, IrreducibleFixtures) {
  for (const auto* name : {"q8.model", "gl2f3_sl2f3.model", "swap_s3.model"}) {
    const auto fx = fixture(name);
    const auto chi = fx.rho.character();
    EXPECT_EQ(inner_product(chi, chi), 1) << name;
    EXPECT_TRUE(one_dim_constituents(fx.rho).empty()) << name;
  }
  const auto d8 = fixture("d8_z4.model");
  EXPECT_EQ(inner_product(d8.rho.character(), d8.rho.character()), 2);
  EXPECT_EQ(one_dim_constituents(d8.rho).size(), 2U);
}

TEST(RepProperty, RandomTensorTwistOracles) {
  std::mt19937 gen(41);
  const auto& names = fixture_names();
  for (int trial = 0; trial < 30; ++trial) {
    const auto fx = fixture(names[gen() % names.size()]);
    const auto chars = linear_characters(fx.rho.group());
    MatrixRep r = twist(fx.rho, chars[gen() % chars.size()]);
    if (gen() % 2 == 0) r = tensor(r, twist(fx.rho, chars[gen() % chars.size()]));
    EXPECT_EQ(invariant_dim_kernel(r), invariant_dim_char(r));
  }
}
