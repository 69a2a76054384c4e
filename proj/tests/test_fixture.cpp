#include <gtest/gtest.h>

#include <string>

#include "support.hpp"
#include "tate/fixture.hpp"

using namespace tate;
using testing_support::fixture;
using testing_support::fixture_names;
using testing_support::fixture_path;
using testing_support::zeta;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const char* kS3 =
    "points 3\n"
    "(1 2 3)\n"
    "(1 2)\n"
    "\n"
    "conductor 1\n"
    "1\n"
    "-1\n";

}  // namespace

TEST(ParseModel, MinimalSignCharacter) {
  const auto fx = parse_model(kS3);
  EXPECT_EQ(fx.group->order(), 6U);
  EXPECT_EQ(fx.h.order(), 6U);
  EXPECT_EQ(fx.rho.degree(), 1U);
  EXPECT_FALSE(fx.k);
  EXPECT_EQ(fx.rho(fx.group->generators()[1])(0, 0), Cyclotomic(-1));
}

TEST(ParseModel, ErrorLines) {
  EXPECT_EQ(parse_error_line("pints 3\n"), 1U);
  EXPECT_EQ(parse_error_line("points 3\n(1 2 4)\n\nconductor 1\n1\n"), 2U);
  EXPECT_EQ(parse_error_line("points 3\n(1 2 3)\n\nconductor 121\n1\n"), 4U);
  EXPECT_EQ(parse_error_line("# header\npoints 3\n(1 2 3)\n\nconductor 1\n1 2\n"), 6U);
  EXPECT_EQ(parse_error_line("points 3\n(1 2 3)\n\nsubgroup: g2\nconductor 1\n1\n"), 4U);
  EXPECT_EQ(parse_error_line("points 3\n(1 2 3)\n\nconductor 3\n3:0,1\nextra\n"), 6U);
  EXPECT_EQ(parse_error_line("points 3\n(1 2 3)\n\nconductor 3\n4:0,1\n"), 5U);
  // missing rows are reported one past the last line
  EXPECT_EQ(parse_error_line("points 3\n(1 2 3)\n\nconductor 1\n"), 5U);
}

TEST(ParseModel, RepresentationErrorsPropagate) {
  EXPECT_THROW(load_model(std::string(TATE_TEST_DATA_DIR) + "/corrupt/q8_perturbed.model"), NotAHomomorphism);
  EXPECT_THROW(parse_model("points 2\n(1 2)\n\nconductor 1\n0\n"), SingularImage);
  EXPECT_THROW(load_model(fixture_path("missing.model")), Error);
}

TEST(ParseModel, ShippedFixtures) {
  for (const auto& name : fixture_names()) {
    const auto fx = fixture(name);
    EXPECT_TRUE(fx.group->validate()) << name;
    EXPECT_TRUE(is_normal(fx.h)) << name;
    EXPECT_LE(fx.group->order(), kMaxGroupOrder);
  }
  EXPECT_TRUE(fixture("sd16_q8.model").k);
  EXPECT_EQ(fixture("sd16_q8.model").k->order(), 2U);
}

TEST(LiteralRow, Forms) {
  const auto row = parse_literal_row("4:0,1, 4:-1,0, 1:1/2");
  ASSERT_EQ(row.size(), 3U);
  EXPECT_EQ(row[0], zeta(4));
  EXPECT_EQ(row[1], Cyclotomic(-1));
  EXPECT_EQ(row[2], Cyclotomic(make_rational(1, 2)));
  const auto plain = parse_literal_row("0, -1");
  ASSERT_EQ(plain.size(), 2U);
  EXPECT_EQ(plain[1], Cyclotomic(-1));
  // bare coefficients after a literal extend it
  EXPECT_EQ(parse_literal_row("3:0, 1").size(), 1U);
  EXPECT_THROW(parse_literal_row("4:0,x"), InvalidArgument);
  EXPECT_THROW(parse_literal_row("4:0,1,1"), InvalidArgument);
}

TEST(WriteRepModel, RoundTrip) {
  for (const auto& name : fixture_names()) {
    const auto fx = fixture(name);
    const auto text = write_rep_model(fx.rho);
    const auto back = parse_model(text);
    ASSERT_EQ(back.group->order(), fx.h.order()) << name;
    EXPECT_EQ(back.h.order(), back.group->order());
    // the written generators are those of H's own group, so elements correspond by permutation
    for (Elem x = 0; x < fx.h.order(); ++x) {
      const auto y = back.group->index_of(fx.h.group()->element(x));
      ASSERT_TRUE(y) << name;
      EXPECT_EQ(back.rho(*y), fx.rho(x)) << name;
    }
    EXPECT_EQ(write_rep_model(back.rho), text) << name;
  }
}

TEST(ParseModl, FilesAndErrors) {
  const auto sl = parse_modl(read_file(std::string(TATE_FIXTURE_DIR) + "/modl/sl2_f5.modl"));
  EXPECT_EQ(sl.ell(), 5U);
  EXPECT_EQ(sl.generators().size(), 2U);
  EXPECT_TRUE(sl2_image_check(sl));
  EXPECT_FALSE(sl2_image_check(parse_modl(read_file(std::string(TATE_FIXTURE_DIR) + "/modl/borel_f5.modl"))));

  EXPECT_THROW(parse_modl("ell 4\n1 1\n0 1\n"), PrimeBound);
  try {
    parse_modl("ell 5\n1 1\n0 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  EXPECT_THROW(parse_modl("ell 5\n1 1\n"), ParseError);
  EXPECT_THROW(parse_modl("prime 5\n"), ParseError);

  const auto gens = parse_modl_generators("1,1,0,1; -1,0,6,1", 5);
  ASSERT_EQ(gens.size(), 2U);
  EXPECT_EQ(gens[1], (ModlRep::Matrix{4, 0, 1, 1}));
  EXPECT_THROW(parse_modl_generators("1,1,0", 5), InvalidArgument);
  EXPECT_THROW(parse_modl_generators("", 5), InvalidArgument);
}
