#pragma once

// Plain-text fixtures.
//
// Model file:
//   points P
//   <one generator per line, disjoint cycles over 1..P>
//   <blank line>
//   subgroup: g1,g3          (optional; H = G when absent)
//   conductor N
//   degree n                 (optional; otherwise read off the first row)
//   <for each generator of H, n rows of n literals>
//   subfieldK: (1 2); (3 4)  (optional; generators of K <= H)
//
// A literal is `N:c0,c1,...`, or a plain rational on rows with no `:` at all.
// `#` starts a comment.
//
// Mod-ell file: `ell p`, then 2x2 integer matrices as pairs of rows.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tate/asai.hpp"
#include "tate/group.hpp"
#include "tate/rep.hpp"

namespace tate {

struct ModelFixture {
  GroupPtr group;
  std::vector<std::size_t> subgroup_generators;  // 0-based generator lines
  Subgroup h;
  MatrixRep rho;
  std::optional<Subgroup> k;  // subgroup of h.group()

  GaloisModel model() const { return GaloisModel(h, rho); }
};

/// Throws ParseError with a 1-based line number; representation errors
/// (NotAHomomorphism, SingularImage) propagate unchanged.
ModelFixture parse_model(std::string_view text);
ModelFixture load_model(const std::filesystem::path& path);

/// A model file with H = G describing `rho`; parse_model reads it back.
std::string write_rep_model(const MatrixRep& rho);

/// One row of cyclotomic literals.
std::vector<Cyclotomic> parse_literal_row(std::string_view row);

ModlRep parse_modl(std::string_view text);
/// Row-major 2x2 matrices, entries separated by ',' and matrices by ';', reduced mod ell.
std::vector<ModlRep::Matrix> parse_modl_generators(std::string_view text, unsigned ell);

std::string read_file(const std::filesystem::path& path);

}  // namespace tate
