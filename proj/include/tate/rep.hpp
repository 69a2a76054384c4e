#pragma once

// Exact matrix representations of finite permutation groups.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tate/exact.hpp"
#include "tate/group.hpp"

namespace tate {

/// Homomorphism checks run over all pairs up to this group order, and over
/// element x generator pairs beyond it.
inline constexpr std::size_t kAllPairsCheckLimit = 128;

class MatrixRep {
 public:
  /// Extends generator images along the BFS tree of `group`, then checks the
  /// homomorphism property. Throws SingularImage or NotAHomomorphism.
  static MatrixRep from_generator_images(GroupPtr group, std::vector<ExactMatrix> images);
  /// Takes an image per element; all pairs are checked when |G| <= all_pairs_limit.
  static MatrixRep from_element_images(GroupPtr group, std::vector<ExactMatrix> images,
                                       std::size_t all_pairs_limit = kAllPairsCheckLimit);

  static MatrixRep trivial(GroupPtr group, std::size_t degree = 1);
  /// Left regular representation: g e_x = e_{gx}.
  static MatrixRep regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  int conductor() const { return conductor_; }
  const ExactMatrix& operator()(Elem g) const { return images_[g]; }
  std::span<const ExactMatrix> images() const { return images_; }

  Character character() const;

  friend MatrixRep tensor(const MatrixRep& a, const MatrixRep& b);
  friend MatrixRep twist(const MatrixRep& rho, const LinearCharacter& lambda);
  friend MatrixRep restrict(const MatrixRep& rho, const Subgroup& k);
  friend MatrixRep conj_rep(const MatrixRep& rho, const Subgroup& h, Elem g0);

 private:
  MatrixRep(GroupPtr group, std::vector<ExactMatrix> images);

  GroupPtr group_;
  std::size_t degree_ = 0;
  int conductor_ = 1;
  std::vector<ExactMatrix> images_;
};

/// Kronecker product, g -> a(g) (x) b(g).
MatrixRep tensor(const MatrixRep& a, const MatrixRep& b);
MatrixRep twist(const MatrixRep& rho, const LinearCharacter& lambda);
/// Restriction to K <= G; the result is a representation of `k.group()`.
MatrixRep restrict(const MatrixRep& rho, const Subgroup& k);
/// For rho a representation of `h.group()`: h -> rho(g0 h g0^{-1}). Throws NotNormal.
MatrixRep conj_rep(const MatrixRep& rho, const Subgroup& h, Elem g0);

/// First pair (g, h) with rho(g) rho(h) != rho(gh), scanning all pairs or element x generator pairs.
std::optional<std::pair<Elem, Elem>> find_homomorphism_violation(const MatrixRep& rho, bool all_pairs);

/// Dimension of the common kernel of rho(s) - I over the generators s.
std::size_t invariant_dim_kernel(const MatrixRep& rho);
/// <chi_rho, 1>.
std::size_t invariant_dim_char(const MatrixRep& rho);

struct LinearConstituent {
  LinearCharacter character;
  std::size_t multiplicity;
};

/// Every linear character with positive multiplicity, in enumeration order.
std::vector<LinearConstituent> one_dim_constituents(const MatrixRep& rho);
std::vector<LinearConstituent> one_dim_constituents(const Character& chi);

/// First linear character lambda with chi_b = chi_a * lambda.
std::optional<LinearCharacter> twist_equivalent(const Character& a, const Character& b);
std::optional<LinearCharacter> twist_equivalent(const MatrixRep& a, const MatrixRep& b);

/// Two-dimensional representation over the prime field F_ell, by generator images.
class ModlRep {
 public:
  using Matrix = std::array<unsigned, 4>;  // row-major a b / c d

  ModlRep(unsigned ell, std::vector<Matrix> generators);

  unsigned ell() const { return ell_; }
  std::span<const Matrix> generators() const { return generators_; }

 private:
  unsigned ell_;
  std::vector<Matrix> generators_;
};

inline constexpr std::size_t kMaxModlClosure = 1000000;

/// True when the group generated by the images contains SL2(F_ell).
bool sl2_image_check(const ModlRep& rep);
/// Order of the generated matrix group.
std::size_t modl_image_order(const ModlRep& rep);

}  // namespace tate
