#pragma once

// Weight multisets of representations of GL2 x ... x GL2 (r factors).
//
// A weight prod_i a_i^{x_i} b_i^{y_i} is stored as the interleaved exponent
// vector (x_1, y_1, ..., x_r, y_r). The torus element diag(a, a^{-1} b) of one
// factor acts on the standard representation with weights a and a^{-1} b.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tate/error.hpp"

namespace tate {

inline constexpr std::int64_t kMaxWeightDimension = std::int64_t{1} << 20;

struct Weight {
  std::vector<int> exps;

  int factors() const { return static_cast<int>(exps.size() / 2); }
  int x(int i) const { return exps[2 * i]; }
  int y(int i) const { return exps[2 * i + 1]; }

  auto operator<=>(const Weight&) const = default;
};

/// Highest weight (k, m) of Sym^k R (x) det(R)^m for one GL2 factor.
struct HighestWeight {
  int k = 0;
  int m = 0;

  auto operator<=>(const HighestWeight&) const = default;
};

using HighestWeightTuple = std::vector<HighestWeight>;

/// Laurent polynomial in a_1, b_1, ..., a_r, b_r with integer coefficients.
/// Zero coefficients are never stored.
class CharacterPoly {
 public:
  explicit CharacterPoly(int factors);

  /// Character of the trivial representation (the empty product).
  static CharacterPoly trivial(int factors);

  int factors() const { return factors_; }
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  std::int64_t multiplicity(const Weight& w) const;

  /// Adds `mult` to the coefficient of `w`, dropping it if it cancels.
  void add(const Weight& w, std::int64_t mult);

  /// Value at a_i = b_i = 1.
  std::int64_t dimension() const;

  friend CharacterPoly operator*(const CharacterPoly& p, const CharacterPoly& q);
  friend CharacterPoly operator+(const CharacterPoly& p, const CharacterPoly& q);
  friend CharacterPoly operator-(const CharacterPoly& p, const CharacterPoly& q);
  friend bool operator==(const CharacterPoly&, const CharacterPoly&) = default;

 private:
  int factors_;
  std::map<Weight, std::int64_t> terms_;
};

struct Constituent {
  HighestWeightTuple highest_weight;
  std::int64_t multiplicity = 0;

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// prod_i sum_{j=0}^{k_i} a_i^{k_i - 2j} b_i^{m_i + j}.
CharacterPoly irr_char(const HighestWeightTuple& hw);

/// a_j + a_j^{-1} b_j: the standard representation of factor j (0-based),
/// trivial on the other factors.
CharacterPoly standard_char(int factors, int j = 0);

CharacterPoly power(const CharacterPoly& p, unsigned e);

/// Peels off the lex-largest weight (ordering x_1..x_r, then y_1..y_r) until
/// nothing is left. Entries come out in peeling order.
std::vector<Constituent> decompose(const CharacterPoly& p);

std::int64_t one_dim_count(const CharacterPoly& p);
std::vector<Constituent> one_dim_types(const CharacterPoly& p);

/// One line per term, `x1 y1 ... xr yr : mult`, sorted lexicographically.
std::string to_text(const CharacterPoly& p);
CharacterPoly parse_character_poly(std::string_view text);

std::string to_string(const HighestWeightTuple& hw);

}  // namespace tate
