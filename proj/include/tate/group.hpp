#pragma once

// Finite permutation groups with a full Cayley table, subgroups, cosets,
// conjugacy classes, linear characters and class functions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tate/exact.hpp"

namespace tate {

inline constexpr std::size_t kMaxPoints = 32;
inline constexpr std::size_t kMaxGroupOrder = 512;
inline constexpr std::size_t kMaxAbelianization = 64;

/// Element index into a FiniteGroup; 0 is always the identity.
using Elem = std::uint32_t;

/// Permutation of the points 0..n-1. Products compose as functions:
/// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(std::size_t points);

  /// Disjoint-cycle notation over 1-based points, e.g. `(1 2)(3 4)`; `()` is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t points);

  std::size_t points() const { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  std::span<const std::uint8_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Raw data of one linear character: value at element g is zeta_modulus^exponents[g].
struct LinearCharacterData {
  unsigned modulus = 1;
  std::vector<unsigned> exponents;
};

class FiniteGroup {
 public:
  /// Breadth-first closure of the generators. Element 0 is the identity and
  /// every element records the generator word along which it was discovered.
  static GroupPtr from_generators(std::vector<Permutation> generators, std::size_t points);

  std::size_t order() const { return elements_.size(); }
  std::size_t points() const { return points_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g h g^{-1}
  Elem conjugate(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }
  Elem power(Elem a, long long k) const;
  std::size_t element_order(Elem a) const;
  /// lcm of all element orders.
  std::size_t exponent() const;

  const Permutation& element(Elem a) const { return elements_[a]; }
  std::optional<Elem> index_of(const Permutation& p) const;

  std::span<const Permutation> generator_perms() const { return generator_perms_; }
  /// Element index of each generator, in generator order.
  std::span<const Elem> generators() const { return generators_; }

  /// Generator indices w with element = gen[w_0] * gen[w_1] * ...
  std::span<const std::uint16_t> word(Elem a) const { return words_[a]; }
  /// BFS predecessor p and generator s with a = p * gen[s]; undefined for the identity.
  Elem bfs_parent(Elem a) const { return parent_[a]; }
  std::uint16_t bfs_letter(Elem a) const { return letter_[a]; }

  /// Classes sorted by smallest member, members ascending.
  const std::vector<std::vector<Elem>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(Elem a) const { return class_of_[a]; }

  /// Linear characters in deterministic order; throws AbelianizationBound.
  const std::vector<LinearCharacterData>& linear_character_data() const;

  /// Rebuilds every element from its stored word and rechecks the table; used by tests.
  bool validate() const;

  bool same_as(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;

  std::size_t points_ = 0;
  std::vector<Permutation> generator_perms_;
  std::vector<Elem> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, Elem> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::vector<std::uint16_t>> words_;
  std::vector<Elem> parent_;
  std::vector<std::uint16_t> letter_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::size_t> class_of_;

  mutable std::once_flag linear_once_;
  mutable std::vector<LinearCharacterData> linear_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Subgroup of a parent group, also materialized as a FiniteGroup of its own
/// (built from the permutations of its generators) with index maps both ways.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::span<const Elem> generators);

  const GroupPtr& parent() const { return parent_; }
  std::span<const Elem> members() const { return members_; }
  std::span<const Elem> generators() const { return generators_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Elem g) const { return from_parent_[g] >= 0; }

  /// The subgroup as a standalone group; its element k is parent element to_parent(k).
  const GroupPtr& group() const { return group_; }
  Elem to_parent(Elem k) const { return to_parent_[k]; }
  std::optional<Elem> from_parent(Elem g) const;

 private:
  GroupPtr parent_;
  std::vector<Elem> generators_;
  std::vector<Elem> members_;
  GroupPtr group_;
  std::vector<Elem> to_parent_;
  std::vector<long> from_parent_;
};

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> seeds);
Subgroup whole_group(const GroupPtr& g);
/// Subgroup of `g` generated by the given permutations; throws if one is not in `g`.
Subgroup subgroup_from_perms(const GroupPtr& g, std::span<const Permutation> perms);
Subgroup commutator_subgroup(const GroupPtr& g);

/// Checks g h g^{-1} in H for every generator g of the parent and every h in H.
bool is_normal(const Subgroup& h);

struct Coset {
  Elem representative;  // smallest member
  std::vector<Elem> members;
};

/// Left cosets gH sorted by representative; the first one is H itself.
std::vector<Coset> left_cosets(const Subgroup& h);

/// Class function, stored per conjugacy class.
class Character {
 public:
  Character(GroupPtr group, std::vector<Cyclotomic> class_values);
  static Character from_element_values(const GroupPtr& group, std::span<const Cyclotomic> values);
  static Character trivial(const GroupPtr& group);
  static Character regular(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  std::span<const Cyclotomic> class_values() const { return values_; }
  const Cyclotomic& operator()(Elem g) const { return values_[group_->class_of(g)]; }
  const Cyclotomic& degree() const { return values_[0]; }

  friend Character operator*(const Character& a, const Character& b);
  friend Character operator+(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b);

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum_g a(g) b(g^{-1}), as a cyclotomic number.
Cyclotomic pairing(const Character& a, const Character& b);
/// pairing() required to be rational; throws otherwise.
Rational inner_product(const Character& a, const Character& b);

/// Restriction to a subgroup; the result lives on `h.group()`.
Character restrict(const Character& chi, const Subgroup& h);
/// h -> chi(g0 h g0^{-1}) for a class function of the normal subgroup H.
Character conjugate(const Character& chi, const Subgroup& h, Elem g0);

class LinearCharacter {
 public:
  LinearCharacter(GroupPtr group, unsigned modulus, std::vector<unsigned> exponents);
  static LinearCharacter trivial(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  unsigned modulus() const { return modulus_; }
  unsigned exponent(Elem g) const { return exponents_[g]; }
  Cyclotomic value(Elem g) const;
  bool is_trivial() const;
  /// Order of the character as an element of the dual group.
  unsigned order() const;

  LinearCharacter inverse() const;
  Character to_character() const;
  std::string to_string() const;

  friend LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b);
  friend bool operator==(const LinearCharacter& a, const LinearCharacter& b);

 private:
  GroupPtr group_;
  unsigned modulus_;
  std::vector<unsigned> exponents_;
};

/// All |G/[G,G]| linear characters, trivial first, lexicographic in the
/// exponent vector over a cyclic decomposition of the abelianization.
std::vector<LinearCharacter> linear_characters(const GroupPtr& g);

LinearCharacter restrict(const LinearCharacter& chi, const Subgroup& h);
/// h -> chi(g0 h g0^{-1}) on the normal subgroup H.
LinearCharacter conjugate(const LinearCharacter& chi, const Subgroup& h, Elem g0);

}  // namespace tate
