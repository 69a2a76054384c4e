#include "tate/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace tate {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.size() > kMaxPoints) throw BoundExceeded("permutation on more than " + std::to_string(kMaxPoints) + " points");
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw InvalidArgument("image list is not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t points) {
  std::vector<std::uint8_t> images(points);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t points) {
  if (points > kMaxPoints) throw BoundExceeded("point set larger than " + std::to_string(kMaxPoints));
  std::vector<std::uint8_t> images(points);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  std::vector<bool> used(points, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InvalidArgument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) throw InvalidArgument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
        ++digits;
      }
      if (digits == 0) throw InvalidArgument("unexpected character in cycle");
      if (value < 1 || value > points) throw InvalidArgument("point " + std::to_string(value) + " outside 1.." + std::to_string(points));
      if (used[value - 1]) throw InvalidArgument("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<std::uint8_t>(x);
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += std::to_string(y + 1);
      first = false;
      y = images_[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.points() != q.points()) throw InvalidArgument("permutations act on different point sets");
  std::vector<std::uint8_t> r(p.points());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = p.images_[q.images_[x]];
  return Permutation(std::move(r));
}

// ---------------------------------------------------------------------------
// FiniteGroup

GroupPtr FiniteGroup::from_generators(std::vector<Permutation> generators, std::size_t points) {
  if (points > kMaxPoints) throw BoundExceeded("point set larger than " + std::to_string(kMaxPoints));
  for (const auto& g : generators) {
    if (g.points() != points) throw InvalidArgument("generator acts on " + std::to_string(g.points()) + " points, expected " + std::to_string(points));
  }
  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->points_ = points;
  grp->generator_perms_ = std::move(generators);

  auto& elems = grp->elements_;
  elems.push_back(Permutation::identity(points));
  grp->index_.emplace(elems[0], 0);
  grp->words_.emplace_back();
  grp->parent_.push_back(0);
  grp->letter_.push_back(0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < grp->generator_perms_.size(); ++s) {
      Permutation next = elems[head] * grp->generator_perms_[s];
      if (grp->index_.count(next) != 0) continue;
      if (elems.size() == kMaxGroupOrder) throw OrderBound("group order exceeds " + std::to_string(kMaxGroupOrder));
      const auto idx = static_cast<Elem>(elems.size());
      grp->index_.emplace(next, idx);
      elems.push_back(std::move(next));
      auto w = grp->words_[head];
      w.push_back(static_cast<std::uint16_t>(s));
      grp->words_.push_back(std::move(w));
      grp->parent_.push_back(static_cast<Elem>(head));
      grp->letter_.push_back(static_cast<std::uint16_t>(s));
    }
  }
  for (const auto& g : grp->generator_perms_) grp->generators_.push_back(grp->index_.at(g));

  const std::size_t n = elems.size();
  grp->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) grp->table_[a * n + b] = grp->index_.at(elems[a] * elems[b]);
  }
  grp->inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) grp->inverse_[a] = grp->index_.at(elems[a].inverse());

  grp->class_of_.assign(n, n);
  for (Elem x = 0; x < n; ++x) {
    if (grp->class_of_[x] != n) continue;
    std::set<Elem> cls;
    for (Elem g = 0; g < n; ++g) cls.insert(grp->conjugate(g, x));
    const std::size_t id = grp->classes_.size();
    for (Elem y : cls) grp->class_of_[y] = id;
    grp->classes_.emplace_back(cls.begin(), cls.end());
  }
  return grp;
}

Elem FiniteGroup::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = identity();
  for (long long i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Elem a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::optional<Elem> FiniteGroup::index_of(const Permutation& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::validate() const {
  const std::size_t n = order();
  for (Elem a = 0; a < n; ++a) {
    Permutation p = Permutation::identity(points_);
    for (auto s : words_[a]) p = p * generator_perms_[s];
    if (!(p == elements_[a])) return false;
    if (mul(a, inv(a)) != identity() || mul(identity(), a) != a || mul(a, identity()) != a) return false;
  }
  // associativity on generator triples against all elements
  for (Elem a = 0; a < n; ++a) {
    for (Elem s : generators_) {
      for (Elem t : generators_) {
        if (mul(mul(a, s), t) != mul(a, mul(s, t))) return false;
      }
    }
  }
  return true;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  return this == &other || (points_ == other.points_ && generator_perms_ == other.generator_perms_);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a && b && a->same_as(*b); }

const std::vector<LinearCharacterData>& FiniteGroup::linear_character_data() const {
  std::call_once(linear_once_, [this] {
    const std::size_t n = order();
    std::vector<Elem> comm;
    {
      std::set<Elem> seeds;
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) seeds.insert(mul(mul(x, y), mul(inv(x), inv(y))));
      }
      // closure inside the table
      std::vector<bool> in(n, false);
      std::deque<Elem> queue{identity()};
      in[identity()] = true;
      while (!queue.empty()) {
        const Elem x = queue.front();
        queue.pop_front();
        comm.push_back(x);
        for (Elem s : seeds) {
          const Elem y = mul(x, s);
          if (!in[y]) {
            in[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    std::sort(comm.begin(), comm.end());
    // coset representative (smallest member) of every element mod [G,G]
    std::vector<Elem> rep(n, static_cast<Elem>(n));
    std::vector<Elem> quotient;
    for (Elem g = 0; g < n; ++g) {
      if (rep[g] != n) continue;
      quotient.push_back(g);
      for (Elem c : comm) rep[mul(g, c)] = g;
    }
    if (quotient.size() > kMaxAbelianization) {
      throw AbelianizationBound("abelianization of order " + std::to_string(quotient.size()) + " exceeds " + std::to_string(kMaxAbelianization));
    }
    auto qmul = [&](Elem a, Elem b) { return rep[mul(a, b)]; };
    auto order_mod = [&](Elem x, const std::vector<bool>& sub) {
      std::size_t k = 1;
      for (Elem y = x; !sub[y]; y = qmul(y, x)) ++k;
      return k;
    };

    // Split off cyclic factors: repeatedly take an element of maximal order in
    // A / C and lift it to an element of the same order.
    std::vector<Elem> basis;
    std::vector<unsigned> orders;
    std::vector<bool> in_c(n, false);
    in_c[identity()] = true;
    std::vector<Elem> c_members{identity()};
    const std::vector<bool> trivial = [&] {
      std::vector<bool> t(n, false);
      t[identity()] = true;
      return t;
    }();
    while (c_members.size() < quotient.size()) {
      Elem best = identity();
      std::size_t best_order = 0;
      for (Elem x : quotient) {
        const std::size_t k = order_mod(x, in_c);
        if (k > best_order) {
          best_order = k;
          best = x;
        }
      }
      std::optional<Elem> lift;
      std::vector<Elem> candidates;
      for (Elem c : c_members) candidates.push_back(qmul(best, c));
      std::sort(candidates.begin(), candidates.end());
      for (Elem y : candidates) {
        if (order_mod(y, trivial) == best_order) {
          lift = y;
          break;
        }
      }
      if (!lift) throw Error("internal: no lift of maximal order in abelianization");
      basis.push_back(*lift);
      orders.push_back(static_cast<unsigned>(best_order));
      std::vector<Elem> grown;
      Elem p = identity();
      for (std::size_t k = 0; k < best_order; ++k) {
        for (Elem c : c_members) grown.push_back(qmul(p, c));
        p = qmul(p, *lift);
      }
      c_members = std::move(grown);
      for (Elem c : c_members) in_c[c] = true;
    }

    // coordinates of each quotient element in the basis
    const std::size_t rank = basis.size();
    std::vector<std::vector<unsigned>> coords(n);
    std::vector<unsigned> c(rank, 0);
    for (std::size_t count = 0; count < quotient.size(); ++count) {
      Elem x = identity();
      for (std::size_t i = 0; i < rank; ++i) x = qmul(x, rep[power(basis[i], c[i])]);
      coords[x] = c;
      for (std::size_t i = rank; i-- > 0;) {
        if (++c[i] < orders[i]) break;
        c[i] = 0;
      }
    }
    for (Elem x : quotient) {
      if (coords[x].size() != rank) throw Error("internal: abelianization basis does not span");
    }
    unsigned modulus = 1;
    for (auto k : orders) modulus = std::lcm(modulus, k);

    std::vector<unsigned> e(rank, 0);
    for (std::size_t count = 0; count < quotient.size(); ++count) {
      LinearCharacterData data;
      data.modulus = modulus;
      data.exponents.resize(n);
      for (Elem g = 0; g < n; ++g) {
        const auto& cg = coords[rep[g]];
        unsigned long long acc = 0;
        for (std::size_t i = 0; i < rank; ++i) acc += static_cast<unsigned long long>(e[i]) * cg[i] * (modulus / orders[i]);
        data.exponents[g] = static_cast<unsigned>(acc % modulus);
      }
      linear_.push_back(std::move(data));
      for (std::size_t i = rank; i-- > 0;) {
        if (++e[i] < orders[i]) break;
        e[i] = 0;
      }
    }
  });
  return linear_;
}

// ---------------------------------------------------------------------------
// Subgroups and cosets

Subgroup::Subgroup(GroupPtr parent, std::span<const Elem> generators)
    : parent_(std::move(parent)), generators_(generators.begin(), generators.end()) {
  const std::size_t n = parent_->order();
  for (Elem g : generators_) {
    if (g >= n) throw InvalidArgument("subgroup generator is not an element of the group");
  }
  std::vector<bool> in(n, false);
  std::deque<Elem> queue{FiniteGroup::identity()};
  in[FiniteGroup::identity()] = true;
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    members_.push_back(x);
    for (Elem s : generators_) {
      const Elem y = parent_->mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(members_.begin(), members_.end());

  std::vector<Permutation> perms;
  for (Elem g : generators_) perms.push_back(parent_->element(g));
  group_ = FiniteGroup::from_generators(std::move(perms), parent_->points());
  from_parent_.assign(n, -1);
  for (Elem k = 0; k < group_->order(); ++k) {
    const Elem g = *parent_->index_of(group_->element(k));
    to_parent_.push_back(g);
    from_parent_[g] = static_cast<long>(k);
  }
}

std::optional<Elem> Subgroup::from_parent(Elem g) const {
  if (g >= from_parent_.size() || from_parent_[g] < 0) return std::nullopt;
  return static_cast<Elem>(from_parent_[g]);
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> seeds) { return Subgroup(g, seeds); }

Subgroup whole_group(const GroupPtr& g) { return Subgroup(g, g->generators()); }

Subgroup subgroup_from_perms(const GroupPtr& g, std::span<const Permutation> perms) {
  std::vector<Elem> seeds;
  for (const auto& p : perms) {
    const auto idx = g->index_of(p);
    if (!idx) throw InvalidArgument("permutation " + p.to_cycles() + " is not in the group");
    seeds.push_back(*idx);
  }
  return Subgroup(g, seeds);
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::set<Elem> seeds;
  for (Elem x = 0; x < g->order(); ++x) {
    for (Elem y = 0; y < g->order(); ++y) {
      const Elem c = g->mul(g->mul(x, y), g->mul(g->inv(x), g->inv(y)));
      if (c != FiniteGroup::identity()) seeds.insert(c);
    }
  }
  const std::vector<Elem> v(seeds.begin(), seeds.end());
  return Subgroup(g, v);
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent();
  for (Elem s : g.generators()) {
    for (Elem x : h.members()) {
      if (!h.contains(g.conjugate(s, x))) return false;
    }
  }
  return true;
}

std::vector<Coset> left_cosets(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<bool> done(g.order(), false);
  std::vector<Coset> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    Coset c{x, {}};
    for (Elem m : h.members()) {
      const Elem y = g.mul(x, m);
      done[y] = true;
      c.members.push_back(y);
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Class functions

Character::Character(GroupPtr group, std::vector<Cyclotomic> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (values_.size() != group_->conjugacy_classes().size()) throw InvalidArgument("one value per conjugacy class required");
}

Character Character::from_element_values(const GroupPtr& group, std::span<const Cyclotomic> values) {
  if (values.size() != group->order()) throw InvalidArgument("one value per element required");
  std::vector<Cyclotomic> cls;
  for (const auto& members : group->conjugacy_classes()) {
    const Cyclotomic& v = values[members.front()];
    for (Elem x : members) {
      if (!(values[x] == v)) throw InvalidArgument("values are not constant on conjugacy classes");
    }
    cls.push_back(v);
  }
  return Character(group, std::move(cls));
}

Character Character::trivial(const GroupPtr& group) {
  return Character(group, std::vector<Cyclotomic>(group->conjugacy_classes().size(), Cyclotomic(1)));
}

Character Character::regular(const GroupPtr& group) {
  std::vector<Cyclotomic> v(group->conjugacy_classes().size(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long>(group->order()));
  return Character(group, std::move(v));
}

Character operator*(const Character& a, const Character& b) {
  if (!same_group(a.group_, b.group_)) throw GroupMismatch();
  std::vector<Cyclotomic> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return Character(a.group_, std::move(v));
}

Character operator+(const Character& a, const Character& b) {
  if (!same_group(a.group_, b.group_)) throw GroupMismatch();
  std::vector<Cyclotomic> v(a.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
  return Character(a.group_, std::move(v));
}

bool operator==(const Character& a, const Character& b) {
  return same_group(a.group_, b.group_) && a.values_ == b.values_;
}

Cyclotomic pairing(const Character& a, const Character& b) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch();
  const auto& g = *a.group();
  Cyclotomic total(0);
  for (const auto& members : g.conjugacy_classes()) {
    const Elem x = members.front();
    const Cyclotomic term = a(x) * b(g.inv(x));
    if (!term.is_zero()) total += term * Cyclotomic(static_cast<long>(members.size()));
  }
  return total * Cyclotomic(make_rational(1, static_cast<long>(g.order())));
}

Rational inner_product(const Character& a, const Character& b) {
  const auto q = pairing(a, b).as_rational();
  if (!q) throw InvalidArgument("inner product is not rational");
  return *q;
}

Character restrict(const Character& chi, const Subgroup& h) {
  if (!same_group(chi.group(), h.parent())) throw GroupMismatch();
  std::vector<Cyclotomic> v;
  for (const auto& members : h.group()->conjugacy_classes()) v.push_back(chi(h.to_parent(members.front())));
  return Character(h.group(), std::move(v));
}

namespace {

Elem conjugate_in_subgroup(const Subgroup& h, Elem g0, Elem k) {
  const auto& g = *h.parent();
  const auto image = h.from_parent(g.conjugate(g0, h.to_parent(k)));
  if (!image) throw NotNormal();
  return *image;
}

}  // namespace

Character conjugate(const Character& chi, const Subgroup& h, Elem g0) {
  if (!same_group(chi.group(), h.group())) throw GroupMismatch();
  std::vector<Cyclotomic> v;
  for (const auto& members : h.group()->conjugacy_classes()) v.push_back(chi(conjugate_in_subgroup(h, g0, members.front())));
  return Character(h.group(), std::move(v));
}

// ---------------------------------------------------------------------------
// Linear characters

LinearCharacter::LinearCharacter(GroupPtr group, unsigned modulus, std::vector<unsigned> exponents)
    : group_(std::move(group)), modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ == 0) throw InvalidArgument("character modulus must be positive");
  if (exponents_.size() != group_->order()) throw InvalidArgument("one exponent per element required");
  for (auto& e : exponents_) e %= modulus_;
}

LinearCharacter LinearCharacter::trivial(const GroupPtr& group) {
  return LinearCharacter(group, 1, std::vector<unsigned>(group->order(), 0));
}

Cyclotomic LinearCharacter::value(Elem g) const { return cyc_root(static_cast<int>(modulus_), exponents_[g]); }

bool LinearCharacter::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e == 0; });
}

unsigned LinearCharacter::order() const {
  unsigned o = 1;
  for (auto e : exponents_) o = std::lcm(o, modulus_ / std::gcd(modulus_, e));
  return o;
}

LinearCharacter LinearCharacter::inverse() const {
  std::vector<unsigned> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (modulus_ - exponents_[i]) % modulus_;
  return LinearCharacter(group_, modulus_, std::move(e));
}

Character LinearCharacter::to_character() const {
  std::vector<Cyclotomic> v;
  v.reserve(exponents_.size());
  for (Elem g = 0; g < exponents_.size(); ++g) v.push_back(value(g));
  return Character::from_element_values(group_, v);
}

std::string LinearCharacter::to_string() const {
  // values on the generators, as exponents of zeta_modulus
  std::string s = "zeta" + std::to_string(modulus_) + "^[";
  bool first = true;
  for (Elem g : group_->generators()) {
    if (!first) s += ",";
    s += std::to_string(exponents_[g]);
    first = false;
  }
  return s + "]";
}

LinearCharacter operator*(const LinearCharacter& a, const LinearCharacter& b) {
  if (!same_group(a.group_, b.group_)) throw GroupMismatch();
  const unsigned m = std::lcm(a.modulus_, b.modulus_);
  std::vector<unsigned> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = (a.exponents_[i] * (m / a.modulus_) + b.exponents_[i] * (m / b.modulus_)) % m;
  }
  return LinearCharacter(a.group_, m, std::move(e));
}

bool operator==(const LinearCharacter& a, const LinearCharacter& b) {
  if (!same_group(a.group_, b.group_)) return false;
  const unsigned long long mm = static_cast<unsigned long long>(a.modulus_) * b.modulus_;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if ((static_cast<unsigned long long>(a.exponents_[i]) * b.modulus_) % mm != (static_cast<unsigned long long>(b.exponents_[i]) * a.modulus_) % mm) {
      return false;
    }
  }
  return true;
}

std::vector<LinearCharacter> linear_characters(const GroupPtr& g) {
  std::vector<LinearCharacter> out;
  for (const auto& data : g->linear_character_data()) out.emplace_back(g, data.modulus, data.exponents);
  return out;
}

LinearCharacter restrict(const LinearCharacter& chi, const Subgroup& h) {
  if (!same_group(chi.group(), h.parent())) throw GroupMismatch();
  std::vector<unsigned> e;
  for (Elem k = 0; k < h.group()->order(); ++k) e.push_back(chi.exponent(h.to_parent(k)));
  return LinearCharacter(h.group(), chi.modulus(), std::move(e));
}

LinearCharacter conjugate(const LinearCharacter& chi, const Subgroup& h, Elem g0) {
  if (!same_group(chi.group(), h.group())) throw GroupMismatch();
  std::vector<unsigned> e;
  for (Elem k = 0; k < h.group()->order(); ++k) e.push_back(chi.exponent(conjugate_in_subgroup(h, g0, k)));
  return LinearCharacter(h.group(), chi.modulus(), std::move(e));
}

}  // namespace tate
