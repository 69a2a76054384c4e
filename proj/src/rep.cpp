#include "tate/rep.hpp"

#include <deque>
#include <numeric>

namespace tate {

namespace {

std::size_t to_count(const Rational& q, const char* what) {
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) {
    throw NotACharacter(std::string(what) + " " + to_string(q) + " is not a nonnegative integer");
  }
  return q.get_num().get_ui();
}

}  // namespace

MatrixRep::MatrixRep(GroupPtr group, std::vector<ExactMatrix> images) : group_(std::move(group)), images_(std::move(images)) {
  if (images_.size() != group_->order()) throw InvalidArgument("one image per group element required");
  degree_ = images_.front().rows();
  for (const auto& m : images_) {
    if (!m.is_square() || m.rows() != degree_) throw InvalidArgument("images must be square matrices of one size");
    conductor_ = lcm_conductor(conductor_, m.conductor());
  }
  for (auto& m : images_) {
    if (m.conductor() != conductor_) m = m.embed(conductor_);
  }
}

MatrixRep MatrixRep::from_generator_images(GroupPtr group, std::vector<ExactMatrix> images) {
  const auto gens = group->generators();
  if (images.size() != gens.size()) {
    throw InvalidArgument("expected " + std::to_string(gens.size()) + " generator images, got " + std::to_string(images.size()));
  }
  if (images.empty()) return trivial(group, 1);
  const std::size_t n = images.front().rows();
  int conductor = 1;
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (!images[s].is_square() || images[s].rows() != n) throw InvalidArgument("generator images must be square matrices of one size");
    if (images[s].determinant().is_zero()) throw SingularImage("image of generator " + std::to_string(s + 1) + " is singular");
    conductor = lcm_conductor(conductor, images[s].conductor());
  }
  for (auto& m : images) m = m.embed(conductor);

  std::vector<ExactMatrix> all;
  all.reserve(group->order());
  all.push_back(ExactMatrix::identity(n, conductor));
  for (Elem a = 1; a < group->order(); ++a) all.push_back(all[group->bfs_parent(a)] * images[group->bfs_letter(a)]);
  // a repeated generator must have repeated images
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (!(all[gens[s]] == images[s])) throw NotAHomomorphism(gens[s], FiniteGroup::identity());
  }
  return from_element_images(std::move(group), std::move(all));
}

MatrixRep MatrixRep::from_element_images(GroupPtr group, std::vector<ExactMatrix> images, std::size_t all_pairs_limit) {
  MatrixRep rep(std::move(group), std::move(images));
  if (!rep.images_[FiniteGroup::identity()].is_identity()) throw NotAHomomorphism(FiniteGroup::identity(), FiniteGroup::identity());
  if (const auto bad = find_homomorphism_violation(rep, rep.group_->order() <= all_pairs_limit)) {
    throw NotAHomomorphism(bad->first, bad->second);
  }
  return rep;
}

MatrixRep MatrixRep::trivial(GroupPtr group, std::size_t degree) {
  std::vector<ExactMatrix> images(group->order(), ExactMatrix::identity(degree));
  return MatrixRep(std::move(group), std::move(images));
}

MatrixRep MatrixRep::regular(GroupPtr group) {
  const std::size_t n = group->order();
  std::vector<ExactMatrix> images;
  images.reserve(n);
  for (Elem g = 0; g < n; ++g) {
    std::vector<Cyclotomic> e(n * n);
    for (Elem x = 0; x < n; ++x) e[group->mul(g, x) * n + x] = Cyclotomic(1);
    images.emplace_back(n, n, std::move(e));
  }
  return MatrixRep(std::move(group), std::move(images));
}

Character MatrixRep::character() const {
  std::vector<Cyclotomic> v;
  for (const auto& cls : group_->conjugacy_classes()) v.push_back(images_[cls.front()].trace());
  return Character(group_, std::move(v));
}

MatrixRep tensor(const MatrixRep& a, const MatrixRep& b) {
  if (!same_group(a.group_, b.group_)) throw GroupMismatch();
  std::vector<ExactMatrix> images;
  images.reserve(a.images_.size());
  for (std::size_t g = 0; g < a.images_.size(); ++g) images.push_back(kron(a.images_[g], b.images_[g]));
  return MatrixRep(a.group_, std::move(images));
}

MatrixRep twist(const MatrixRep& rho, const LinearCharacter& lambda) {
  if (!same_group(rho.group_, lambda.group())) throw GroupMismatch();
  std::vector<ExactMatrix> images;
  images.reserve(rho.images_.size());
  for (Elem g = 0; g < rho.images_.size(); ++g) images.push_back(rho.images_[g].scaled(lambda.value(g)));
  return MatrixRep(rho.group_, std::move(images));
}

MatrixRep restrict(const MatrixRep& rho, const Subgroup& k) {
  if (!same_group(rho.group_, k.parent())) throw GroupMismatch();
  std::vector<ExactMatrix> images;
  for (Elem x = 0; x < k.order(); ++x) images.push_back(rho.images_[k.to_parent(x)]);
  return MatrixRep(k.group(), std::move(images));
}

MatrixRep conj_rep(const MatrixRep& rho, const Subgroup& h, Elem g0) {
  if (!same_group(rho.group_, h.group())) throw GroupMismatch();
  const auto& g = *h.parent();
  std::vector<ExactMatrix> images;
  for (Elem x = 0; x < h.order(); ++x) {
    const auto y = h.from_parent(g.conjugate(g0, h.to_parent(x)));
    if (!y) throw NotNormal();
    images.push_back(rho.images_[*y]);
  }
  return MatrixRep(h.group(), std::move(images));
}

std::optional<std::pair<Elem, Elem>> find_homomorphism_violation(const MatrixRep& rho, bool all_pairs) {
  const auto& g = *rho.group();
  for (Elem a = 0; a < g.order(); ++a) {
    if (all_pairs) {
      for (Elem b = 0; b < g.order(); ++b) {
        if (!(rho(a) * rho(b) == rho(g.mul(a, b)))) return std::pair{a, b};
      }
    } else {
      for (Elem s : g.generators()) {
        if (!(rho(a) * rho(s) == rho(g.mul(a, s)))) return std::pair{a, s};
      }
    }
  }
  return std::nullopt;
}

std::size_t invariant_dim_kernel(const MatrixRep& rho) {
  const auto gens = rho.group()->generators();
  if (gens.empty()) return rho.degree();
  const auto id = ExactMatrix::identity(rho.degree(), rho.conductor());
  ExactMatrix stacked = rho(gens.front()) - id;
  for (std::size_t s = 1; s < gens.size(); ++s) stacked = vstack(stacked, rho(gens[s]) - id);
  return kernel_dim(stacked);
}

std::size_t invariant_dim_char(const MatrixRep& rho) {
  const auto chi = rho.character();
  return to_count(inner_product(chi, Character::trivial(rho.group())), "trivial multiplicity");
}

std::vector<LinearConstituent> one_dim_constituents(const Character& chi) {
  std::vector<LinearConstituent> out;
  for (auto& lambda : linear_characters(chi.group())) {
    const auto mult = to_count(inner_product(chi, lambda.to_character()), "multiplicity");
    if (mult > 0) out.push_back(LinearConstituent{std::move(lambda), mult});
  }
  return out;
}

std::vector<LinearConstituent> one_dim_constituents(const MatrixRep& rho) { return one_dim_constituents(rho.character()); }

std::optional<LinearCharacter> twist_equivalent(const Character& a, const Character& b) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch();
  if (!(a.degree() == b.degree())) return std::nullopt;
  const auto& classes = a.group()->conjugacy_classes();
  for (auto& lambda : linear_characters(a.group())) {
    bool match = true;
    for (std::size_t c = 0; c < classes.size() && match; ++c) {
      const Elem x = classes[c].front();
      match = b(x) == a(x) * lambda.value(x);
    }
    if (match) return std::move(lambda);
  }
  return std::nullopt;
}

std::optional<LinearCharacter> twist_equivalent(const MatrixRep& a, const MatrixRep& b) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch();
  if (a.degree() != b.degree()) return std::nullopt;
  return twist_equivalent(a.character(), b.character());
}

// ---------------------------------------------------------------------------

namespace {

bool is_small_prime(unsigned p) {
  if (p < 2 || p > 13) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

ModlRep::ModlRep(unsigned ell, std::vector<Matrix> generators) : ell_(ell), generators_(std::move(generators)) {
  if (!is_small_prime(ell_)) throw PrimeBound("ell = " + std::to_string(ell_) + " is not a prime in [2, 13]");
  for (std::size_t s = 0; s < generators_.size(); ++s) {
    auto& m = generators_[s];
    for (auto& e : m) e %= ell_;
    if ((m[0] * m[3] + ell_ * ell_ - (m[1] * m[2]) % ell_) % ell_ == 0) {
      throw SingularImage("generator " + std::to_string(s + 1) + " is singular mod " + std::to_string(ell_));
    }
  }
}

namespace {

template <class Visit>
void modl_closure(const ModlRep& rep, Visit visit) {
  const unsigned p = rep.ell();
  auto encode = [p](const ModlRep::Matrix& m) { return ((m[0] * p + m[1]) * p + m[2]) * p + m[3]; };
  auto mul = [p](const ModlRep::Matrix& a, const ModlRep::Matrix& b) {
    return ModlRep::Matrix{(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
                           (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
  };
  std::vector<bool> seen(static_cast<std::size_t>(p) * p * p * p, false);
  std::deque<ModlRep::Matrix> queue{ModlRep::Matrix{1, 0, 0, 1}};
  seen[encode(queue.front())] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    const auto m = queue.front();
    queue.pop_front();
    if (++count > kMaxModlClosure) throw BoundExceeded("mod-ell closure exceeds 10^6 elements");
    visit(m);
    for (const auto& s : rep.generators()) {
      const auto next = mul(m, s);
      const auto code = encode(next);
      if (!seen[code]) {
        seen[code] = true;
        queue.push_back(next);
      }
    }
  }
}

}  // namespace

std::size_t modl_image_order(const ModlRep& rep) {
  std::size_t n = 0;
  modl_closure(rep, [&](const ModlRep::Matrix&) { ++n; });
  return n;
}

bool sl2_image_check(const ModlRep& rep) {
  const unsigned p = rep.ell();
  std::size_t special = 0;
  modl_closure(rep, [&](const ModlRep::Matrix& m) {
    if ((m[0] * m[3] + p * p - (m[1] * m[2]) % p) % p == 1) ++special;
  });
  return special == static_cast<std::size_t>(p) * (p * p - 1);
}

}  // namespace tate
