#include "tate/asai.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tate/formulas.hpp"

namespace tate {

GaloisModel::GaloisModel(Subgroup h, MatrixRep rho)
    : h_(std::move(h)), rho_(std::move(rho)), chi_(rho_.character()) {
  if (!same_group(rho_.group(), h_.group())) throw GroupMismatch();
  if (!is_normal(h_)) throw NotNormal();
  cosets_ = left_cosets(h_);
  coset_of_.assign(group()->order(), 0);
  for (std::size_t i = 0; i < cosets_.size(); ++i) {
    for (Elem g : cosets_[i].members) coset_of_[g] = i;
  }
}

std::vector<Elem> GaloisModel::representatives() const {
  std::vector<Elem> out;
  for (const auto& c : cosets_) out.push_back(c.representative);
  return out;
}

std::size_t max_induced_degree() {
  constexpr std::size_t kDefault = 4096;
  constexpr std::size_t kHard = std::size_t{1} << 20;
  const char* env = std::getenv("ASAI_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidArgument(std::string("ASAI_MAX_DEGREE is not a positive integer: ") + env);
  return std::min<std::size_t>(v, kHard);
}

namespace {

std::size_t induced_degree(std::size_t n, std::size_t d) {
  const std::size_t cap = max_induced_degree();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n != 0 && total > cap / n) throw DegreeBound("induced degree " + std::to_string(n) + "^" + std::to_string(d) + " exceeds " + std::to_string(cap));
    total *= n;
  }
  return total;
}

}  // namespace

MatrixRep tensor_induce(const GaloisModel& model) { return tensor_induce(model, model.representatives()); }

MatrixRep tensor_induce(const GaloisModel& model, std::span<const Elem> reps) {
  const auto& g = *model.group();
  const auto& h = model.subgroup();
  const std::size_t d = model.index();
  if (reps.size() != d) throw InvalidArgument("one representative per coset required");
  std::vector<std::size_t> slot_of_coset(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t c = model.coset_of(reps[i]);
    if (slot_of_coset[c] != d) throw InvalidArgument("two representatives lie in one coset");
    slot_of_coset[c] = i;
  }
  const std::size_t n = model.rho().degree();
  const std::size_t dim = induced_degree(n, d);
  const int conductor = model.rho().conductor();

  std::vector<ExactMatrix> images;
  images.reserve(g.order());
  std::vector<std::size_t> sigma(d);
  std::vector<const ExactMatrix*> parts(d);
  std::vector<std::vector<Cyclotomic>> slot_vec(d);
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < d; ++i) {
      const Elem gt = g.mul(x, reps[i]);
      sigma[i] = slot_of_coset[model.coset_of(gt)];
      const Elem hx = g.mul(g.inv(reps[sigma[i]]), gt);
      parts[i] = &model.rho()(*h.from_parent(hx));
    }
    std::vector<Cyclotomic> entries(dim * dim, Cyclotomic(0, conductor));
    std::vector<std::size_t> w(d, 0);
    for (std::size_t col = 0; col < dim; ++col) {
      // slot s(i) of the image receives column w(i) of rho(h_i)
      for (std::size_t i = 0; i < d; ++i) {
        auto& v = slot_vec[sigma[i]];
        v.clear();
        for (std::size_t r = 0; r < n; ++r) v.push_back((*parts[i])(r, w[i]));
      }
      std::vector<std::pair<std::size_t, Cyclotomic>> acc{{0, Cyclotomic(1, conductor)}};
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::pair<std::size_t, Cyclotomic>> next;
        for (const auto& [idx, val] : acc) {
          for (std::size_t r = 0; r < n; ++r) {
            if (slot_vec[j][r].is_zero()) continue;
            next.emplace_back(idx * n + r, val * slot_vec[j][r]);
          }
        }
        acc = std::move(next);
      }
      for (auto& [row, val] : acc) entries[row * dim + col] = std::move(val);
      for (std::size_t i = d; i-- > 0;) {
        if (++w[i] < n) break;
        w[i] = 0;
      }
    }
    images.emplace_back(dim, dim, std::move(entries));
  }
  return MatrixRep::from_element_images(model.group(), std::move(images), 64);
}

Stabilizer stabilizer(const GaloisModel& model) {
  const auto& g = *model.group();
  const auto& h = model.subgroup();
  Stabilizer stab;
  for (std::size_t i = 0; i < model.index(); ++i) {
    const Elem t = model.representative(i);
    auto w = twist_equivalent(model.rho_character(), conjugate(model.rho_character(), h, t));
    if (!w) continue;
    stab.cosets.push_back(i);
    stab.representatives.push_back(t);
    stab.witnesses.push_back(std::move(*w));
    const auto& members = model.cosets()[i].members;
    stab.preimage.insert(stab.preimage.end(), members.begin(), members.end());
  }
  std::sort(stab.preimage.begin(), stab.preimage.end());
  std::vector<bool> in(g.order(), false);
  for (Elem x : stab.preimage) in[x] = true;
  for (Elem a : stab.representatives) {
    for (Elem b : stab.representatives) {
      if (!in[g.mul(a, b)]) throw Error("twist stabilizer is not closed under the quotient law");
    }
  }
  if (stab.m() == 0 || model.index() % stab.m() != 0) throw Error("stabilizer order does not divide the index");
  return stab;
}

StableReport verify_stable_identity(const GaloisModel& model, const Stabilizer& stab) {
  const auto& h = model.subgroup();
  if (stab.representatives.size() != stab.witnesses.size() || stab.m() == 0) throw InvalidArgument("malformed stabilizer");
  MatrixRep lhs = conj_rep(model.rho(), h, stab.representatives.front());
  MatrixRep power = model.rho();
  LinearCharacter product = stab.witnesses.front();
  for (std::size_t i = 1; i < stab.m(); ++i) {
    lhs = tensor(lhs, conj_rep(model.rho(), h, stab.representatives[i]));
    power = tensor(power, model.rho());
    product = product * stab.witnesses[i];
  }
  const Character left = lhs.character();
  const Character right = twist(power, product).character();
  StableReport report;
  const auto& classes = h.group()->conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Elem x = classes[c].front();
    if (!(left(x) == right(x))) {
      report.holds = false;
      report.diffs.push_back("class " + std::to_string(c) + ": " + left(x).to_string() + " != " + right(x).to_string());
    }
  }
  return report;
}

TateCount brute_tate_count(const GaloisModel& model, const Subgroup& k) {
  const auto& h = model.subgroup();
  if (!same_group(k.parent(), h.group())) throw GroupMismatch();
  induced_degree(model.rho().degree(), model.index());
  MatrixRep t = model.rho();
  for (std::size_t i = 1; i < model.index(); ++i) t = tensor(t, conj_rep(model.rho(), h, model.representative(i)));
  TateCount out;
  out.constituents = one_dim_constituents(restrict(t, k));
  for (const auto& c : out.constituents) out.count += c.multiplicity;
  return out;
}

TateCount brute_tate_count(const GaloisModel& model) { return brute_tate_count(model, whole_group(model.subgroup().group())); }

FormulaComparison compare_with_formula(const GaloisModel& model, const Stabilizer& stab, const Subgroup& k) {
  FormulaComparison cmp;
  cmp.m = static_cast<unsigned>(stab.m());
  cmp.d = static_cast<unsigned>(model.index());
  cmp.formula = tate_rank(TateRankInput{cmp.m, cmp.d});
  cmp.brute = brute_tate_count(model, k).count;
  cmp.agree = cmp.formula == Integer(static_cast<unsigned long>(cmp.brute));
  try {
    cmp.envelope = envelope_one_dim_count(cmp.m, cmp.d);
    cmp.envelope_agree = cmp.formula == Integer(static_cast<long>(*cmp.envelope));
  } catch (const BoundExceeded&) {
    cmp.envelope.reset();
  }
  cmp.note = cmp.agree ? "finite image; agreement is not implied by the formula"
                       : "finite image fails the large-image hypothesis; disagreement expected";
  return cmp;
}

std::optional<LinearCharacter> solve_norm_equation(const Subgroup& h, Elem g0, const LinearCharacter& chi) {
  const auto& g = *h.parent();
  if (!h.contains(g.mul(g0, g0))) throw InvalidArgument("sigma must have order at most 2 modulo H");
  if (!same_group(chi.group(), h.group())) throw GroupMismatch();
  for (auto& mu : linear_characters(h.group())) {
    if (mu * conjugate(mu, h, g0).inverse() == chi) return std::move(mu);
  }
  return std::nullopt;
}

DescentResult twist_to_descend(const GaloisModel& model, const Stabilizer& stab, std::optional<Elem> sigma) {
  const auto& g = *model.group();
  const auto& h = model.subgroup();
  if (!sigma) {
    for (Elem t : stab.representatives) {
      if (!h.contains(t) && h.contains(g.mul(t, t))) {
        sigma = t;
        break;
      }
    }
    if (!sigma) throw NoWitness("no stabilizer coset of order 2 outside H");
  }
  if (!std::binary_search(stab.preimage.begin(), stab.preimage.end(), *sigma)) {
    throw NoWitness("sigma H is not in the twist stabilizer");
  }
  const Character& chi_rho = model.rho_character();
  auto witness = twist_equivalent(chi_rho, conjugate(chi_rho, h, *sigma));
  if (!witness) throw NoWitness("no twist relates rho and its conjugate");

  DescentResult out{*sigma, *witness, std::nullopt, false, false};
  out.mu = solve_norm_equation(h, *sigma, *witness);
  if (!out.mu) {
    // the witness is only determined up to self-twists of rho
    for (const auto& lambda : linear_characters(h.group())) {
      if (!(chi_rho * lambda.to_character() == chi_rho)) continue;
      out.mu = solve_norm_equation(h, *sigma, *witness * lambda);
      if (out.mu) break;
    }
  }
  auto stable_under_sigma = [&](const LinearCharacter& mu) {
    const Character twisted = twist(model.rho(), mu).character();
    return twisted == conjugate(twisted, h, *sigma);
  };
  if (out.mu) {
    out.verified = stable_under_sigma(*out.mu);
  } else {
    const auto all = linear_characters(h.group());
    out.certified_none = std::none_of(all.begin(), all.end(), stable_under_sigma);
  }
  return out;
}

}  // namespace tate
