#pragma once

// Tensor induction from a normal subgroup, twist stabilizers, brute-force
// counts of one-dimensional constituents, and the quadratic descent step.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tate/group.hpp"
#include "tate/rep.hpp"

namespace tate {

/// G with a normal subgroup H and a representation rho of H. Cosets use the
/// smallest element as representative, so t_1 is the identity.
class GaloisModel {
 public:
  GaloisModel(Subgroup h, MatrixRep rho);

  const GroupPtr& group() const { return h_.parent(); }
  const Subgroup& subgroup() const { return h_; }
  const MatrixRep& rho() const { return rho_; }
  const Character& rho_character() const { return chi_; }

  std::size_t index() const { return cosets_.size(); }
  const std::vector<Coset>& cosets() const { return cosets_; }
  Elem representative(std::size_t i) const { return cosets_[i].representative; }
  std::vector<Elem> representatives() const;
  std::size_t coset_of(Elem g) const { return coset_of_[g]; }

 private:
  Subgroup h_;
  MatrixRep rho_;
  Character chi_;
  std::vector<Coset> cosets_;
  std::vector<std::size_t> coset_of_;
};

/// Induced-degree cap: ASAI_MAX_DEGREE if set (at most 2^20), else 4096.
std::size_t max_induced_degree();

/// Representation of G on V^{(x)d}. With g t_i = t_{s(i)} h_i, the image of g
/// sends slot i through rho(h_i) into slot s(i). Basis words are in odometer
/// order with the last slot fastest.
MatrixRep tensor_induce(const GaloisModel& model);
/// Same with one representative per coset (in coset order) chosen by the caller.
MatrixRep tensor_induce(const GaloisModel& model, std::span<const Elem> representatives);

struct Stabilizer {
  std::vector<std::size_t> cosets;          // indices into model.cosets()
  std::vector<Elem> representatives;        // coset representative of each
  std::vector<LinearCharacter> witnesses;   // chi_{rho^t} = chi_rho * witness
  std::vector<Elem> preimage;               // union of the cosets, sorted

  std::size_t m() const { return cosets.size(); }
};

/// Cosets tH whose conjugate rho^t is a twist of rho. Throws if the result is
/// not a subgroup of G/H.
Stabilizer stabilizer(const GaloisModel& model);

struct StableReport {
  bool holds = true;
  std::vector<std::string> diffs;  // one line per differing conjugacy class
};

/// Compares (x)_{xi} rho^{t_xi} with rho^{(x)m} twisted by the product of the witnesses.
StableReport verify_stable_identity(const GaloisModel& model, const Stabilizer& stab);

struct TateCount {
  std::size_t count = 0;
  std::vector<LinearConstituent> constituents;
};

/// One-dimensional constituents of (x)_i rho^{t_i} restricted to K, a subgroup of H.
TateCount brute_tate_count(const GaloisModel& model, const Subgroup& k);
TateCount brute_tate_count(const GaloisModel& model);

struct FormulaComparison {
  unsigned m = 0;
  unsigned d = 0;
  Integer formula;
  std::size_t brute = 0;
  bool agree = false;
  std::optional<std::int64_t> envelope;  // weight-level count, when within the dimension cap
  bool envelope_agree = false;
  std::string note;
};

FormulaComparison compare_with_formula(const GaloisModel& model, const Stabilizer& stab, const Subgroup& k);

/// First mu (in enumeration order) with mu * (mu o sigma)^{-1} = chi, where
/// sigma is conjugation by g0 and g0^2 lies in H.
std::optional<LinearCharacter> solve_norm_equation(const Subgroup& h, Elem g0, const LinearCharacter& chi);

struct DescentResult {
  Elem sigma = 0;
  LinearCharacter witness;
  std::optional<LinearCharacter> mu;
  bool verified = false;        // chi of twist(rho, mu) equals that of its sigma-conjugate
  bool certified_none = false;  // no linear mu at all makes twist(rho, mu) sigma-stable
};

/// Default sigma: the first stabilizer representative outside H whose square lies in H.
/// Throws NoWitness when sigma H is not in the stabilizer.
DescentResult twist_to_descend(const GaloisModel& model, const Stabilizer& stab, std::optional<Elem> sigma = std::nullopt);

}  // namespace tate
