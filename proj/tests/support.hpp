#pragma once

#include <string>
#include <vector>

#include "tate/asai.hpp"
#include "tate/fixture.hpp"
#include "tate/group.hpp"

namespace testing_support {

inline tate::GroupPtr perm_group(std::size_t points, const std::vector<std::string>& cycles) {
  std::vector<tate::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(tate::Permutation::parse_cycles(c, points));
  return tate::FiniteGroup::from_generators(gens, points);
}

inline std::string fixture_path(const std::string& name) { return std::string(TATE_FIXTURE_DIR) + "/" + name; }

inline tate::ModelFixture fixture(const std::string& name) { return tate::load_model(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"d8_z4.model",   "gl2f3_sl2f3.model", "q8.model",
                                              "s3_a3.model",   "sd16_q8.model",     "sd16_z4.model",
                                              "swap_s3.model", "z4_z2.model",       "z9_z3.model"};
  return names;
}

inline tate::Cyclotomic zeta(int n, long long k = 1) { return tate::cyc_root(n, k); }

}  // namespace testing_support
