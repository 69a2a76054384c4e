#pragma once

// Closed-form counts of one-dimensional constituents.

#include <cstdint>

#include "tate/exact.hpp"

namespace tate {

/// C(n, k) by the Pascal recurrence; zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// C(2n, n) - C(2n, n-1), the number of det^n summands of R^{(x)2n}.
Integer lemma_even_count(unsigned n);

struct TateRankInput {
  unsigned m = 1;  // order of the twist-stabilizer
  unsigned d = 1;  // degree of the extension
};

/// 0 for odd m, otherwise lemma_even_count(m/2)^(d/m). Throws NotADivisor when m does not divide d.
Integer tate_rank(TateRankInput input);

/// one_dim_count of prod_{j=1}^{d/m} std_j^m, computed by weight peeling.
std::int64_t envelope_one_dim_count(unsigned m, unsigned d);

}  // namespace tate
