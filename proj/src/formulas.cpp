#include "tate/formulas.hpp"

#include <string>
#include <vector>

#include "tate/weights.hpp"

namespace tate {

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1);
    next[0] = 1;
    next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

Integer lemma_even_count(unsigned n) {
  if (n == 0) throw InvalidArgument("lemma_even_count needs n >= 1");
  return binomial(2 * n, n) - binomial(2 * n, n - 1);
}

Integer tate_rank(TateRankInput input) {
  if (input.m == 0 || input.d == 0) throw InvalidArgument("tate_rank needs m, d >= 1");
  if (input.d % input.m != 0) {
    throw NotADivisor(std::to_string(input.m) + " does not divide " + std::to_string(input.d));
  }
  if (input.m % 2 != 0) return 0;
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), lemma_even_count(input.m / 2).get_mpz_t(), input.d / input.m);
  return result;
}

std::int64_t envelope_one_dim_count(unsigned m, unsigned d) {
  if (m == 0 || d == 0) throw InvalidArgument("envelope count needs m, d >= 1");
  if (d % m != 0) throw NotADivisor(std::to_string(m) + " does not divide " + std::to_string(d));
  const int r = static_cast<int>(d / m);
  CharacterPoly product = CharacterPoly::trivial(r);
  for (int j = 0; j < r; ++j) product = product * power(standard_char(r, j), m);
  return one_dim_count(product);
}

}  // namespace tate
