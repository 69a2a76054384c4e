#pragma once

// Exact arithmetic over Q and the cyclotomic fields Q(zeta_N), plus dense
// linear algebra over either.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tate/error.hpp"

namespace tate {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr int kMaxConductor = 120;
inline constexpr std::size_t kMaxMatrixDim = 4096;

/// Builds p/q in lowest terms. Throws DivisionByZero when q == 0.
Rational make_rational(const Integer& p, const Integer& q = 1);

/// Parses `p/q` or an integer.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

int euler_phi(int n);

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
///
/// The coefficient vector is always fully reduced, so equality within one
/// conductor is structural. Binary operations on mixed conductors first embed
/// both operands into the field of conductor lcm(N, M).
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& q, int conductor = 1);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long q, int conductor = 1) : Cyclotomic(Rational(q), conductor) {}  // NOLINT

  /// zeta_N^k.
  static Cyclotomic root(int n, long long k);

  /// Sum of coeffs[i] * zeta_N^i; any length is accepted and reduced.
  static Cyclotomic from_powers(int n, std::span<const Rational> coeffs);

  int conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  /// Image in Q(zeta_M); M must be a multiple of the conductor.
  Cyclotomic embed(int m) const;

  /// Preimage in Q(zeta_n) when this value lies in that subfield.
  std::optional<Cyclotomic> descend(int n) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y);
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);

  Cyclotomic& operator+=(const Cyclotomic& y) { return *this = *this + y; }
  Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }

  /// Literal form `N:c0,c1,...` with all phi(N) coefficients.
  std::string to_string() const;
  static Cyclotomic parse(std::string_view text);

 private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  int conductor_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic cyc_root(int n, long long k) { return Cyclotomic::root(n, k); }

int lcm_conductor(int a, int b);

bool is_zero(const Rational& q);
Rational inverse(const Rational& q);
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic inverse(const Cyclotomic& x) { return x.inverse(); }

/// Gauss-Jordan elimination of a row-major rows x cols array in place.
/// Returns the pivot columns; the array ends in reduced row-echelon form.
template <class Field>
std::vector<std::size_t> rref_in_place(std::vector<Field>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    }
    const Field s = inverse(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(a[r * cols + j])) a[r * cols + j] = a[r * cols + j] * s;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i * cols + c])) continue;
      const Field f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(a[r * cols + j])) a[i * cols + j] = a[i * cols + j] - f * a[r * cols + j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Dense matrix over a single cyclotomic field.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, int conductor = 1);
  /// Row-major entries; all entries are embedded into their common conductor.
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);

  static ExactMatrix identity(std::size_t n, int conductor = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Cyclotomic> entries() const { return entries_; }

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;

  Cyclotomic trace() const;
  Cyclotomic determinant() const;
  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }
  ExactMatrix rref() const;
  ExactMatrix scaled(const Cyclotomic& s) const;
  ExactMatrix embed(int conductor) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  int conductor_;
  std::vector<Cyclotomic> entries_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Rows of `top` followed by rows of `bottom`.
ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

inline std::size_t kernel_dim(const ExactMatrix& m) { return m.kernel_dim(); }
inline ExactMatrix rref(const ExactMatrix& m) { return m.rref(); }

}  // namespace tate
