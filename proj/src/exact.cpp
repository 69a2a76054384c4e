#include "tate/exact.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>

namespace tate {

namespace {

struct ConductorTable {
  int phi = 0;
  std::vector<long long> poly;
  // powers[k] = zeta^k reduced to the power basis, for 0 <= k < N
  std::vector<std::vector<long>> powers;
};

std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::array<ConductorTable, kMaxConductor + 1> build_tables() {
  std::array<ConductorTable, kMaxConductor + 1> tables;
  for (int n = 1; n <= kMaxConductor; ++n) {
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) poly = divide_monic(poly, tables[d].poly);
    }
    ConductorTable& t = tables[n];
    t.poly = poly;
    t.phi = static_cast<int>(poly.size()) - 1;
    std::vector<long> cur(t.phi, 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
      t.powers.push_back(cur);
      // multiply by x and reduce by the monic cyclotomic polynomial
      const long top = cur[t.phi - 1];
      for (int i = t.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < t.phi; ++i) cur[i] -= top * static_cast<long>(t.poly[i]);
      }
    }
  }
  return tables;
}

const ConductorTable& table(int n) {
  static const auto tables = build_tables();
  if (n < 1) throw InvalidArgument("conductor must be positive");
  if (n > kMaxConductor) throw BoundExceeded("conductor " + std::to_string(n) + " exceeds " + std::to_string(kMaxConductor));
  return tables[n];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw DivisionByZero();
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty rational");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto to_integer = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw InvalidArgument("bad rational '" + std::string(text) + "'");
    return Rational(to_integer(text));
  }
  const auto num = trim(text.substr(0, slash));
  const auto den = trim(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den)) throw InvalidArgument("bad rational '" + std::string(text) + "'");
  return make_rational(to_integer(num), to_integer(den));
}

std::string to_string(const Rational& q) { return q.get_str(); }

int euler_phi(int n) { return table(n).phi; }

const std::vector<long long>& cyclotomic_polynomial(int n) { return table(n).poly; }

int lcm_conductor(int a, int b) {
  const int l = std::lcm(a, b);
  if (l > kMaxConductor) throw BoundExceeded("conductor lcm(" + std::to_string(a) + "," + std::to_string(b) + ") exceeds " + std::to_string(kMaxConductor));
  return l;
}

bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational inverse(const Rational& q) {
  if (is_zero(q)) throw DivisionByZero();
  return Rational(1) / q;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& q, int conductor) : conductor_(conductor) {
  coeffs_.assign(table(conductor).phi, Rational(0));
  coeffs_[0] = q;
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root(int n, long long k) {
  const auto& t = table(n);
  long long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> c(t.phi);
  for (int i = 0; i < t.phi; ++i) c[i] = t.powers[e][i];
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::from_powers(int n, std::span<const Rational> coeffs) {
  const auto& t = table(n);
  std::vector<Rational> c(t.phi, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (tate::is_zero(coeffs[k])) continue;
    const auto& p = t.powers[k % n];
    for (int i = 0; i < t.phi; ++i) {
      if (p[i] != 0) c[i] += coeffs[k] * p[i];
    }
  }
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return tate::is_zero(q); });
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return tate::is_zero(q); });
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!tate::is_zero(coeffs_[i])) return std::nullopt;
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw InvalidArgument("cannot embed conductor " + std::to_string(conductor_) + " into " + std::to_string(m));
  const auto& t = table(m);
  const int step = m / conductor_;
  std::vector<Rational> c(t.phi, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (tate::is_zero(coeffs_[i])) continue;
    const auto& p = t.powers[(static_cast<long long>(i) * step) % m];
    for (int j = 0; j < t.phi; ++j) {
      if (p[j] != 0) c[j] += coeffs_[i] * p[j];
    }
  }
  return Cyclotomic(m, std::move(c));
}

std::optional<Cyclotomic> Cyclotomic::descend(int n) const {
  if (n == conductor_) return *this;
  if (conductor_ % n != 0) throw InvalidArgument("conductor " + std::to_string(n) + " does not divide " + std::to_string(conductor_));
  const int small = euler_phi(n);
  const int big = euler_phi(conductor_);
  // columns: images of the basis zeta_n^j, then the target vector
  const std::size_t cols = small + 1;
  std::vector<Rational> a(static_cast<std::size_t>(big) * cols);
  for (int j = 0; j < small; ++j) {
    const Cyclotomic img = root(n, j).embed(conductor_);
    for (int i = 0; i < big; ++i) a[i * cols + j] = img.coeffs_[i];
  }
  for (int i = 0; i < big; ++i) a[i * cols + small] = coeffs_[i];
  const auto pivots = rref_in_place(a, big, cols);
  if (!pivots.empty() && pivots.back() == static_cast<std::size_t>(small)) return std::nullopt;
  std::vector<Rational> c(small, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = a[r * cols + small];
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const std::size_t phi = coeffs_.size();
  if (phi == 1) return Cyclotomic(conductor_, std::vector<Rational>{Rational(1) / coeffs_[0]});
  // Solve (multiplication-by-x) * y = 1.
  const std::size_t cols = phi + 1;
  std::vector<Rational> a(phi * cols);
  for (std::size_t j = 0; j < phi; ++j) {
    const Cyclotomic col = *this * root(conductor_, static_cast<long long>(j));
    for (std::size_t i = 0; i < phi; ++i) a[i * cols + j] = col.coeffs_[i];
  }
  a[phi] = 1;
  rref_in_place(a, phi, cols);
  std::vector<Rational> c(phi);
  for (std::size_t i = 0; i < phi; ++i) c[i] = a[i * cols + phi];
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::pow(long long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  Cyclotomic result(Rational(1), conductor_);
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.conductor_ != y.conductor_) {
    const int m = lcm_conductor(x.conductor_, y.conductor_);
    return x.embed(m) + y.embed(m);
  }
  std::vector<Rational> c(x.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] + y.coeffs_[i];
  return Cyclotomic(x.conductor_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.conductor_ != y.conductor_) {
    const int m = lcm_conductor(x.conductor_, y.conductor_);
    return x.embed(m) - y.embed(m);
  }
  std::vector<Rational> c(x.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] - y.coeffs_[i];
  return Cyclotomic(x.conductor_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.conductor_ != y.conductor_) {
    const int m = lcm_conductor(x.conductor_, y.conductor_);
    return x.embed(m) * y.embed(m);
  }
  const int n = x.conductor_;
  const std::size_t phi = x.coeffs_.size();
  if (phi == 1) return Cyclotomic(n, std::vector<Rational>{x.coeffs_[0] * y.coeffs_[0]});
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  bool any = false;
  for (std::size_t i = 0; i < phi; ++i) {
    if (is_zero(x.coeffs_[i])) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (is_zero(y.coeffs_[j])) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
      any = true;
    }
  }
  if (!any) return Cyclotomic(Rational(0), n);
  const auto& t = table(n);
  std::vector<Rational> c(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (is_zero(prod[k])) continue;
    const auto& p = t.powers[k % n];
    for (std::size_t i = 0; i < phi; ++i) {
      if (p[i] != 0) c[i] += prod[k] * p[i];
    }
  }
  return Cyclotomic(n, std::move(c));
}

Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.conductor_ != y.conductor_) {
    const int m = std::lcm(x.conductor_, y.conductor_);
    if (m <= kMaxConductor) return x.embed(m) == y.embed(m);
    // Q(zeta_a) and Q(zeta_b) meet in Q(zeta_gcd(a,b))
    const int g = std::gcd(x.conductor_, y.conductor_);
    const auto xs = x.descend(g);
    const auto ys = y.descend(g);
    return xs && ys && *xs == *ys;
  }
  return x.coeffs_ == y.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out = std::to_string(conductor_) + ":";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ",";
    out += coeffs_[i].get_str();
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return Cyclotomic(parse_rational(text), 1);
  const auto head = trim(text.substr(0, colon));
  int n = 0;
  try {
    n = std::stoi(std::string(head));
  } catch (const std::exception&) {
    throw InvalidArgument("bad conductor '" + std::string(head) + "'");
  }
  std::vector<Rational> c;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    c.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (n < 1) throw InvalidArgument("bad conductor '" + std::string(head) + "'");
  if (n <= kMaxConductor && c.size() > static_cast<std::size_t>(euler_phi(n))) {
    throw InvalidArgument("more than phi(" + std::to_string(n) + ") coefficients in '" + std::string(text) + "'");
  }
  return from_powers(n, c);
}

// ---------------------------------------------------------------------------
// ExactMatrix

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw BoundExceeded("matrix dimension exceeds " + std::to_string(kMaxMatrixDim));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor) {
  check_dims(rows, cols);
  entries_.assign(rows * cols, Cyclotomic(Rational(0), conductor));
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), conductor_(1), entries_(std::move(entries)) {
  check_dims(rows, cols);
  if (entries_.size() != rows * cols) throw InvalidArgument("entry count does not match matrix shape");
  for (const auto& e : entries_) conductor_ = lcm_conductor(conductor_, e.conductor());
  for (auto& e : entries_) {
    if (e.conductor() != conductor_) e = e.embed(conductor_);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n, int conductor) {
  ExactMatrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Cyclotomic(Rational(1), conductor);
  return m;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

Cyclotomic ExactMatrix::trace() const {
  if (!is_square()) throw InvalidArgument("trace of a non-square matrix");
  Cyclotomic t(Rational(0), conductor_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Cyclotomic ExactMatrix::determinant() const {
  if (!is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<Cyclotomic> a = entries_;
  Cyclotomic det(Rational(1), conductor_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c].is_zero()) ++p;
    if (p == n) return Cyclotomic(Rational(0), conductor_);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = -det;
    }
    det = det * a[c * n + c];
    const Cyclotomic inv = a[c * n + c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c].is_zero()) continue;
      const Cyclotomic f = a[i * n + c] * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!a[c * n + j].is_zero()) a[i * n + j] = a[i * n + j] - f * a[c * n + j];
      }
    }
  }
  return det;
}

std::size_t ExactMatrix::rank() const {
  std::vector<Cyclotomic> a = entries_;
  return rref_in_place(a, rows_, cols_).size();
}

ExactMatrix ExactMatrix::rref() const {
  std::vector<Cyclotomic> a = entries_;
  rref_in_place(a, rows_, cols_);
  ExactMatrix out(rows_, cols_, std::move(a));
  return out.embed(conductor_);
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& s) const {
  std::vector<Cyclotomic> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i].is_zero() ? entries_[i] : entries_[i] * s;
  return ExactMatrix(rows_, cols_, std::move(e)).embed(lcm_conductor(conductor_, s.conductor()));
}

ExactMatrix ExactMatrix::embed(int conductor) const {
  if (conductor == conductor_) return *this;
  ExactMatrix out(*this);
  out.conductor_ = conductor;
  for (auto& e : out.entries_) e = e.embed(conductor);
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shapes do not compose");
  const int n = lcm_conductor(a.conductor_, b.conductor_);
  if (a.conductor_ != n || b.conductor_ != n) return a.embed(n) * b.embed(n);
  ExactMatrix out(a.rows_, b.cols_, n);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Cyclotomic& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Cyclotomic& y = b(k, j);
        if (y.is_zero()) continue;
        out.entries_[i * b.cols_ + j] += x * y;
      }
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shapes differ");
  std::vector<Cyclotomic> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
  return ExactMatrix(a.rows_, a.cols_, std::move(e));
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shapes differ");
  std::vector<Cyclotomic> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
  return ExactMatrix(a.rows_, a.cols_, std::move(e));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  check_dims(rows, cols);
  const int n = lcm_conductor(a.conductor(), b.conductor());
  std::vector<Cyclotomic> e(rows * cols, Cyclotomic(Rational(0), n));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Cyclotomic& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Cyclotomic& y = b(k, l);
          if (y.is_zero()) continue;
          e[(i * b.rows() + k) * cols + j * b.cols() + l] = x * y;
        }
      }
    }
  }
  return ExactMatrix(rows, cols, std::move(e));
}

ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidArgument("vstack column mismatch");
  std::vector<Cyclotomic> e(top.entries().begin(), top.entries().end());
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return ExactMatrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

}  // namespace tate
