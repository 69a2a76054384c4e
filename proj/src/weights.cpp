#include "tate/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace tate {

namespace {

void check_dimension(const CharacterPoly& p) {
  std::int64_t total = 0;
  for (const auto& [w, c] : p.terms()) {
    total += std::llabs(c);
    if (total > kMaxWeightDimension) {
      throw BoundExceeded("character dimension exceeds 2^20");
    }
  }
}

// Peeling order: all x exponents first, then all y exponents.
bool peel_less(const Weight& a, const Weight& b) {
  const int r = a.factors();
  for (int i = 0; i < r; ++i) {
    if (a.x(i) != b.x(i)) return a.x(i) < b.x(i);
  }
  for (int i = 0; i < r; ++i) {
    if (a.y(i) != b.y(i)) return a.y(i) < b.y(i);
  }
  return false;
}

}  // namespace

CharacterPoly::CharacterPoly(int factors) : factors_(factors) {
  if (factors < 1) throw InvalidArgument("a character needs at least one GL2 factor");
}

CharacterPoly CharacterPoly::trivial(int factors) {
  CharacterPoly p(factors);
  p.add(Weight{std::vector<int>(2 * factors, 0)}, 1);
  return p;
}

std::int64_t CharacterPoly::multiplicity(const Weight& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void CharacterPoly::add(const Weight& w, std::int64_t mult) {
  if (w.factors() != factors_ || static_cast<int>(w.exps.size()) != 2 * factors_) {
    throw FactorMismatch("weight has " + std::to_string(w.exps.size() / 2) + " factors, expected " + std::to_string(factors_));
  }
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t CharacterPoly::dimension() const {
  std::int64_t total = 0;
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

CharacterPoly operator*(const CharacterPoly& p, const CharacterPoly& q) {
  if (p.factors_ != q.factors_) throw FactorMismatch("cannot multiply characters with different factor counts");
  CharacterPoly out(p.factors_);
  Weight w{std::vector<int>(2 * p.factors_)};
  for (const auto& [wp, cp] : p.terms_) {
    for (const auto& [wq, cq] : q.terms_) {
      for (std::size_t i = 0; i < w.exps.size(); ++i) w.exps[i] = wp.exps[i] + wq.exps[i];
      out.add(w, cp * cq);
    }
  }
  check_dimension(out);
  return out;
}

CharacterPoly operator+(const CharacterPoly& p, const CharacterPoly& q) {
  if (p.factors_ != q.factors_) throw FactorMismatch("cannot add characters with different factor counts");
  CharacterPoly out = p;
  for (const auto& [w, c] : q.terms_) out.add(w, c);
  return out;
}

CharacterPoly operator-(const CharacterPoly& p, const CharacterPoly& q) {
  if (p.factors_ != q.factors_) throw FactorMismatch("cannot subtract characters with different factor counts");
  CharacterPoly out = p;
  for (const auto& [w, c] : q.terms_) out.add(w, -c);
  return out;
}

CharacterPoly irr_char(const HighestWeightTuple& hw) {
  if (hw.empty()) throw InvalidArgument("highest weight tuple is empty");
  const int r = static_cast<int>(hw.size());
  for (const auto& f : hw) {
    if (f.k < 0) throw NegativeHighestWeight("highest weight k = " + std::to_string(f.k) + " is negative");
  }
  CharacterPoly out = CharacterPoly::trivial(r);
  for (int i = 0; i < r; ++i) {
    CharacterPoly factor(r);
    for (int j = 0; j <= hw[i].k; ++j) {
      Weight w{std::vector<int>(2 * r, 0)};
      w.exps[2 * i] = hw[i].k - 2 * j;
      w.exps[2 * i + 1] = hw[i].m + j;
      factor.add(w, 1);
    }
    out = out * factor;
  }
  return out;
}

CharacterPoly standard_char(int factors, int j) {
  if (j < 0 || j >= factors) throw InvalidArgument("factor index out of range");
  HighestWeightTuple hw(factors, HighestWeight{0, 0});
  hw[j] = HighestWeight{1, 0};
  return irr_char(hw);
}

CharacterPoly power(const CharacterPoly& p, unsigned e) {
  CharacterPoly result = CharacterPoly::trivial(p.factors());
  CharacterPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<Constituent> decompose(const CharacterPoly& p) {
  check_dimension(p);
  const int r = p.factors();
  std::vector<Constituent> out;
  CharacterPoly rest = p;
  while (!rest.terms().empty()) {
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (peel_less(top->first, it->first)) top = it;
    }
    const Weight w = top->first;
    const std::int64_t mult = top->second;
    HighestWeightTuple hw(r);
    for (int i = 0; i < r; ++i) {
      if (w.x(i) < 0) throw NotACharacter("leading weight has negative a-exponent in factor " + std::to_string(i + 1));
      hw[i] = HighestWeight{w.x(i), w.y(i)};
    }
    if (mult < 0) throw NotACharacter("leading weight " + to_string(hw) + " has negative multiplicity");
    CharacterPoly irr = irr_char(hw);
    for (const auto& [iw, ic] : irr.terms()) rest.add(iw, -mult * ic);
    out.push_back(Constituent{std::move(hw), mult});
  }
  return out;
}

std::vector<Constituent> one_dim_types(const CharacterPoly& p) {
  std::vector<Constituent> out;
  for (auto& c : decompose(p)) {
    const bool linear = std::all_of(c.highest_weight.begin(), c.highest_weight.end(), [](const HighestWeight& f) { return f.k == 0; });
    if (linear) out.push_back(std::move(c));
  }
  return out;
}

std::int64_t one_dim_count(const CharacterPoly& p) {
  std::int64_t total = 0;
  for (const auto& c : one_dim_types(p)) total += c.multiplicity;
  return total;
}

std::string to_text(const CharacterPoly& p) {
  std::ostringstream out;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.exps.size(); ++i) {
      if (i > 0) out << ' ';
      out << w.exps[i];
    }
    out << " : " << c << '\n';
  }
  return out.str();
}

CharacterPoly parse_character_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<CharacterPoly> out;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidArgument("missing ':' in weight line '" + line + "'");
    std::istringstream lhs(line.substr(0, colon));
    std::istringstream rhs(line.substr(colon + 1));
    Weight w;
    int e = 0;
    while (lhs >> e) w.exps.push_back(e);
    std::int64_t mult = 0;
    if (!(rhs >> mult) || w.exps.empty() || w.exps.size() % 2 != 0) {
      throw InvalidArgument("malformed weight line '" + line + "'");
    }
    if (!out) out.emplace(w.factors());
    out->add(w, mult);
  }
  if (!out) throw InvalidArgument("empty character text");
  return *out;
}

std::string to_string(const HighestWeightTuple& hw) {
  std::string s;
  for (const auto& f : hw) s += "(" + std::to_string(f.k) + "," + std::to_string(f.m) + ")";
  return s;
}

}  // namespace tate
