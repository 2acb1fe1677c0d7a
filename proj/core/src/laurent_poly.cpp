#include "arrcov/laurent_poly.hpp"

#include <sstream>
#include <vector>

namespace arrcov {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  p.add_term(c, e);
  return p;
}

LaurentPoly LaurentPoly::t_power(Exponent e) { return monomial(1, e); }

LaurentPoly LaurentPoly::t_power_minus_one(Exponent e) {
  LaurentPoly p = t_power(e);
  p.add_term(-1, 0);
  return p;
}

LaurentPoly LaurentPoly::geometric_sum(Exponent count, Exponent step) {
  LaurentPoly p;
  if (count > 0) {
    for (Exponent j = 0; j < count; ++j) p.add_term(1, j * step);
  } else {
    for (Exponent j = 1; j <= -count; ++j) p.add_term(-1, -j * step);
  }
  return p;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<LaurentPoly::Exponent> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(const Integer& c, Exponent e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return {};
  LaurentPoly p = shifted(-*min_exponent());
  if (p.terms_.rbegin()->second < 0) p = -p;
  return p;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly{};
  // Strip powers of t from both sides, then long-divide in Z[t] from the top.
  const Exponent shift = *min_exponent() - *divisor.min_exponent();
  const Exponent dlo = *divisor.min_exponent();
  const Exponent ddeg = *divisor.max_exponent() - dlo;
  const Integer& dlead = divisor.terms_.rbegin()->second;

  LaurentPoly rem = shifted(-*min_exponent());
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const Exponent top = *rem.max_exponent();
    if (top < ddeg) return std::nullopt;
    const Integer& lead = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(lead.get_mpz_t(), dlead.get_mpz_t())) return std::nullopt;
    Integer q = lead / dlead;
    const Exponent qe = top - ddeg;
    for (const auto& [e, c] : divisor.terms_) rem.add_term(-q * c, e - dlo + qe);
    quot.add_term(q, qe);
  }
  return quot.shifted(shift);
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ca * cb, ea + eb);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace arrcov
