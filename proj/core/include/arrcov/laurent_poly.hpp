#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace arrcov {

using Integer = mpz_class;

/// Integer Laurent polynomial in one variable t, stored sparsely.
///
/// No stored coefficient is ever zero, so the zero polynomial has no terms
/// and structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers embed as constants

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);
  /// t^e
  static LaurentPoly t_power(Exponent e);
  /// t^e - 1 (zero when e == 0)
  static LaurentPoly t_power_minus_one(Exponent e);
  /// Fox derivative of x^count when x maps to t^step:
  /// 1 + t^step + ... + t^{(count-1)step} for count > 0,
  /// -(t^{-step} + ... + t^{count*step}) for count < 0, zero for count == 0.
  /// Equals (t^{count*step} - 1)/(t^step - 1) whenever step != 0.
  static LaurentPoly geometric_sum(Exponent count, Exponent step);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(Exponent e) const;
  std::optional<Exponent> min_exponent() const;
  std::optional<Exponent> max_exponent() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Representative of the class p * (+-t^k): lowest exponent 0 and
  /// positive leading coefficient. The zero polynomial is its own form.
  LaurentPoly canonical() const;
  /// p * t^k
  LaurentPoly shifted(Exponent k) const;
  /// Quotient q with q * divisor == *this, if one exists in Z[t, t^-1].
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;
  LaurentPoly pow(unsigned k) const;

  void add_term(const Integer& c, Exponent e);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// e.g. "t^-1 - 2 + 3t^2"
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace arrcov
