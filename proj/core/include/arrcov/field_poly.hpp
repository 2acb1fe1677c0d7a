#pragma once

#include "arrcov/matrix.hpp"
#include "arrcov/smith.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arrcov {

/// Polynomial over Q or F_p with ascending coefficients. F_p coefficients are
/// stored as their residues in [0, p). No trailing zeros.
struct FieldPolynomial {
  FieldSelector field;
  std::vector<mpq_class> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  /// -1 for the zero polynomial
  long degree() const { return static_cast<long>(coefficients.size()) - 1; }
  std::string to_string() const;

  friend bool operator==(const FieldPolynomial&, const FieldPolynomial&) = default;
};

/// Image of p in K[t] after dividing out the lowest power of t (a unit in
/// K[t, t^-1]) and making the result monic. Zero maps to zero.
FieldPolynomial reduce_into(const LaurentPoly& p, const FieldSelector& field);

FieldPolynomial multiply(const FieldPolynomial& a, const FieldPolynomial& b);
/// true iff a | b in K[t]. The zero polynomial divides only zero.
bool divides(const FieldPolynomial& a, const FieldPolynomial& b);
/// monic gcd; gcd(0, 0) == 0
FieldPolynomial gcd(const FieldPolynomial& a, const FieldPolynomial& b);

/// Structure of ker(d1)/im(d2) as a K[t, t^-1]-module.
struct TorsionDecomposition {
  std::size_t free_rank = 0;
  /// Monic non-unit invariant factors f1 | f2 | ..., no factor of t.
  std::vector<FieldPolynomial> torsion;

  /// Product of the torsion factors: the module order, 1 when torsion is empty.
  FieldPolynomial order(const FieldSelector& field) const;
};

/// Reduces both matrices into K[t, t^-1] and decomposes ker(d1)/im(d2).
/// d1 maps 1-chains to 0-chains and d2 maps 2-chains to 1-chains (column
/// vectors), so the chain condition is d1 * d2 == 0 over K; a violation
/// raises InputError naming the offending entry.
TorsionDecomposition poly_kernel_and_snf(const LaurentMatrix& d1, const LaurentMatrix& d2,
                                         const FieldSelector& field);

}  // namespace arrcov
