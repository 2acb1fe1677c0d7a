#pragma once

#include "arrcov/matrix.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace arrcov {

/// Coefficient field: the rationals (characteristic 0) or F_p.
class FieldSelector {
 public:
  /// Throws InputError unless characteristic is 0 or a prime below 2^31.
  explicit FieldSelector(std::uint32_t characteristic = 0);

  static FieldSelector rationals() { return FieldSelector(0); }
  static FieldSelector prime(std::uint32_t p) { return FieldSelector(p); }

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string name() const;

  friend auto operator<=>(const FieldSelector&, const FieldSelector&) = default;

 private:
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t p);

/// Invariant factors d1 | d2 | ... | dr (r = min(rows, cols)), zeros last.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
  std::string to_string() const;
};

SmithForm snf_int(const IntMatrix& m);

/// Rank after reducing entries into the field. Characteristic 0 uses
/// fraction-free integer elimination; F_p uses word-sized arithmetic.
std::size_t rank_over(const IntMatrix& m, const FieldSelector& field);

/// gcd(k, N) with gcd(0, N) = N and k reduced mod N first.
std::uint64_t cyclic_gcd(std::int64_t k, std::uint64_t n);

/// rank over the field of C_N^k - I_N. Equals N - gcd(k, N).
std::size_t lemma_rank(std::size_t n, std::int64_t k, const FieldSelector& field);

/// Free rank and torsion of a finitely generated abelian group.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, ascending

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string to_string() const;
};

/// Z^cols modulo the row span of m (rows read as relations): Z^(cols - rank)
/// plus Z/d for every invariant factor d > 1.
AbelianGroup cokernel(const IntMatrix& m);

/// ker(d1) / im(d2) for integer matrices with d1 * d2 == 0 (column-vector
/// convention: d2 maps into the domain of d1). The kernel lattice of d1 is
/// found with unimodular column operations which are mirrored as inverse row
/// operations on d2; the cokernel of the induced map is read off by SNF.
/// Throws ConsistencyError when d1 * d2 != 0.
AbelianGroup integral_homology(const IntMatrix& d1, const IntMatrix& d2);

}  // namespace arrcov
