#pragma once

#include "arrcov/arrangement.hpp"
#include "arrcov/field_poly.hpp"
#include "arrcov/fox.hpp"
#include "arrcov/smith.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace arrcov {

/// Cellular chain complex of the N-fold cyclic cover of a presentation
/// 2-complex, in column-vector convention: d1 * d2 == 0.
struct CoverChainComplex {
  std::size_t n = 0;  // number of sheets
  IntMatrix d2;       // (generators*N) x (relators*N)
  IntMatrix d1;       // N x (generators*N)
};

/// Transposed substituted Alexander matrix for d2; generator block g of d1 is
/// (C_N^{w_g} - I_N) transposed.
CoverChainComplex build_complex(const Presentation& p, const Character& chi, std::size_t n);

struct CoverHomologyReport {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, ascending
  std::map<FieldSelector, std::size_t> field_betti;
  bool connected = false;

  friend bool operator==(const CoverHomologyReport&, const CoverHomologyReport&) = default;
};

/// Fields reported when the caller does not choose: Q, F_2, F_3, F_5.
std::vector<FieldSelector> default_fields();

/// H_1 of the N-fold cover. The integral part comes from integral_homology;
/// each field Betti number is computed separately from ranks as
/// dim ker d1 - rank d2.
CoverHomologyReport h1_cover(const Presentation& p, const Character& chi, std::size_t n,
                             const std::vector<FieldSelector>& fields = default_fields());

/// Field Betti numbers only (ranks over each field), skipping the integral part.
std::map<FieldSelector, std::size_t> cover_betti(const CoverChainComplex& complex,
                                                 const std::vector<FieldSelector>& fields);

/// (n-1) + sum_i (m_i - 2)(gcd(eps_i, N) - 1). Throws InputError when the eps
/// hypothesis fails, or when a mod-N character is used with a different N.
std::size_t betti_bound(const MarkedArrangement& a, const ArrangementCharacter& chi, std::size_t n);

enum class CertificateVerdict { kTorsionFree, kBoundOnly, kInconclusive };
std::string to_string(CertificateVerdict v);

struct HypothesisCheck {
  std::string hypothesis;
  bool passed = false;

  friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

struct Certificate {
  CertificateVerdict verdict = CertificateVerdict::kInconclusive;
  /// Betti bound; meaningful unless the verdict is Inconclusive.
  std::size_t bound = 0;
  /// For TorsionFree: H_1 of the cover of the complement is Z^rank.
  std::size_t rank = 0;
  std::vector<HypothesisCheck> hypotheses_log;
  ArrangementCharacter::Mode mode_flag = ArrangementCharacter::Mode::kIntegral;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// TorsionFree iff the eps hypothesis holds and gcd(eps_i, N) = 1 for every
/// point with m_i > 2; BoundOnly if only the eps hypothesis holds;
/// Inconclusive otherwise.
Certificate certify(const MarkedArrangement& a, const ArrangementCharacter& chi, std::size_t n);

struct DivisorCheck {
  bool divides = false;
  FieldPolynomial alexander_polynomial;  // Delta_1 of the infinite cyclic cover of X
  FieldPolynomial divisor;               // alexander_divisor reduced into the field
  TorsionDecomposition module;
};

/// Delta_1 of the boundary manifold's infinite cyclic cover over the field,
/// then polynomial division into alexander_divisor.
DivisorCheck divisor_check(const MarkedArrangement& a, const ArrangementCharacter& chi, const FieldSelector& field);

/// Infinite cyclic chain complex (d1 row of t^{w_g} - 1, d2 the transposed
/// Alexander matrix) decomposed over the field.
TorsionDecomposition alexander_module(const Presentation& p, const Character& chi, const FieldSelector& field);

}  // namespace arrcov
