#include "arrcov/cover_homology.hpp"

#include <numeric>

namespace arrcov {

namespace {

std::uint64_t weight_gcd(const Character& chi, std::uint64_t n) {
  std::uint64_t g = n;
  for (auto w : chi.weights) g = std::gcd(g, static_cast<std::uint64_t>(w < 0 ? -w : w));
  return g;
}

void require_matching_modulus(const ArrangementCharacter& chi, std::size_t n) {
  if (n == 0) throw InputError("cover degree N must be at least 1");
  if (chi.is_modular() && chi.modulus() != n)
    throw InputError("character is defined mod " + std::to_string(chi.modulus()) + " but the cover has N = " +
                     std::to_string(n));
}

LaurentMatrix boundary_row(const Character& chi) {
  LaurentMatrix row(1, chi.weights.size());
  for (std::size_t g = 0; g < chi.weights.size(); ++g) row(0, g) = LaurentPoly::t_power_minus_one(chi.weights[g]);
  return row;
}

}  // namespace

CoverChainComplex build_complex(const Presentation& p, const Character& chi, std::size_t n) {
  if (n == 0) throw InputError("build_complex needs N >= 1");
  const LaurentMatrix alexander = fox_matrix(p, chi);  // validates chi
  CoverChainComplex complex;
  complex.n = n;
  complex.d2 = substitute(alexander, n).transpose();
  complex.d1 = substitute(boundary_row(chi).transpose(), n).transpose();
  return complex;
}

std::vector<FieldSelector> default_fields() {
  return {FieldSelector::rationals(), FieldSelector::prime(2), FieldSelector::prime(3), FieldSelector::prime(5)};
}

std::map<FieldSelector, std::size_t> cover_betti(const CoverChainComplex& complex,
                                                 const std::vector<FieldSelector>& fields) {
  std::map<FieldSelector, std::size_t> betti;
  const std::size_t chains = complex.d1.cols();
  for (const auto& field : fields)
    betti[field] = chains - rank_over(complex.d1, field) - rank_over(complex.d2, field);
  return betti;
}

CoverHomologyReport h1_cover(const Presentation& p, const Character& chi, std::size_t n,
                             const std::vector<FieldSelector>& fields) {
  const CoverChainComplex complex = build_complex(p, chi, n);
  CoverHomologyReport report;
  const AbelianGroup h1 = integral_homology(complex.d1, complex.d2);
  report.free_rank = h1.free_rank;
  report.torsion = h1.torsion;
  report.field_betti = cover_betti(complex, fields);
  report.connected = weight_gcd(chi, n) == 1;
  return report;
}

std::size_t betti_bound(const MarkedArrangement& a, const ArrangementCharacter& chi, std::size_t n) {
  if (auto v = validate_arrangement(a); !v) throw InputError("invalid arrangement: " + v.reason);
  require_matching_modulus(chi, n);
  if (!eps_hypothesis_holds(chi, n))
    throw InputError(chi.is_modular() ? "Betti bound requires eps = 1 mod N" : "Betti bound requires eps = 1");
  const auto totals = chi.point_totals();
  std::size_t bound = static_cast<std::size_t>(a.n - 1);
  for (std::size_t i = 0; i < a.point_count(); ++i)
    bound += static_cast<std::size_t>(a.multiplicities[i] - 2) * (cyclic_gcd(totals[i], n) - 1);
  return bound;
}

std::string to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::kTorsionFree: return "TorsionFree";
    case CertificateVerdict::kBoundOnly: return "BoundOnly";
    case CertificateVerdict::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Certificate certify(const MarkedArrangement& a, const ArrangementCharacter& chi, std::size_t n) {
  if (auto v = validate_arrangement(a); !v) throw InputError("invalid arrangement: " + v.reason);
  require_matching_modulus(chi, n);
  Certificate cert;
  cert.mode_flag = chi.mode();

  const bool eps_ok = eps_hypothesis_holds(chi, n);
  cert.hypotheses_log.push_back({chi.is_modular() ? "eps = 1 mod " + std::to_string(n) : "eps = 1", eps_ok});

  bool gcds_ok = true;
  const auto totals = chi.point_totals();
  for (std::size_t i = 0; i < a.point_count(); ++i) {
    if (a.multiplicities[i] <= 2) continue;
    const bool ok = cyclic_gcd(totals[i], n) == 1;
    gcds_ok = gcds_ok && ok;
    cert.hypotheses_log.push_back(
        {"gcd(eps_" + std::to_string(i + 1) + ", " + std::to_string(n) + ") = 1 (m_" + std::to_string(i + 1) + " = " +
             std::to_string(a.multiplicities[i]) + ")",
         ok});
  }

  if (!eps_ok) {
    cert.verdict = CertificateVerdict::kInconclusive;
    return cert;
  }
  cert.bound = betti_bound(a, chi, n);
  if (gcds_ok) {
    cert.verdict = CertificateVerdict::kTorsionFree;
    cert.rank = static_cast<std::size_t>(a.n - 1);
  } else {
    cert.verdict = CertificateVerdict::kBoundOnly;
  }
  return cert;
}

TorsionDecomposition alexander_module(const Presentation& p, const Character& chi, const FieldSelector& field) {
  const LaurentMatrix alexander = fox_matrix(p, chi);
  return poly_kernel_and_snf(boundary_row(chi), alexander.transpose(), field);
}

DivisorCheck divisor_check(const MarkedArrangement& a, const ArrangementCharacter& chi, const FieldSelector& field) {
  const LaurentPoly divisor = alexander_divisor(a, chi);  // checks the hypotheses
  DivisorCheck check;
  check.module = alexander_module(boundary_presentation(a), boundary_character(a, chi), field);
  check.alexander_polynomial = check.module.order(field);
  check.divisor = reduce_into(divisor, field);
  check.divides = divides(check.alexander_polynomial, check.divisor);
  return check;
}

}  // namespace arrcov
