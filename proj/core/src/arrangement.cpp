#include "arrcov/arrangement.hpp"

#include <numeric>

namespace arrcov {

namespace {

void require_valid(const MarkedArrangement& a) {
  if (auto v = validate_arrangement(a); !v) throw InputError("invalid arrangement: " + v.reason);
}

std::string vec_to_string(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Column (and row) of beta_i; alpha_{i,j} follows at offset j - 1.
std::vector<std::size_t> block_starts(const MarkedArrangement& a) {
  std::vector<std::size_t> starts;
  std::size_t next = 1;
  for (long m : a.multiplicities) {
    starts.push_back(next);
    next += static_cast<std::size_t>(m - 1);
  }
  return starts;
}

std::int64_t mod_residue(std::int64_t x, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return ((x % sn) + sn) % sn;
}

}  // namespace

Verdict validate_arrangement(const MarkedArrangement& a) {
  if (a.multiplicities.size() < 2)
    return Verdict::reject("the marked line needs s >= 2 multiple points (essential arrangement), got s = " +
                           std::to_string(a.multiplicities.size()));
  long expected = 1;
  for (std::size_t i = 0; i < a.multiplicities.size(); ++i) {
    if (a.multiplicities[i] < 2)
      return Verdict::reject("multiplicity m_" + std::to_string(i + 1) + " = " + std::to_string(a.multiplicities[i]) +
                             " is below 2");
    expected += a.multiplicities[i] - 1;
  }
  if (expected != a.n)
    return Verdict::reject("line count n = " + std::to_string(a.n) + " breaks n = 1 + sum(m_i - 1) = " +
                           std::to_string(expected) + " for m = " + vec_to_string(a.multiplicities));
  return Verdict::accept();
}

std::vector<std::int64_t> ArrangementCharacter::point_totals() const {
  std::vector<std::int64_t> totals;
  totals.reserve(point_weights_.size());
  for (const auto& w : point_weights_) totals.push_back(std::accumulate(w.begin(), w.end(), eps_));
  return totals;
}

ArrangementCharacter::Representative ArrangementCharacter::representative() const {
  Representative rep;
  rep.point_weights = point_weights_;
  rep.eps = eps_;
  if (mode_ == Mode::kModular && mod_residue(eps_, modulus_) == mod_residue(1, modulus_)) rep.eps = 1;
  for (const auto& w : point_weights_) rep.point_totals.push_back(std::accumulate(w.begin(), w.end(), rep.eps));
  if (mode_ == Mode::kModular) {
    const auto s = static_cast<std::int64_t>(point_weights_.size());
    std::int64_t sum = (1 - s) * rep.eps;
    for (auto e : rep.point_totals) sum += e;
    rep.point_totals.back() -= sum;  // sum is a multiple of the modulus
  }
  return rep;
}

ArrangementCharacter character_from_weights(const MarkedArrangement& a, std::int64_t eps,
                                            std::vector<std::vector<std::int64_t>> point_weights,
                                            std::optional<std::uint64_t> modulus) {
  using Kind = CharacterError::Kind;
  if (auto v = validate_arrangement(a); !v) throw CharacterError(Kind::kArrangement, "invalid arrangement: " + v.reason);
  if (point_weights.size() != a.point_count())
    throw CharacterError(Kind::kShape, "expected weights for " + std::to_string(a.point_count()) + " points, got " +
                                           std::to_string(point_weights.size()));
  for (std::size_t i = 0; i < point_weights.size(); ++i)
    if (static_cast<long>(point_weights[i].size()) != a.multiplicities[i] - 1)
      throw CharacterError(Kind::kShape, "point " + std::to_string(i + 1) + " has multiplicity " +
                                             std::to_string(a.multiplicities[i]) + " and needs " +
                                             std::to_string(a.multiplicities[i] - 1) + " weights, got " +
                                             std::to_string(point_weights[i].size()));
  if (modulus && *modulus == 0) throw CharacterError(Kind::kShape, "modulus must be at least 1");

  // eps + sum of all eps_{i,j} equals (1-s)eps + sum eps_i
  std::int64_t sum = eps;
  std::uint64_t g = static_cast<std::uint64_t>(eps < 0 ? -eps : eps);
  for (const auto& w : point_weights)
    for (auto x : w) {
      sum += x;
      g = std::gcd(g, static_cast<std::uint64_t>(x < 0 ? -x : x));
    }

  ArrangementCharacter chi;
  chi.eps_ = eps;
  chi.point_weights_ = std::move(point_weights);
  if (!modulus) {
    if (sum != 0)
      throw CharacterError(Kind::kSum, "weights break (1-s)eps + sum eps_i = 0: the sum is " + std::to_string(sum));
    if (g != 1)
      throw CharacterError(Kind::kSurjectivity,
                           "character is not onto Z: gcd of all weights is " + std::to_string(g) + ", expected 1");
  } else {
    if (mod_residue(sum, *modulus) != 0)
      throw CharacterError(Kind::kSum, "weights break (1-s)eps + sum eps_i = 0 mod " + std::to_string(*modulus) +
                                           ": the sum is " + std::to_string(sum));
    if (std::gcd(g, *modulus) != 1)
      throw CharacterError(Kind::kSurjectivity, "character is not onto Z/" + std::to_string(*modulus) +
                                                    ": gcd(weights, N) = " + std::to_string(std::gcd(g, *modulus)));
    chi.mode_ = ArrangementCharacter::Mode::kModular;
    chi.modulus_ = *modulus;
  }
  return chi;
}

Presentation boundary_presentation(const MarkedArrangement& a) {
  require_valid(a);
  const std::size_t s = a.point_count();
  std::vector<std::string> names{"alpha"};
  std::vector<std::size_t> beta;
  std::vector<std::vector<std::size_t>> alpha_ij(s);
  for (std::size_t i = 0; i < s; ++i) {
    beta.push_back(names.size());
    names.push_back("beta_" + std::to_string(i + 1));
    for (long j = 2; j <= a.multiplicities[i] - 1; ++j) {
      alpha_ij[i].push_back(names.size());
      names.push_back("alpha_" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
  }

  std::vector<Word> relators;
  Word longest = Word::power(0, 1 - static_cast<long>(s));
  for (std::size_t b : beta) longest = longest * Word::generator(b);
  relators.push_back(longest);
  for (std::size_t i = 0; i < s; ++i) {
    relators.push_back(Word::commutator(Word::generator(0), Word::generator(beta[i])));
    for (std::size_t g : alpha_ij[i]) relators.push_back(Word::commutator(Word::generator(g), Word::generator(beta[i])));
  }
  return {std::move(names), std::move(relators)};
}

Character boundary_character(const MarkedArrangement& a, const ArrangementCharacter& chi) {
  require_valid(a);
  const auto rep = chi.representative();
  Character out;
  out.weights.push_back(rep.eps);
  for (std::size_t i = 0; i < a.point_count(); ++i) {
    out.weights.push_back(rep.point_totals[i]);
    for (long j = 2; j <= a.multiplicities[i] - 1; ++j)
      out.weights.push_back(rep.point_weights[i][static_cast<std::size_t>(j - 2)]);
  }
  return out;
}

LaurentMatrix direct_alexander(const MarkedArrangement& a, const ArrangementCharacter& chi) {
  require_valid(a);
  const auto rep = chi.representative();
  const auto s = static_cast<std::int64_t>(a.point_count());
  const auto n = static_cast<std::size_t>(a.n);
  const auto starts = block_starts(a);
  LaurentMatrix m(n, n);
  using P = LaurentPoly;

  // (t^{eps(1-s)} - 1) / (t^eps - 1), read as 1 - s when eps = 0
  if (rep.eps != 0) {
    auto q = P::t_power_minus_one(rep.eps * (1 - s)).divide_exact(P::t_power_minus_one(rep.eps));
    if (!q) throw ConsistencyError("direct_alexander: first-row quotient is not exact");
    m(0, 0) = *q;
  } else {
    m(0, 0) = P(1 - s);
  }
  std::int64_t exponent = rep.eps * (1 - s);
  for (std::size_t i = 0; i < a.point_count(); ++i) {
    m(0, starts[i]) = P::t_power(exponent);
    exponent += rep.point_totals[i];
  }

  for (std::size_t i = 0; i < a.point_count(); ++i) {
    const std::size_t b = starts[i];
    const P one_minus_total = -P::t_power_minus_one(rep.point_totals[i]);
    m(b, 0) = one_minus_total;
    m(b, b) = P::t_power_minus_one(rep.eps);
    for (long j = 2; j <= a.multiplicities[i] - 1; ++j) {
      const std::size_t k = b + static_cast<std::size_t>(j - 1);
      m(k, b) = P::t_power_minus_one(rep.point_weights[i][static_cast<std::size_t>(j - 2)]);
      m(k, k) = one_minus_total;
    }
  }
  return m;
}

bool eps_hypothesis_holds(const ArrangementCharacter& chi, std::uint64_t n) {
  if (!chi.is_modular()) return chi.eps() == 1;
  if (n == 0) return false;
  return mod_residue(chi.eps(), n) == mod_residue(1, n);
}

LaurentMatrix diagonal_form(const MarkedArrangement& a, const ArrangementCharacter& chi) {
  require_valid(a);
  const auto rep = chi.representative();
  if (rep.eps != 1)
    throw InputError(chi.is_modular() ? "diagonal form requires eps = 1 mod N, got eps = " + std::to_string(chi.eps())
                                      : "diagonal form requires eps = 1, got eps = " + std::to_string(chi.eps()));
  const auto s = static_cast<std::int64_t>(a.point_count());
  std::vector<LaurentPoly> entries{LaurentPoly{}, LaurentPoly::t_power(1 - s)};
  for (std::int64_t i = 1; i < s; ++i) entries.push_back(LaurentPoly::t_power_minus_one(1));
  for (std::size_t i = 0; i < a.point_count(); ++i)
    for (long k = 0; k < a.multiplicities[i] - 2; ++k) entries.push_back(-LaurentPoly::t_power_minus_one(rep.point_totals[i]));
  return LaurentMatrix::diagonal(entries);
}

LaurentPoly alexander_divisor(const MarkedArrangement& a, const ArrangementCharacter& chi) {
  require_valid(a);
  if (chi.is_modular()) throw InputError("alexander_divisor needs an integral character");
  if (chi.eps() == 0) throw InputError("alexander_divisor needs eps != 0");
  const auto totals = chi.point_totals();
  for (std::size_t i = 0; i < a.point_count(); ++i)
    if (a.multiplicities[i] > 2 && totals[i] == 0)
      throw InputError("alexander_divisor needs eps_i != 0 where m_i > 2; fails at point " + std::to_string(i + 1));

  const auto s = static_cast<unsigned>(a.point_count());
  LaurentPoly value = LaurentPoly::t_power_minus_one(1) * LaurentPoly::t_power_minus_one(chi.eps()).pow(s - 2);
  for (std::size_t i = 0; i < a.point_count(); ++i)
    value *= LaurentPoly::t_power_minus_one(totals[i]).pow(static_cast<unsigned>(a.multiplicities[i] - 2));
  return value.canonical();
}

MilnorParameters williams_parameters(const MarkedArrangement& a) {
  require_valid(a);
  std::vector<std::vector<std::int64_t>> ones;
  for (long m : a.multiplicities) ones.emplace_back(static_cast<std::size_t>(m - 1), 1);
  const auto n = static_cast<std::uint64_t>(a.n);
  return {character_from_weights(a, 1, std::move(ones), n), n};
}

}  // namespace arrcov
