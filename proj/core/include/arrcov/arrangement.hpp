#pragma once

#include "arrcov/error.hpp"
#include "arrcov/fox.hpp"
#include "arrcov/laurent_poly.hpp"
#include "arrcov/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arrcov {

/// Combinatorics of a line arrangement seen from a marked line H: the total
/// number of lines and the multiplicities of the multiple points on H.
struct MarkedArrangement {
  long n = 0;
  std::vector<long> multiplicities;

  std::size_t point_count() const { return multiplicities.size(); }
  friend bool operator==(const MarkedArrangement&, const MarkedArrangement&) = default;
};

/// Accepts iff s >= 2, every m_i >= 2 and n = 1 + sum(m_i - 1).
Verdict validate_arrangement(const MarkedArrangement& a);

/// Integer weights of a character on the meridians: eps on H, and for point i
/// the weights of H_{i,2}..H_{i,m_i}. Integral characters map onto Z; mod-N
/// characters onto Z/N.
class ArrangementCharacter {
 public:
  enum class Mode { kIntegral, kModular };

  /// Weights actually placed on the generators of the boundary presentation.
  /// Integral mode: exactly the stored weights. Mod-N mode: eps replaced by 1
  /// when eps = 1 mod N, and the total of the last point shifted by a multiple
  /// of N so that the long relator has weight exactly 0. Residues mod N agree
  /// with the stored weights.
  struct Representative {
    std::int64_t eps = 0;
    std::vector<std::vector<std::int64_t>> point_weights;
    std::vector<std::int64_t> point_totals;
  };

  Mode mode() const { return mode_; }
  bool is_modular() const { return mode_ == Mode::kModular; }
  /// 0 in integral mode
  std::uint64_t modulus() const { return modulus_; }
  std::int64_t eps() const { return eps_; }
  const std::vector<std::vector<std::int64_t>>& point_weights() const { return point_weights_; }
  /// eps_i = eps + sum_j eps_{i,j}, from the stored weights
  std::vector<std::int64_t> point_totals() const;
  Representative representative() const;

  friend bool operator==(const ArrangementCharacter&, const ArrangementCharacter&) = default;

 private:
  friend ArrangementCharacter character_from_weights(const MarkedArrangement&, std::int64_t,
                                                     std::vector<std::vector<std::int64_t>>,
                                                     std::optional<std::uint64_t>);
  std::int64_t eps_ = 0;
  std::vector<std::vector<std::int64_t>> point_weights_;
  Mode mode_ = Mode::kIntegral;
  std::uint64_t modulus_ = 0;
};

/// Error raised by character_from_weights; kind tells which constraint broke.
class CharacterError : public InputError {
 public:
  enum class Kind { kShape, kSum, kSurjectivity, kArrangement };
  CharacterError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Validates and builds a character. modulus empty means integral mode:
/// (1-s)eps + sum eps_i = 0 and gcd of all weights = 1. With a modulus N the
/// sum must vanish mod N and gcd(weights, N) must be 1.
ArrangementCharacter character_from_weights(const MarkedArrangement& a, std::int64_t eps,
                                            std::vector<std::vector<std::int64_t>> point_weights,
                                            std::optional<std::uint64_t> modulus = std::nullopt);

/// Generators (alpha, beta_1, alpha_{1,2}..alpha_{1,m_1-1}, ..., beta_s, ...)
/// and relators (alpha^{1-s} beta_1..beta_s, then per point [alpha, beta_i]
/// followed by [alpha_{i,j}, beta_i]); n of each. Throws on invalid input.
Presentation boundary_presentation(const MarkedArrangement& a);

/// Weights of the boundary presentation's generators under the character's
/// representative, in generator order.
Character boundary_character(const MarkedArrangement& a, const ArrangementCharacter& chi);

/// Alexander matrix of the boundary presentation written out block by block
/// without Fox calculus; equal to fox_matrix(boundary_presentation(a), ...).
LaurentMatrix direct_alexander(const MarkedArrangement& a, const ArrangementCharacter& chi);

/// diag(0, t^{1-s}, (t-1) x (s-1), (1-t^{eps_i}) x (m_i-2) for each i).
/// Requires eps = 1 (integral) or eps = 1 mod N (mod-N); throws otherwise.
LaurentMatrix diagonal_form(const MarkedArrangement& a, const ArrangementCharacter& chi);

/// True when the character satisfies the eps hypothesis for an N-fold cover:
/// eps == 1 in integral mode, eps = 1 mod N in mod-N mode.
bool eps_hypothesis_holds(const ArrangementCharacter& chi, std::uint64_t n);

/// Canonical form of (t-1)(t^eps-1)^{s-2} prod_i (t^{eps_i}-1)^{m_i-2}.
/// Needs an integral character with eps != 0 and eps_i != 0 whenever m_i > 2.
LaurentPoly alexander_divisor(const MarkedArrangement& a, const ArrangementCharacter& chi);

/// The all-ones character mod n and the cover degree N = n of the Milnor fiber.
struct MilnorParameters {
  ArrangementCharacter character;
  std::uint64_t n = 0;
};
MilnorParameters williams_parameters(const MarkedArrangement& a);

}  // namespace arrcov
