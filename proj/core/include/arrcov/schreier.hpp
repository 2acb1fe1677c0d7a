#pragma once

#include "arrcov/cover_homology.hpp"
#include "arrcov/fox.hpp"

#include <cstdint>
#include <vector>

namespace arrcov {

/// Right action of the generators on the cosets Z/N of ker(G -> Z/N):
/// generator g shifts residue r to r + w_g mod N.
struct CosetTable {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> action;  // action[g][r]

  static CosetTable from_character(const Character& chi, std::size_t n);
  bool transitive() const;
};

/// Presentation of the index-N kernel subgroup, tree generators removed.
struct SchreierPresentation {
  Presentation presentation;
  /// Schreier generator (g, r) -> index in presentation, or -1 on the tree.
  std::vector<std::vector<long>> generator_index;
  /// Transversal word for each coset, prefix-closed.
  std::vector<Word> transversal;
  std::size_t unreduced_generator_count = 0;  // generators * N
  std::size_t tree_size = 0;                  // N - 1
};

/// Reidemeister-Schreier rewriting for the kernel of g -> w_g mod N. The
/// transversal is the powers of the first generator whose weight is prime to
/// N when one exists, otherwise a breadth-first spanning tree of the coset
/// graph. One rewritten relator per relator and coset. Throws InputError for a
/// disconnected cover (gcd(weights, N) != 1) or an invalid character.
SchreierPresentation schreier_presentation(const Presentation& p, const Character& chi, std::size_t n);

/// Abelian invariants of the kernel subgroup from the abelianized relator
/// matrix of schreier_presentation, plus ranks of that matrix over each field.
CoverHomologyReport oracle_h1(const Presentation& p, const Character& chi, std::size_t n,
                              const std::vector<FieldSelector>& fields = default_fields());

}  // namespace arrcov
