#include "arrcov/schreier.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using arrcov::Character;
using arrcov::CosetTable;
using arrcov::Presentation;
using arrcov::Word;

namespace {

const Word x = Word::generator(0);
const Word y = Word::generator(1);

const Presentation circle({"x"}, {});
const Presentation torus({"x", "y"}, {Word::commutator(x, y)});
const Presentation klein({"x", "y"}, {x * y * x.inverse() * y});

bool same_homology(const arrcov::CoverHomologyReport& a, const arrcov::CoverHomologyReport& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion && a.field_betti == b.field_betti;
}

}  // namespace

TEST_CASE("coset table") {
  const auto table = CosetTable::from_character(Character{{1, 3}}, 4);
  CHECK(table.action[0] == std::vector<std::size_t>{1, 2, 3, 0});
  CHECK(table.action[1] == std::vector<std::size_t>{3, 0, 1, 2});
  CHECK(table.transitive());
  CHECK_FALSE(CosetTable::from_character(Character{{2, 4}}, 4).transitive());
  CHECK(CosetTable::from_character(Character{{-1}}, 5).action[0][0] == 4);
  CHECK(CosetTable::from_character(Character{{6, 10}}, 15).transitive());
  CHECK_THROWS_AS(CosetTable::from_character(Character{{1}}, 0), arrcov::InputError);
}

TEST_CASE("Schreier presentation of a circle cover") {
  const auto sp = arrcov::schreier_presentation(circle, Character{{1}}, 3);
  CHECK(sp.presentation.generator_count() == 1);
  CHECK(sp.presentation.relator_count() == 0);
  CHECK(sp.unreduced_generator_count == 3);
  CHECK(sp.tree_size == 2);
  CHECK(arrcov::oracle_h1(circle, Character{{1}}, 5).free_rank == 1);
}

TEST_CASE("Schreier presentation of a torus cover") {
  const auto h = arrcov::oracle_h1(torus, Character{{1, 0}}, 2);
  CHECK(h.free_rank == 2);
  CHECK(h.torsion.empty());
  const auto sp = arrcov::schreier_presentation(torus, Character{{1, 0}}, 2);
  CHECK(sp.presentation.generator_count() == 3);
  CHECK(sp.presentation.relator_count() == 2);
}

TEST_CASE("transversal words land in their cosets") {
  for (const Character& chi : {Character{{1, 0}}, Character{{2, 3}}, Character{{-1, 4}}, Character{{4, 3}}}) {
    const std::size_t n = 6;
    const auto sp = arrcov::schreier_presentation(torus, chi, n);
    REQUIRE(sp.transversal.size() == n);
    CHECK(sp.transversal[0].empty());
    for (std::size_t r = 0; r < n; ++r) {
      const auto w = chi.weight_of(sp.transversal[r]);
      CHECK(((w % 6) + 6) % 6 == static_cast<std::int64_t>(r));
    }
    std::size_t tree = 0;
    for (const auto& row : sp.generator_index)
      for (long idx : row)
        if (idx < 0) ++tree;
    CHECK(tree == n - 1);
  }
}

TEST_CASE("breadth-first transversal when no weight is a unit") {
  // weights 2 and 3 generate Z/6 but neither does alone
  const Character chi{{2, 3}};
  const auto oracle = arrcov::oracle_h1(torus, chi, 6);
  CHECK(oracle.free_rank == 2);
  CHECK(oracle.torsion.empty());
  CHECK(same_homology(oracle, arrcov::h1_cover(torus, chi, 6)));
}

TEST_CASE("torsion survives rewriting") {
  CHECK(arrcov::oracle_h1(klein, Character{{1, 0}}, 3).torsion == std::vector<arrcov::Integer>{2});
  CHECK(arrcov::oracle_h1(klein, Character{{1, 0}}, 2).torsion.empty());
}

TEST_CASE("boundary presentations: counts and agreement") {
  const arrcov::MarkedArrangement a{3, {2, 2}};
  const auto chi = arrcov::character_from_weights(a, 1, {{0}, {-1}});
  const auto p = arrcov::boundary_presentation(a);
  const auto w = arrcov::boundary_character(a, chi);
  const auto sp = arrcov::schreier_presentation(p, w, 4);
  CHECK(sp.unreduced_generator_count == 12);
  CHECK(sp.presentation.relator_count() == 12);
  const auto oracle = arrcov::oracle_h1(p, w, 4);
  CHECK(oracle.free_rank == 2);
  CHECK(oracle.torsion.empty());
  CHECK(same_homology(oracle, arrcov::h1_cover(p, w, 4)));
}

TEST_CASE("rewritten presentation keeps the Euler characteristic") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto g = arrcov::testing::random_group(rng, 5, 10, n);
    const auto sp = arrcov::schreier_presentation(g.presentation, g.character, n);
    const long m = static_cast<long>(g.presentation.generator_count());
    const long l = static_cast<long>(g.presentation.relator_count());
    const long gens = static_cast<long>(sp.presentation.generator_count() + sp.tree_size);
    CHECK(static_cast<long>(sp.unreduced_generator_count) == m * static_cast<long>(n));
    CHECK(gens - static_cast<long>(sp.presentation.relator_count()) == static_cast<long>(n) * (m - l));
  }
}

TEST_CASE("oracle agrees with the chain complex on random groups") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto g = arrcov::testing::random_group(rng, 5, 10, n);
    CAPTURE(trial);
    CHECK(same_homology(arrcov::oracle_h1(g.presentation, g.character, n),
                        arrcov::h1_cover(g.presentation, g.character, n)));
  }
}

TEST_CASE("oracle rejects bad input") {
  CHECK_THROWS_AS(arrcov::schreier_presentation(circle, Character{{2}}, 4), arrcov::InputError);
  CHECK_THROWS_AS(arrcov::schreier_presentation(Presentation({"x"}, {x * x}), Character{{1}}, 2), arrcov::InputError);
  CHECK_THROWS_AS(arrcov::schreier_presentation(torus, Character{{1}}, 2), arrcov::InputError);
}
