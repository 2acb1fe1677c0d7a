#include "arrcov/arrangement.hpp"

#include "arrcov/smith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using arrcov::ArrangementCharacter;
using arrcov::CharacterError;
using arrcov::LaurentMatrix;
using arrcov::LaurentPoly;
using arrcov::MarkedArrangement;

namespace {

const LaurentPoly t = LaurentPoly::t_power(1);

CharacterError::Kind rejection(const MarkedArrangement& a, std::int64_t eps, std::vector<std::vector<std::int64_t>> w,
                               std::optional<std::uint64_t> modulus = std::nullopt) {
  try {
    arrcov::character_from_weights(a, eps, std::move(w), modulus);
  } catch (const CharacterError& e) {
    return e.kind();
  }
  FAIL("character was accepted");
  return CharacterError::Kind::kShape;
}

}  // namespace

TEST_CASE("arrangement validation") {
  CHECK(arrcov::validate_arrangement({3, {2, 2}}));
  CHECK(arrcov::validate_arrangement({5, {3, 3}}));
  const auto bad = arrcov::validate_arrangement({4, {3, 3}});
  CHECK_FALSE(bad);
  CHECK(bad.reason.find("n = 1 + sum(m_i - 1)") != std::string::npos);
  CHECK_FALSE(arrcov::validate_arrangement({2, {2}}));
  CHECK_FALSE(arrcov::validate_arrangement({2, {1, 2}}));
  CHECK_FALSE(arrcov::validate_arrangement({1, {}}));
}

TEST_CASE("boundary presentation layout") {
  const auto p = arrcov::boundary_presentation({3, {2, 2}});
  CHECK(p.generator_names() == std::vector<std::string>{"alpha", "beta_1", "beta_2"});
  REQUIRE(p.relator_count() == 3);
  CHECK(p.relators()[0].to_string(p.generator_names()) == "alpha^-1 beta_1 beta_2");
  CHECK(p.relators()[1].to_string(p.generator_names()) == "alpha beta_1 alpha^-1 beta_1^-1");
  CHECK(p.relators()[2].to_string(p.generator_names()) == "alpha beta_2 alpha^-1 beta_2^-1");

  const auto q = arrcov::boundary_presentation({4, {3, 2}});
  CHECK(q.generator_names() == std::vector<std::string>{"alpha", "beta_1", "alpha_1_2", "beta_2"});
  CHECK(q.relator_count() == 4);
  CHECK(q.relators()[2].to_string(q.generator_names()) == "alpha_1_2 beta_1 alpha_1_2^-1 beta_1^-1");

  CHECK_THROWS_AS(arrcov::boundary_presentation({4, {3, 3}}), arrcov::InputError);
}

TEST_CASE("boundary presentation has n generators and n relators") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = arrcov::testing::random_arrangement(rng, 6, 6);
    const auto p = arrcov::boundary_presentation(a);
    CHECK(static_cast<long>(p.generator_count()) == a.n);
    CHECK(static_cast<long>(p.relator_count()) == a.n);
  }
}

TEST_CASE("character construction") {
  const MarkedArrangement a{3, {2, 2}};
  const auto chi = arrcov::character_from_weights(a, 1, {{0}, {-1}});
  CHECK(chi.point_totals() == std::vector<std::int64_t>{1, 0});
  CHECK_FALSE(chi.is_modular());
  CHECK(chi.modulus() == 0);

  CHECK(rejection(a, 1, {{1}, {1}}) == CharacterError::Kind::kSum);
  CHECK(rejection(a, 2, {{0}, {-2}}) == CharacterError::Kind::kSurjectivity);
  CHECK(rejection(a, 1, {{0, 1}, {-1}}) == CharacterError::Kind::kShape);
  CHECK(rejection(a, 1, {{0}}) == CharacterError::Kind::kShape);
  CHECK(rejection({4, {2, 2}}, 1, {{0}, {-1}}) == CharacterError::Kind::kArrangement);
  CHECK(rejection(a, 1, {{1}, {1}}, 4) == CharacterError::Kind::kSum);
  CHECK(rejection(a, 2, {{2}, {2}}, 6) == CharacterError::Kind::kSurjectivity);
  CHECK(rejection(a, 1, {{1}, {1}}, 0) == CharacterError::Kind::kShape);
}

TEST_CASE("Milnor character") {
  for (const MarkedArrangement& a : {MarkedArrangement{3, {2, 2}}, MarkedArrangement{16, {4, 4, 4, 4, 4}},
                                     MarkedArrangement{6, {3, 3, 2}}}) {
    const auto params = arrcov::williams_parameters(a);
    CHECK(params.n == static_cast<std::uint64_t>(a.n));
    CHECK(params.character.is_modular());
    CHECK(params.character.modulus() == params.n);
    CHECK(params.character.eps() == 1);
    for (std::size_t i = 0; i < a.point_count(); ++i)
      CHECK(params.character.point_totals()[i] == a.multiplicities[i]);
  }
  CHECK(arrcov::williams_parameters({16, {4, 4, 4, 4, 4}}).character.point_totals() ==
        std::vector<std::int64_t>{4, 4, 4, 4, 4});
}

TEST_CASE("mod-N representative closes the long relator") {
  const MarkedArrangement a{5, {3, 3}};
  const auto chi = arrcov::character_from_weights(a, 7, {{1, 1}, {5, 4}}, 6);
  const auto rep = chi.representative();
  CHECK(rep.eps == 1);
  std::int64_t sum = (1 - 2) * rep.eps;
  for (auto e : rep.point_totals) sum += e;
  CHECK(sum == 0);
  const auto stored = chi.point_totals();
  for (std::size_t i = 0; i < 2; ++i) CHECK((rep.point_totals[i] - stored[i]) % 6 == 0);
  CHECK(arrcov::validate_character(arrcov::boundary_presentation(a), arrcov::boundary_character(a, chi)));
}

TEST_CASE("eps hypothesis") {
  const MarkedArrangement a{3, {2, 2}};
  CHECK(arrcov::eps_hypothesis_holds(arrcov::character_from_weights(a, 1, {{0}, {-1}}), 4));
  CHECK_FALSE(arrcov::eps_hypothesis_holds(arrcov::character_from_weights(a, -1, {{0}, {1}}), 4));
  CHECK_FALSE(arrcov::eps_hypothesis_holds(arrcov::character_from_weights(a, 5, {{0}, {1}}, 6), 6));
  CHECK(arrcov::eps_hypothesis_holds(arrcov::character_from_weights(a, 7, {{0}, {-1}}, 6), 6));
  CHECK_FALSE(arrcov::eps_hypothesis_holds(arrcov::character_from_weights(a, 7, {{0}, {-1}}, 6), 5));
}

TEST_CASE("direct Alexander matrix entries") {
  const MarkedArrangement a{3, {2, 2}};
  const auto chi = arrcov::character_from_weights(a, 1, {{0}, {-1}});
  const LaurentMatrix m = arrcov::direct_alexander(a, chi);
  const LaurentPoly inv = LaurentPoly::t_power(-1);
  CHECK(m == LaurentMatrix{{-inv, inv, LaurentPoly(1)}, {1 - t, t - 1, 0}, {0, 0, t - 1}});

  // eps = 1, s = 3: (t^-2 - 1)/(t - 1)
  const auto three = arrcov::character_from_weights({4, {2, 2, 2}}, 1, {{0}, {0}, {-1}});
  CHECK(arrcov::direct_alexander({4, {2, 2, 2}}, three)(0, 0) == -LaurentPoly::t_power(-2) - inv);

  // rows [alpha, beta_i] start with 1 - t^{eps_i}
  const auto chi33 = arrcov::character_from_weights({5, {3, 3}}, 1, {{1, 1}, {-1, -2}});
  const LaurentMatrix m33 = arrcov::direct_alexander({5, {3, 3}}, chi33);
  CHECK(m33(1, 0) == 1 - LaurentPoly::t_power(3));
  CHECK(m33(3, 0) == 1 - LaurentPoly::t_power(-2));
  CHECK(m33(2, 1) == t - 1);
  CHECK(m33(2, 2) == 1 - LaurentPoly::t_power(3));
}

TEST_CASE("direct Alexander matrix equals the Fox-calculus matrix") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = arrcov::testing::random_arrangement(rng, 5, 5);
    const std::int64_t eps = trial % 3 == 0 ? 1 : 0;  // 0 draws a random nonzero eps
    const auto chi = arrcov::testing::random_integral_character(rng, a, {.eps = eps});
    CAPTURE(trial);
    CHECK(arrcov::direct_alexander(a, chi) ==
          arrcov::fox_matrix(arrcov::boundary_presentation(a), arrcov::boundary_character(a, chi)));
  }
}

TEST_CASE("direct Alexander matrix with eps = 0") {
  // eps = 0 is allowed for an integral character as long as gcd = 1
  const MarkedArrangement a{5, {2, 2, 2, 2}};
  const auto chi = arrcov::character_from_weights(a, 0, {{1}, {-1}, {2}, {-2}});
  const LaurentMatrix m = arrcov::direct_alexander(a, chi);
  CHECK(m(0, 0) == LaurentPoly(-3));
  CHECK(m == arrcov::fox_matrix(arrcov::boundary_presentation(a), arrcov::boundary_character(a, chi)));
}

TEST_CASE("diagonal form") {
  const auto chi22 = arrcov::character_from_weights({3, {2, 2}}, 1, {{0}, {-1}});
  CHECK(arrcov::diagonal_form({3, {2, 2}}, chi22) == LaurentMatrix::diagonal({0, LaurentPoly::t_power(-1), t - 1}));

  const auto chi33 = arrcov::character_from_weights({5, {3, 3}}, 1, {{1, 1}, {-1, -2}});
  CHECK(arrcov::diagonal_form({5, {3, 3}}, chi33) ==
        LaurentMatrix::diagonal({0, LaurentPoly::t_power(-1), t - 1, 1 - LaurentPoly::t_power(3),
                                 1 - LaurentPoly::t_power(-2)}));

  const auto bad = arrcov::character_from_weights({3, {2, 2}}, -1, {{0}, {1}});
  CHECK_THROWS_AS(arrcov::diagonal_form({3, {2, 2}}, bad), arrcov::InputError);
}

TEST_CASE("diagonal form has n entries") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = arrcov::testing::random_arrangement(rng, 5, 5);
    const auto chi = arrcov::testing::random_integral_character(rng, a, {});
    const auto d = arrcov::diagonal_form(a, chi);
    CHECK(static_cast<long>(d.rows()) == a.n);
    CHECK(static_cast<long>(d.cols()) == a.n);
  }
}

TEST_CASE("Alexander divisor") {
  CHECK(arrcov::alexander_divisor({3, {2, 2}}, arrcov::character_from_weights({3, {2, 2}}, 1, {{0}, {-1}})) ==
        t - 1);
  const auto chi33 = arrcov::character_from_weights({5, {3, 3}}, 1, {{1, 1}, {-1, -2}});
  CHECK(arrcov::alexander_divisor({5, {3, 3}}, chi33) ==
        ((t - 1) * (t.pow(3) - 1) * (t * t - 1)).canonical());
  const auto chi222 = arrcov::character_from_weights({4, {2, 2, 2}}, 2, {{-1}, {1}, {-2}});
  CHECK(arrcov::alexander_divisor({4, {2, 2, 2}}, chi222) == (t - 1) * (t * t - 1));

  // eps_i = 0 at a point with m_i > 2 breaks the hypotheses
  const auto zero = arrcov::character_from_weights({5, {3, 3}}, 1, {{-1, 0}, {0, 0}});
  CHECK_THROWS_AS(arrcov::alexander_divisor({5, {3, 3}}, zero), arrcov::InputError);
  const auto milnor = arrcov::williams_parameters({3, {2, 2}}).character;
  CHECK_THROWS_AS(arrcov::alexander_divisor({3, {2, 2}}, milnor), arrcov::InputError);
}

TEST_CASE("substituted direct and diagonal forms have equal Smith forms") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = arrcov::testing::random_arrangement(rng, 3, 4);
    const auto chi = arrcov::testing::random_integral_character(rng, a, {});
    const auto direct = arrcov::direct_alexander(a, chi);
    const auto diag = arrcov::diagonal_form(a, chi);
    for (std::size_t n = 1; n <= 5; ++n)
      CHECK(arrcov::snf_int(arrcov::substitute(direct, n)) == arrcov::snf_int(arrcov::substitute(diag, n)));
  }
}
