#pragma once

#include "arrcov/error.hpp"
#include "arrcov/laurent_poly.hpp"
#include "arrcov/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arrcov {

/// x_gen^exp with exp = +1 or -1.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of a free group, not necessarily reduced.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(std::size_t g) { return Word{{g, 1}}; }
  /// x_g^k as |k| letters
  static Word power(std::size_t g, long k);
  /// [a, b] = a b a^-1 b^-1
  static Word commutator(const Word& a, const Word& b);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& other) const;
  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

/// Finite presentation <x_1..x_m | r_1..r_l>. Every relator letter refers to
/// an existing generator (checked on construction).
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  std::size_t generator_count() const { return names_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Homomorphism from the free group to Z: one weight per generator.
struct Character {
  std::vector<std::int64_t> weights;

  std::int64_t weight_of(const Word& w) const;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Image of d w / d x_g under x_h -> t^{weight(h)}. The word is reduced first;
/// a single left-to-right pass tracks the weight of the prefix.
/// Throws InputError when g or a letter is outside the character's range.
LaurentPoly fox_derivative(const Word& w, std::size_t g, const Character& chi);

/// Outcome of validate_character; failing_relator is set on rejection.
struct CharacterVerdict : Verdict {
  std::optional<std::size_t> failing_relator;
  std::int64_t failing_weight = 0;
};

/// Accepts iff the character has one weight per generator and every relator
/// has total weight 0.
CharacterVerdict validate_character(const Presentation& p, const Character& chi);

/// l x m Alexander matrix: entry (i, j) is fox_derivative(r_i, x_j, chi).
/// Throws InputError when validate_character rejects.
LaurentMatrix fox_matrix(const Presentation& p, const Character& chi);

}  // namespace arrcov
