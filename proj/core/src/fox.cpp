#include "arrcov/fox.hpp"

#include <cstdlib>
#include <sstream>

namespace arrcov {

Word Word::power(std::size_t g, long k) {
  std::vector<Letter> letters(static_cast<std::size_t>(std::labs(k)), Letter{g, k < 0 ? -1 : 1});
  return Word(std::move(letters));
}

Word Word::commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word Word::inverse() const {
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return Word(std::move(inv));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(joined));
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (i) out << " ";
    if (l.generator < names.size()) out << names[l.generator];
    else out << "x" << l.generator;
    if (l.exponent < 0) out << "^-1";
  }
  return out.str();
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) stack.pop_back();
    else stack.push_back(l);
  }
  return Word(std::move(stack));
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  for (std::size_t r = 0; r < relators_.size(); ++r)
    for (const Letter& l : relators_[r].letters()) {
      if (l.generator >= names_.size())
        throw InputError("relator " + std::to_string(r) + " uses generator " + std::to_string(l.generator) +
                         " but only " + std::to_string(names_.size()) + " exist");
      if (l.exponent != 1 && l.exponent != -1)
        throw InputError("relator " + std::to_string(r) + " has a letter with exponent other than +-1");
    }
}

std::int64_t Character::weight_of(const Word& w) const {
  std::int64_t total = 0;
  for (const Letter& l : w.letters()) {
    if (l.generator >= weights.size()) throw InputError("character has no weight for generator " + std::to_string(l.generator));
    total += l.exponent * weights[l.generator];
  }
  return total;
}

LaurentPoly fox_derivative(const Word& w, std::size_t g, const Character& chi) {
  if (g >= chi.weights.size()) throw InputError("fox_derivative: generator " + std::to_string(g) + " out of range");
  LaurentPoly result;
  std::int64_t prefix = 0;
  const Word reduced = free_reduce(w);
  for (const Letter& l : reduced.letters()) {
    if (l.generator >= chi.weights.size())
      throw InputError("fox_derivative: word letter " + std::to_string(l.generator) + " out of range");
    const std::int64_t weight = chi.weights[l.generator];
    if (l.exponent > 0) {
      if (l.generator == g) result.add_term(1, prefix);
      prefix += weight;
    } else {
      prefix -= weight;
      if (l.generator == g) result.add_term(-1, prefix);
    }
  }
  return result;
}

CharacterVerdict validate_character(const Presentation& p, const Character& chi) {
  CharacterVerdict v;
  if (chi.weights.size() != p.generator_count()) {
    v.ok = false;
    v.reason = "character has " + std::to_string(chi.weights.size()) + " weights for " +
               std::to_string(p.generator_count()) + " generators";
    return v;
  }
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    const std::int64_t w = chi.weight_of(p.relators()[r]);
    if (w != 0) {
      v.ok = false;
      v.failing_relator = r;
      v.failing_weight = w;
      v.reason = "relator " + std::to_string(r) + " has weight " + std::to_string(w) + ", expected 0";
      return v;
    }
  }
  return v;
}

LaurentMatrix fox_matrix(const Presentation& p, const Character& chi) {
  if (auto v = validate_character(p, chi); !v) throw InputError("fox_matrix: invalid character: " + v.reason);
  LaurentMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t r = 0; r < p.relator_count(); ++r)
    for (std::size_t g = 0; g < p.generator_count(); ++g) m(r, g) = fox_derivative(p.relators()[r], g, chi);
  return m;
}

}  // namespace arrcov
