#include "arrcov/schreier.hpp"

#include <deque>
#include <numeric>

namespace arrcov {

namespace {

std::size_t shift(std::size_t r, std::int64_t w, std::size_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((static_cast<std::int64_t>(r) + w) % sn + sn) % sn);
}

}  // namespace

CosetTable CosetTable::from_character(const Character& chi, std::size_t n) {
  if (n == 0) throw InputError("coset table needs N >= 1");
  CosetTable table;
  table.n = n;
  for (auto w : chi.weights) {
    std::vector<std::size_t> perm(n);
    for (std::size_t r = 0; r < n; ++r) perm[r] = shift(r, w, n);
    table.action.push_back(std::move(perm));
  }
  return table;
}

bool CosetTable::transitive() const {
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t r = queue.front();
    queue.pop_front();
    for (const auto& perm : action)
      if (!seen[perm[r]]) {
        seen[perm[r]] = true;
        ++count;
        queue.push_back(perm[r]);
      }
  }
  // The action is by shifts, so forward reachability is the whole orbit.
  return count == n;
}

SchreierPresentation schreier_presentation(const Presentation& p, const Character& chi, std::size_t n) {
  if (auto v = validate_character(p, chi); !v) throw InputError("schreier_presentation: invalid character: " + v.reason);
  const CosetTable table = CosetTable::from_character(chi, n);
  if (!table.transitive())
    throw InputError("schreier_presentation: the " + std::to_string(n) + "-fold cover is disconnected");

  const std::size_t m = p.generator_count();
  SchreierPresentation out;
  out.unreduced_generator_count = m * n;
  out.transversal.assign(n, Word{});
  std::vector<std::vector<bool>> on_tree(m, std::vector<bool>(n, false));
  std::vector<bool> reached(n, false);
  reached[0] = true;

  std::size_t cyclic = m;
  for (std::size_t g = 0; g < m; ++g) {
    const auto w = chi.weights[g];
    if (std::gcd(static_cast<std::uint64_t>(w < 0 ? -w : w), static_cast<std::uint64_t>(n)) == 1) {
      cyclic = g;
      break;
    }
  }
  if (cyclic < m) {
    std::size_t r = 0;
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t next = table.action[cyclic][r];
      out.transversal[next] = out.transversal[r] * Word::generator(cyclic);
      on_tree[cyclic][r] = true;
      reached[next] = true;
      r = next;
    }
  } else {
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t r = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < m; ++g) {
        const std::size_t fwd = table.action[g][r];
        if (!reached[fwd]) {
          reached[fwd] = true;
          out.transversal[fwd] = out.transversal[r] * Word::generator(g);
          on_tree[g][r] = true;
          queue.push_back(fwd);
        }
        const std::size_t back = shift(r, -chi.weights[g], n);
        if (!reached[back]) {
          reached[back] = true;
          out.transversal[back] = out.transversal[r] * Word::generator(g).inverse();
          on_tree[g][back] = true;  // T[back] g == T[r]
          queue.push_back(back);
        }
      }
    }
  }
  out.tree_size = n - 1;

  std::vector<std::string> names;
  out.generator_index.assign(m, std::vector<long>(n, -1));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t r = 0; r < n; ++r) {
      if (on_tree[g][r]) continue;
      out.generator_index[g][r] = static_cast<long>(names.size());
      names.push_back(p.generator_names()[g] + "@" + std::to_string(r));
    }

  std::vector<Word> relators;
  for (const Word& rel : p.relators())
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<Letter> letters;
      std::size_t coset = start;
      for (const Letter& l : rel.letters()) {
        if (l.exponent > 0) {
          const long idx = out.generator_index[l.generator][coset];
          if (idx >= 0) letters.push_back({static_cast<std::size_t>(idx), 1});
          coset = table.action[l.generator][coset];
        } else {
          coset = shift(coset, -chi.weights[l.generator], n);
          const long idx = out.generator_index[l.generator][coset];
          if (idx >= 0) letters.push_back({static_cast<std::size_t>(idx), -1});
        }
      }
      if (coset != start) throw ConsistencyError("schreier_presentation: relator does not close up in the cover");
      relators.push_back(free_reduce(Word(std::move(letters))));
    }
  out.presentation = Presentation(std::move(names), std::move(relators));
  return out;
}

CoverHomologyReport oracle_h1(const Presentation& p, const Character& chi, std::size_t n,
                              const std::vector<FieldSelector>& fields) {
  const SchreierPresentation sp = schreier_presentation(p, chi, n);
  const Presentation& sub = sp.presentation;
  IntMatrix relations(sub.relator_count(), sub.generator_count());
  for (std::size_t r = 0; r < sub.relator_count(); ++r)
    for (const Letter& l : sub.relators()[r].letters()) relations(r, l.generator) += l.exponent;

  CoverHomologyReport report;
  const AbelianGroup h1 = cokernel(relations);
  report.free_rank = h1.free_rank;
  report.torsion = h1.torsion;
  for (const auto& field : fields) report.field_betti[field] = sub.generator_count() - rank_over(relations, field);
  report.connected = true;
  return report;
}

}  // namespace arrcov
