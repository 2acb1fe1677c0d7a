#include "arrcov/smith.hpp"

#include "arrcov/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace arrcov {

namespace {

using Row = std::vector<Integer>;

std::vector<Row> to_rows(const IntMatrix& m) {
  std::vector<Row> rows(m.rows(), Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

// dst[j] -= q * src[j] for j >= from
void row_submul(Row& dst, const Row& src, const Integer& q, std::size_t from) {
  for (std::size_t j = from; j < src.size(); ++j)
    if (sgn(src[j]) != 0) mpz_submul(dst[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
}

// dst[j] += q * src[j] for all j
void row_addmul(Row& dst, const Row& src, const Integer& q) {
  for (std::size_t j = 0; j < src.size(); ++j)
    if (sgn(src[j]) != 0) mpz_addmul(dst[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
}

bool smaller_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

bool is_unit(const Integer& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }

// Reduces a[t..][t..] to a single pivot at (t, t) with row t and column t
// otherwise zero. Returns false if the submatrix is zero.
bool eliminate_pivot(std::vector<Row>& a, std::size_t t) {
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();

  std::size_t pi = rows;
  std::size_t pj = cols;
  for (std::size_t i = t; i < rows && !(pi < rows && is_unit(a[pi][pj])); ++i)
    for (std::size_t j = t; j < cols; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      if (pi == rows || smaller_abs(a[i][j], a[pi][pj])) {
        pi = i;
        pj = j;
        if (is_unit(a[i][j])) break;
      }
    }
  if (pi == rows) return false;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][x], a[i][y]);
  };
  std::swap(a[t], a[pi]);
  swap_cols(t, pj);

  Integer q;
  for (;;) {
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (sgn(a[i][t]) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      row_submul(a[i], a[t], q, t);
      if (sgn(a[i][t]) != 0) clean = false;
    }
    std::vector<std::size_t> live;
    for (std::size_t i = t; i < rows; ++i)
      if (sgn(a[i][t]) != 0) live.push_back(i);
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (sgn(a[t][j]) == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t i : live) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[i][t].get_mpz_t());
      if (sgn(a[t][j]) != 0) clean = false;
    }
    if (clean) return true;

    // Bring the smallest remainder in row t or column t to the pivot.
    std::size_t bi = t;
    std::size_t bj = t;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (sgn(a[i][t]) != 0 && smaller_abs(a[i][t], a[bi][bj])) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (sgn(a[t][j]) != 0 && smaller_abs(a[t][j], a[bi][bj])) {
        bi = t;
        bj = j;
      }
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
  }
}

// Rewrites a diagonal into divisibility-chain order, zeros last.
void normalize_chain(std::vector<Integer>& d) {
  Integer g;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      if (g == d[i]) continue;
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = abs(l);
    }
}

std::size_t rank_rational(std::vector<Row> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  Integer g, mp, mi, content;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (sgn(a[i][c]) != 0 && (p == rows || smaller_abs(a[i][c], a[p][c]))) p = i;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    const Row& piv = a[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), a[i][c].get_mpz_t());
      mpz_divexact(mp.get_mpz_t(), piv[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(mi.get_mpz_t(), a[i][c].get_mpz_t(), g.get_mpz_t());
      Row& r = a[i];
      const bool scaled = mp != 1;
      for (std::size_t j = c; j < cols; ++j) {
        if (scaled) r[j] *= mp;
        if (sgn(piv[j]) != 0) mpz_submul(r[j].get_mpz_t(), mi.get_mpz_t(), piv[j].get_mpz_t());
      }
      if (scaled) {
        content = 0;
        for (std::size_t j = c; j < cols; ++j)
          if (sgn(r[j]) != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[j].get_mpz_t());
        if (content > 1)
          for (std::size_t j = c; j < cols; ++j) mpz_divexact(r[j].get_mpz_t(), r[j].get_mpz_t(), content.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = a % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(m(r, c).get_mpz_t(), static_cast<unsigned long>(p));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    const std::int64_t inv = inverse_mod(a[rank][c], p);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (a[rank][j] != 0) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSelector::FieldSelector(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1U << 31)))
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
}

std::string FieldSelector::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(characteristic_);
}

std::string SmithForm::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) out << (i ? "," : "") << invariant_factors[i];
  out << ")";
  return out.str();
}

SmithForm snf_int(const IntMatrix& m) {
  SmithForm form;
  const std::size_t diag = std::min(m.rows(), m.cols());
  if (diag == 0) return form;
  std::vector<Row> a = to_rows(m);
  std::size_t t = 0;
  while (t < diag && eliminate_pivot(a, t)) {
    form.invariant_factors.push_back(abs(a[t][t]));
    ++t;
  }
  form.rank = t;
  form.invariant_factors.resize(diag, Integer(0));
  normalize_chain(form.invariant_factors);
  return form;
}

std::size_t rank_over(const IntMatrix& m, const FieldSelector& field) {
  if (m.empty()) return 0;
  if (field.is_rational()) return rank_rational(to_rows(m));
  return rank_mod_p(m, field.characteristic());
}

std::uint64_t cyclic_gcd(std::int64_t k, std::uint64_t n) {
  if (n == 0) throw InputError("cyclic_gcd needs N >= 1");
  const auto sn = static_cast<std::int64_t>(n);
  const auto r = static_cast<std::uint64_t>(((k % sn) + sn) % sn);
  return std::gcd(r, n);  // gcd(0, n) == n
}

std::size_t lemma_rank(std::size_t n, std::int64_t k, const FieldSelector& field) {
  const auto sn = static_cast<std::int64_t>(n);
  if (n == 0) throw InputError("lemma_rank needs N >= 1");
  const auto power = static_cast<unsigned>(((k % sn) + sn) % sn);
  return rank_over(companion(n).pow(power) - IntMatrix::identity(n), field);
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    out << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
  AbelianGroup g;
  const SmithForm form = snf_int(m);
  g.free_rank = m.cols() - form.rank;
  for (const auto& d : form.invariant_factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup integral_homology(const IntMatrix& d1, const IntMatrix& d2) {
  if (d1.cols() != d2.rows()) throw InputError("integral_homology: d1 and d2 are not composable");
  if (!(d1 * d2).is_zero()) throw ConsistencyError("integral_homology: d1 * d2 != 0");

  const std::size_t m = d1.cols();
  const std::size_t r1 = d1.rows();
  std::vector<Row> c1(m, Row(r1));  // columns of d1
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < m; ++j) c1[j][i] = d1(i, j);
  std::vector<Row> r2 = to_rows(d2);  // rows of d2, one per column of d1

  // Column op col_j -= q col_p on d1 is mirrored by row_p += q row_j on d2,
  // keeping the product and the homology unchanged.
  std::size_t piv = 0;
  Integer q;
  for (std::size_t i = 0; i < r1 && piv < m; ++i) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t j = piv; j < m; ++j)
        if (sgn(c1[j][i]) != 0 && (best == m || smaller_abs(c1[j][i], c1[best][i]))) best = j;
      if (best == m) break;
      std::swap(c1[piv], c1[best]);
      std::swap(r2[piv], r2[best]);
      bool clean = true;
      for (std::size_t j = piv + 1; j < m; ++j) {
        if (sgn(c1[j][i]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), c1[j][i].get_mpz_t(), c1[piv][i].get_mpz_t());
        row_submul(c1[j], c1[piv], q, i);
        row_addmul(r2[piv], r2[j], q);
        if (sgn(c1[j][i]) != 0) clean = false;
      }
      if (clean) {
        ++piv;
        break;
      }
    }
  }

  for (std::size_t j = 0; j < piv; ++j)
    for (const auto& v : r2[j])
      if (sgn(v) != 0) throw ConsistencyError("integral_homology: boundary image leaves the cycle lattice");

  // Relations are the columns of the kernel-coordinate block.
  const std::size_t kernel_rank = m - piv;
  IntMatrix relations(d2.cols(), kernel_rank);
  for (std::size_t k = 0; k < kernel_rank; ++k)
    for (std::size_t c = 0; c < d2.cols(); ++c) relations(c, k) = r2[piv + k][c];
  return cokernel(relations);
}

}  // namespace arrcov
