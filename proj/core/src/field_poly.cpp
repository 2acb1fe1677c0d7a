#include "arrcov/field_poly.hpp"

#include "arrcov/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace arrcov {

namespace {

struct RationalField {
  using Elem = mpq_class;

  Elem from(const Integer& z) const { return Elem(z); }
  Elem from_exported(const mpq_class& q) const { return q; }
  mpq_class to_exported(const Elem& a) const { return a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem one() const { return 1; }
};

struct PrimeField {
  using Elem = std::int64_t;
  std::int64_t p;

  Elem from(const Integer& z) const { return static_cast<Elem>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p))); }
  Elem from_exported(const mpq_class& q) const { return from(q.get_num()); }
  mpq_class to_exported(const Elem& a) const { return mpq_class(static_cast<long>(a)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
  Elem sub(const Elem& a, const Elem& b) const { return ((a - b) % p + p) % p; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b % p; }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inverse(b)); }
  Elem one() const { return 1; }
  Elem inverse(Elem a) const {
    Elem result = 1;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
    }
    return result;
  }
};

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class F>
long degree(const Poly<F>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), typename F::Elem(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), typename F::Elem(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, typename F::Elem(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

// a = q * b + r with deg r < deg b; b nonzero
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  const long db = degree<F>(b);
  if (degree<F>(a) < db) return {Poly<F>{}, std::move(a)};
  Poly<F> q(static_cast<std::size_t>(degree<F>(a) - db + 1), typename F::Elem(0));
  const auto& lead = b.back();
  while (!a.empty() && degree<F>(a) >= db) {
    const long shift = degree<F>(a) - db;
    const auto c = f.div(a.back(), lead);
    q[static_cast<std::size_t>(shift)] = c;
    for (long i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(i + shift)];
      slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(i)]));
    }
    // the leading term cancels exactly; drop it even if arithmetic left dust
    a.pop_back();
    trim(f, a);
  }
  trim(f, q);
  return {std::move(q), std::move(a)};
}

template <class F>
Poly<F> monic(const F& f, Poly<F> a) {
  if (a.empty()) return a;
  const auto lead = a.back();
  for (auto& c : a) c = f.div(c, lead);
  return a;
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

// Drops the factor t^k with k maximal: a unit in K[t, t^-1].
template <class F>
Poly<F> strip_t(const F& f, Poly<F> a) {
  std::size_t low = 0;
  while (low < a.size() && f.is_zero(a[low])) ++low;
  a.erase(a.begin(), a.begin() + static_cast<long>(low));
  return a;
}

template <class F>
Poly<F> from_laurent(const F& f, const LaurentPoly& p, LaurentPoly::Exponent shift) {
  Poly<F> r;
  for (const auto& [e, c] : p.terms()) {
    const auto idx = static_cast<std::size_t>(e + shift);
    if (r.size() <= idx) r.resize(idx + 1, typename F::Elem(0));
    r[idx] = f.add(r[idx], f.from(c));
  }
  trim(f, r);
  return r;
}

template <class F>
FieldPolynomial export_poly(const F& f, const FieldSelector& field, const Poly<F>& a) {
  FieldPolynomial out{field, {}};
  out.coefficients.reserve(a.size());
  for (const auto& c : a) out.coefficients.push_back(f.to_exported(c));
  return out;
}

template <class F>
Poly<F> import_poly(const F& f, const FieldPolynomial& a) {
  Poly<F> r;
  for (const auto& c : a.coefficients) r.push_back(f.from_exported(c));
  trim(f, r);
  return r;
}

template <class F>
using PolyRow = std::vector<Poly<F>>;

// Smith form over K[t]: the diagonal entries, not yet chain-normalized.
template <class F>
std::vector<Poly<F>> poly_smith_diagonal(const F& f, std::vector<PolyRow<F>> a) {
  std::vector<Poly<F>> diag;
  const std::size_t rows = a.size();
  if (rows == 0) return diag;
  const std::size_t cols = a[0].size();
  auto swap_cols = [&](std::size_t t, std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][x], a[i][y]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!a[i][j].empty() && (pi == rows || a[i][j].size() < a[pi][pj].size())) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].empty()) continue;
        auto q = divmod(f, a[i][t], a[t][t]).first;
        for (std::size_t j = t; j < cols; ++j)
          if (!a[t][j].empty()) a[i][j] = sub(f, a[i][j], mul(f, q, a[t][j]));
        if (!a[i][t].empty()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].empty()) continue;
        auto q = divmod(f, a[t][j], a[t][t]).first;
        for (std::size_t i = t; i < rows; ++i)
          if (!a[i][t].empty()) a[i][j] = sub(f, a[i][j], mul(f, q, a[i][t]));
        if (!a[t][j].empty()) clean = false;
      }
      if (clean) break;
      std::size_t bi = t;
      std::size_t bj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!a[i][t].empty() && a[i][t].size() < a[bi][bj].size()) {
          bi = i;
          bj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!a[t][j].empty() && a[t][j].size() < a[bi][bj].size()) {
          bi = t;
          bj = j;
        }
      std::swap(a[t], a[bi]);
      swap_cols(t, t, bj);
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

template <class F>
TorsionDecomposition decompose(const F& f, const FieldSelector& field, const LaurentMatrix& d1,
                               const LaurentMatrix& d2) {
  const std::size_t r0 = d1.rows();
  const std::size_t r1 = d1.cols();
  const std::size_t r2 = d2.cols();

  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t k = 0; k < r2; ++k) {
      LaurentPoly entry;
      for (std::size_t j = 0; j < r1; ++j) entry += d1(i, j) * d2(j, k);
      if (!from_laurent(f, entry, -entry.min_exponent().value_or(0)).empty())
        throw InputError("poly_kernel_and_snf: chain condition fails at entry (" + std::to_string(i) + ", " +
                         std::to_string(k) + ") of d1*d2 over " + field.name() + ": " + entry.to_string());
    }

  // Row units on d1 keep its kernel; column units on d2 keep its image.
  std::vector<PolyRow<F>> c1(r1, PolyRow<F>(r0));
  for (std::size_t i = 0; i < r0; ++i) {
    LaurentPoly::Exponent low = 0;
    bool any = false;
    for (std::size_t j = 0; j < r1; ++j)
      if (auto e = d1(i, j).min_exponent()) {
        low = any ? std::min(low, *e) : *e;
        any = true;
      }
    for (std::size_t j = 0; j < r1; ++j) c1[j][i] = from_laurent(f, d1(i, j), -low);
  }
  std::vector<PolyRow<F>> b2(r1, PolyRow<F>(r2));
  for (std::size_t k = 0; k < r2; ++k) {
    LaurentPoly::Exponent low = 0;
    bool any = false;
    for (std::size_t j = 0; j < r1; ++j)
      if (auto e = d2(j, k).min_exponent()) {
        low = any ? std::min(low, *e) : *e;
        any = true;
      }
    for (std::size_t j = 0; j < r1; ++j) b2[j][k] = from_laurent(f, d2(j, k), -low);
  }

  // Column-reduce d1; mirror col_j -= q col_p as row_p += q row_j on d2.
  std::size_t piv = 0;
  for (std::size_t i = 0; i < r0 && piv < r1; ++i) {
    for (;;) {
      std::size_t best = r1;
      for (std::size_t j = piv; j < r1; ++j)
        if (!c1[j][i].empty() && (best == r1 || c1[j][i].size() < c1[best][i].size())) best = j;
      if (best == r1) break;
      std::swap(c1[piv], c1[best]);
      std::swap(b2[piv], b2[best]);
      bool clean = true;
      for (std::size_t j = piv + 1; j < r1; ++j) {
        if (c1[j][i].empty()) continue;
        auto q = divmod(f, c1[j][i], c1[piv][i]).first;
        for (std::size_t x = i; x < r0; ++x)
          if (!c1[piv][x].empty()) c1[j][x] = sub(f, c1[j][x], mul(f, q, c1[piv][x]));
        for (std::size_t k = 0; k < r2; ++k)
          if (!b2[j][k].empty()) b2[piv][k] = add(f, b2[piv][k], mul(f, q, b2[j][k]));
        if (!c1[j][i].empty()) clean = false;
      }
      if (clean) {
        ++piv;
        break;
      }
    }
  }
  for (std::size_t j = 0; j < piv; ++j)
    for (const auto& e : b2[j])
      if (!e.empty()) throw ConsistencyError("poly_kernel_and_snf: image of d2 leaves ker d1");

  std::vector<PolyRow<F>> x(b2.begin() + static_cast<long>(piv), b2.end());
  const std::size_t kernel_rank = r1 - piv;
  auto diag = poly_smith_diagonal(f, std::move(x));

  // chain normalization: d_i <- gcd, d_j <- lcm
  for (auto& d : diag) d = monic(f, std::move(d));
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      auto g = poly_gcd(f, diag[i], diag[j]);
      if (g == diag[i]) continue;
      auto l = monic(f, divmod(f, mul(f, diag[i], diag[j]), g).first);
      diag[i] = std::move(g);
      diag[j] = std::move(l);
    }

  TorsionDecomposition out;
  out.free_rank = kernel_rank - diag.size();
  for (auto& d : diag) {
    auto stripped = strip_t(f, std::move(d));
    if (degree<F>(stripped) >= 1) out.torsion.push_back(export_poly(f, field, monic(f, std::move(stripped))));
  }
  return out;
}

template <class Fn>
decltype(auto) with_field(const FieldSelector& field, Fn&& fn) {
  if (field.is_rational()) return fn(RationalField{});
  return fn(PrimeField{static_cast<std::int64_t>(field.characteristic())});
}

}  // namespace

std::string FieldPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const mpq_class& c = coefficients[i];
    if (sgn(c) == 0) continue;
    const mpq_class mag = abs(c);
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    first = false;
    if (i == 0 || mag != 1) out << mag;
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

FieldPolynomial reduce_into(const LaurentPoly& p, const FieldSelector& field) {
  return with_field(field, [&](const auto& f) {
    auto poly = from_laurent(f, p, -p.min_exponent().value_or(0));
    return export_poly(f, field, monic(f, strip_t(f, std::move(poly))));
  });
}

FieldPolynomial multiply(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.field != b.field) throw InputError("multiply: polynomials over different fields");
  return with_field(a.field, [&](const auto& f) {
    return export_poly(f, a.field, mul(f, import_poly(f, a), import_poly(f, b)));
  });
}

bool divides(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.field != b.field) throw InputError("divides: polynomials over different fields");
  return with_field(a.field, [&](const auto& f) {
    auto pa = import_poly(f, a);
    auto pb = import_poly(f, b);
    if (pa.empty()) return pb.empty();
    return divmod(f, std::move(pb), pa).second.empty();
  });
}

FieldPolynomial gcd(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.field != b.field) throw InputError("gcd: polynomials over different fields");
  return with_field(a.field, [&](const auto& f) {
    return export_poly(f, a.field, poly_gcd(f, import_poly(f, a), import_poly(f, b)));
  });
}

FieldPolynomial TorsionDecomposition::order(const FieldSelector& field) const {
  FieldPolynomial acc{field, {mpq_class(1)}};
  for (const auto& p : torsion) acc = multiply(acc, p);
  return acc;
}

TorsionDecomposition poly_kernel_and_snf(const LaurentMatrix& d1, const LaurentMatrix& d2,
                                         const FieldSelector& field) {
  if (d1.cols() != d2.rows())
    throw InputError("poly_kernel_and_snf: d1 has " + std::to_string(d1.cols()) + " columns but d2 has " +
                     std::to_string(d2.rows()) + " rows");
  return with_field(field, [&](const auto& f) { return decompose(f, field, d1, d2); });
}

}  // namespace arrcov
