#pragma once

#include <vector>

#include "ck/perm.hpp"
#include "ck/subspace.hpp"
#include "ck/symplectic.hpp"

namespace ck {

// Default resource guards; the CLI can override them through the
// environment. Guards fire before anything is allocated.
struct Guards {
  long long max_subspace_points = 10'000'000;
  long long max_fibre_points = 1'000'000;
};

// Gaussian binomial [n choose d]_p, capped: returns cap+1 once the
// count exceeds cap.
inline long long gaussian_binomial_capped(int n, int d, long long p, long long cap) {
  if (d < 0 || d > n) return 0;
  __int128 count = 1;
  for (int i = 1; i <= d; ++i) {
    __int128 num = 1, den = 1;
    for (int k = 0; k < n - d + i; ++k) num *= p;
    for (int k = 0; k < i; ++k) den *= p;
    count = count * (num - 1) / (den - 1);
    if (count > cap) return cap + 1;
  }
  return static_cast<long long>(count);
}

// p^e capped at cap+1.
inline long long power_capped(long long p, int e, long long cap) {
  __int128 v = 1;
  for (int k = 0; k < e; ++k) {
    v *= p;
    if (v > cap) return cap + 1;
  }
  return static_cast<long long>(v);
}

namespace detail {

// Run fn over all assignments of `slots` values from {0..p-1}.
template <class Fn>
void odometer(int slots, long long p, Fn&& fn) {
  std::vector<long long> vals(slots, 0);
  while (true) {
    fn(vals);
    int i = 0;
    while (i < slots && ++vals[i] == p) vals[i++] = 0;
    if (i == slots) break;
  }
}

}  // namespace detail

// Every d-dimensional subspace of F_p^n exactly once, via RREF pivot
// patterns: choose pivot columns, then run the free entries through all
// field values. Guard fires before any enumeration starts.
template <class Fn>
void for_each_subspace(int n, int d, FieldDesc f, const Guards& g, Fn&& fn) {
  if (f.is_rational()) throw UsageError("subspace enumeration needs a prime field");
  if (d < 0 || d > n) throw UsageError("subspace enumeration: bad dimensions");
  if (gaussian_binomial_capped(n, d, f.p, g.max_subspace_points) > g.max_subspace_points)
    throw ResourceError("subspace enumeration exceeds the point guard");
  if (d == 0) {
    fn(zero_subspace<Fp>(n, f));
    return;
  }
  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < d; ++i)
      for (int j = pivots[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);
    detail::odometer(static_cast<int>(free_pos.size()), f.p, [&](const std::vector<long long>& vals) {
      Matrix<Fp> m(d, n, f);
      for (int i = 0; i < d; ++i) m.at(i, pivots[i]) = m.one();
      for (size_t k = 0; k < free_pos.size(); ++k)
        m.at(free_pos[k].first, free_pos[k].second) = make_scalar<Fp>(f, vals[k]);
      fn(Subspace<Fp>::span(m));  // already RREF; span() just re-canonicalizes
    });
    // next pivot pattern, lexicographic
    int i = d - 1;
    while (i >= 0 && pivots[i] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

inline std::vector<Subspace<Fp>> all_subspaces(int n, int d, FieldDesc f, const Guards& g) {
  std::vector<Subspace<Fp>> out;
  for_each_subspace(n, d, f, g, [&](const Subspace<Fp>& s) { out.push_back(s); });
  return out;
}

// All x over F_p with im x in V and x V = 0 (type C: intersected with
// sp). Complete and duplicate-free: x = B^T M C runs over all M, where
// B is the RREF basis of V and the rows of C span {y : B y = 0}.
template <class Fn>
void for_each_cotangent_fibre_point(const Subspace<Fp>& v, const GrassContext& ctx,
                                    const Guards& g, Fn&& fn) {
  FieldDesc f = v.field();
  if (f.is_rational()) throw UsageError("fibre enumeration needs a prime field");
  int n = v.ambient_dim(), d = v.dim();
  if (n != ctx.n) throw UsageError("fibre enumeration: ambient mismatch");
  if (power_capped(f.p, d * (n - d), g.max_fibre_points) > g.max_fibre_points)
    throw ResourceError("fibre enumeration exceeds the point guard");
  Matrix<Fp> bt = v.basis().transpose();            // n x d
  Matrix<Fp> c = kernel_basis(v.basis());           // (n-d) x n
  SymplecticForm<Fp> form(ctx.type_c ? ctx.d : 1, f);
  detail::odometer(d * (n - d), f.p, [&](const std::vector<long long>& vals) {
    Matrix<Fp> m(d, n - d, f);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n - d; ++j) m.at(i, j) = make_scalar<Fp>(f, vals[i * (n - d) + j]);
    Matrix<Fp> x = bt * m * c;
    if (ctx.type_c && !in_symplectic_lie_algebra(x, form)) return;
    fn(x);
  });
}

// Type C alternative fibre parameterization: x = B^T S B G over
// symmetric d x d matrices S (G the Gram matrix). Exactly the fibre;
// used as an independent cross-check of the filtered enumeration.
template <class Fn>
void for_each_lagrangian_fibre_point(const Subspace<Fp>& v, Fn&& fn) {
  FieldDesc f = v.field();
  int d = v.dim();
  SymplecticForm<Fp> form(d, f);
  Matrix<Fp> bt = v.basis().transpose();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) slots.emplace_back(i, j);
  detail::odometer(static_cast<int>(slots.size()), f.p, [&](const std::vector<long long>& vals) {
    Matrix<Fp> s(d, d, f);
    for (size_t k = 0; k < slots.size(); ++k) {
      auto [i, j] = slots[k];
      s.at(i, j) = make_scalar<Fp>(f, vals[k]);
      s.at(j, i) = s.at(i, j);
    }
    fn(bt * s * v.basis() * form.gram());
  });
}

// All subspaces W with lower <= W <= upper and dim W = dim, via the
// quotient: enumerate subspaces of upper/lower and add lower back.
template <class Fn>
void for_each_subspace_between(const Subspace<Fp>& lower, const Subspace<Fp>& upper, int dim,
                               const Guards& g, Fn&& fn) {
  check_compatible(lower, upper);
  if (!upper.contains(lower)) throw UsageError("subspace_between: lower not inside upper");
  if (dim < lower.dim() || dim > upper.dim()) return;
  FieldDesc f = lower.field();
  int n = lower.ambient_dim();
  // complement of lower inside upper: upper basis rows reduced mod lower
  std::vector<std::vector<Fp>> comp;
  Subspace<Fp> acc = lower;
  for (int r = 0; r < upper.dim(); ++r) {
    if (acc.contains(upper.row(r))) continue;
    comp.push_back(upper.row(r));
    Matrix<Fp> m(acc.dim() + 1, n, f);
    for (int i = 0; i < acc.dim(); ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = acc.basis().at(i, j);
    for (int j = 0; j < n; ++j) m.at(acc.dim(), j) = upper.row(r)[j];
    acc = Subspace<Fp>::span(m);
  }
  int q = static_cast<int>(comp.size());  // = upper.dim() - lower.dim()
  int k = dim - lower.dim();
  for_each_subspace(q, k, f, g, [&](const Subspace<Fp>& small) {
    Matrix<Fp> raw(lower.dim() + small.dim(), n, f);
    for (int i = 0; i < lower.dim(); ++i)
      for (int j = 0; j < n; ++j) raw.at(i, j) = lower.basis().at(i, j);
    for (int i = 0; i < small.dim(); ++i)
      for (int j = 0; j < n; ++j) {
        Fp val = raw.zero();
        for (int c = 0; c < q; ++c) val += small.basis().at(i, c) * comp[c][j];
        raw.at(lower.dim() + i, j) = val;
      }
    fn(Subspace<Fp>::span(raw));
  });
}

// All strictly upper triangular matrices over F_p that the orbital test
// accepts as input: plain strictly-upper in type A, strictly-upper
// intersected with sp in type C (coefficients over the positive-root
// generators). Complete and duplicate-free either way.
template <class Fn>
void for_each_strictly_upper(const GrassContext& ctx, FieldDesc f, const Guards& g, Fn&& fn) {
  if (f.is_rational()) throw UsageError("matrix enumeration needs a prime field");
  int n = ctx.n;
  if (!ctx.type_c) {
    int slots = n * (n - 1) / 2;
    if (power_capped(f.p, slots, g.max_fibre_points) > g.max_fibre_points)
      throw ResourceError("strictly-upper enumeration exceeds the point guard");
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);
    detail::odometer(slots, f.p, [&](const std::vector<long long>& vals) {
      Matrix<Fp> x(n, n, f);
      for (size_t k = 0; k < pos.size(); ++k)
        x.at(pos[k].first, pos[k].second) = make_scalar<Fp>(f, vals[k]);
      fn(x);
    });
    return;
  }
  std::vector<Matrix<Fp>> gens = sp_positive_root_generators<Fp>(ctx.d, f);
  int slots = static_cast<int>(gens.size());
  if (power_capped(f.p, slots, g.max_fibre_points) > g.max_fibre_points)
    throw ResourceError("strictly-upper enumeration exceeds the point guard");
  detail::odometer(slots, f.p, [&](const std::vector<long long>& vals) {
    Matrix<Fp> x(n, n, f);
    for (int k = 0; k < slots; ++k) {
      if (vals[k] == 0) continue;
      x = x + make_scalar<Fp>(f, vals[k]) * gens[k];
    }
    fn(x);
  });
}

}  // namespace ck
