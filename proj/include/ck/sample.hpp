#pragma once

#include "ck/conormal.hpp"

namespace ck {

namespace detail {

template <class K>
K random_unit(FieldDesc f, Prng& rng) {
  if (f.is_rational()) {
    long long v = rng.range(-3, 3);
    return make_scalar<K>(f, v == 0 ? 1 : v);
  }
  return make_scalar<K>(f, 1 + static_cast<long long>(rng.below(f.p - 1)));
}

template <class K>
K random_value(FieldDesc f, Prng& rng) {
  if (f.is_rational()) return make_scalar<K>(f, rng.range(-3, 3));
  return make_scalar<K>(f, static_cast<long long>(rng.below(f.p)));
}

}  // namespace detail

// Random invertible upper-triangular matrix.
template <class K>
Matrix<K> random_borel_type_a(int n, FieldDesc f, Prng& rng) {
  Matrix<K> b(n, n, f);
  for (int i = 0; i < n; ++i) {
    b.at(i, i) = detail::random_unit<K>(f, rng);
    for (int j = i + 1; j < n; ++j) b.at(i, j) = detail::random_value<K>(f, rng);
  }
  return b;
}

// Random Borel element of Sp: a product of 25 unipotent root elements
// I + t*g (each g squares to zero, so I + t*g is exactly symplectic)
// times a torus element diag(a_1..a_d, a_d^-1..a_1^-1). Form
// preservation is asserted before returning.
template <class K>
Matrix<K> random_borel_type_c(int d, FieldDesc f, Prng& rng) {
  int n = 2 * d;
  std::vector<Matrix<K>> gens = sp_positive_root_generators<K>(d, f);
  Matrix<K> b = identity_matrix<K>(n, f);
  for (int step = 0; step < 25; ++step) {
    const Matrix<K>& g = gens[rng.below(gens.size())];
    Matrix<K> u = identity_matrix<K>(n, f) + detail::random_value<K>(f, rng) * g;
    b = b * u;
  }
  Matrix<K> torus(n, n, f);
  for (int i = 1; i <= d; ++i) {
    K a = detail::random_unit<K>(f, rng);
    torus.at(i - 1, i - 1) = a;
    torus.at(n - i, n - i) = a.inv();
  }
  b = b * torus;
  SymplecticForm<K> form(d, f);
  if (!preserves_form(b, form)) throw ContradictionError("sampled Borel element does not preserve the form");
  return b;
}

// Representative of w in the group. Type A: the permutation matrix.
// Type C: a product of simple-reflection representatives, so the result
// preserves the form; the long-root reflection carries one sign
// (e_d -> e_{d+1}, e_{d+1} -> -e_d), which disappears over F_2.
template <class K>
Matrix<K> weyl_representative(const Permutation& w, const GrassContext& ctx, FieldDesc f) {
  int n = ctx.n;
  if (!ctx.type_c) {
    Matrix<K> m(n, n, f);
    for (int k = 1; k <= n; ++k) m.at(w(k) - 1, k - 1) = m.one();
    return m;
  }
  int d = ctx.d;
  auto reflection_rep = [&](int i) {
    Matrix<K> m = identity_matrix<K>(n, f);
    if (i < d) {
      m.at(i - 1, i - 1) = m.zero();
      m.at(i, i) = m.zero();
      m.at(i, i - 1) = m.one();
      m.at(i - 1, i) = m.one();
      m.at(n - i - 1, n - i - 1) = m.zero();
      m.at(n - i, n - i) = m.zero();
      m.at(n - i, n - i - 1) = m.one();
      m.at(n - i - 1, n - i) = m.one();
    } else {
      m.at(d - 1, d - 1) = m.zero();
      m.at(d, d) = m.zero();
      m.at(d, d - 1) = m.one();
      m.at(d - 1, d) = -m.one();
    }
    return m;
  };
  // id = w s_{i_1} ... s_{i_k}  =>  w = s_{i_k} ... s_{i_1}
  std::vector<int> word = type_c_descent_word(w);
  Matrix<K> rep = identity_matrix<K>(n, f);
  for (auto it = word.rbegin(); it != word.rend(); ++it) rep = rep * reflection_rep(*it);
  // rep must send e_k to +-e_{w(k)}
  for (int k = 1; k <= n; ++k)
    for (int r = 1; r <= n; ++r) {
      bool expect = (r == w(k));
      if (expect == rep.at(r - 1, k - 1).is_zero())
        throw ContradictionError("weyl representative has the wrong support");
    }
  SymplecticForm<K> form(ctx.d, f);
  if (!preserves_form(rep, form)) throw ContradictionError("weyl representative does not preserve the form");
  return rep;
}

// Inverse of an invertible matrix (RREF against the identity).
template <class K>
Matrix<K> inverse_matrix(const Matrix<K>& m) {
  int n = m.rows();
  Matrix<K> aug(n, 2 * n, m.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.one();
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw UsageError("matrix is not invertible");
  Matrix<K> inv(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Dense-point sampler for the conormal variety: (V, y) = (g E(d),
// g x g^-1) with g = b n_w, b a random Borel element and x a random
// combination of the conormal directions of w. The cotangent and
// equation postconditions are asserted; a failure would contradict the
// forward direction of the equations theorem.
template <class K>
ConormalPoint<K> sample_conormal_point(const Permutation& w, const GrassContext& ctx, FieldDesc f,
                                       Prng& rng) {
  ConormalDirections dirs = conormal_directions(w, ctx);
  Matrix<K> x = random_direction<K>(dirs, f, rng);
  Matrix<K> b = ctx.type_c ? random_borel_type_c<K>(ctx.d, f, rng)
                           : random_borel_type_a<K>(ctx.n, f, rng);
  Matrix<K> g = b * weyl_representative<K>(w, ctx, f);
  Matrix<K> y = g * x * inverse_matrix(g);

  Matrix<K> first_cols(ctx.d, ctx.n, f);
  for (int k = 0; k < ctx.d; ++k)
    for (int r = 0; r < ctx.n; ++r) first_cols.at(k, r) = g.at(r, k);
  ConormalPoint<K> pt{Subspace<K>::span(first_cols), y};

  if (!is_cotangent_point(pt.V, pt.x, ctx))
    throw ContradictionError("sampled point is not a cotangent point");
  if (!conormal_equations_test(pt, w, ctx))
    throw ContradictionError("sampled point fails the conormal equations");
  return pt;
}

}  // namespace ck
