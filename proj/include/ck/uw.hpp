#pragma once

#include <utility>
#include <vector>

#include "ck/blocks.hpp"
#include "ck/matrix.hpp"
#include "ck/subspace.hpp"

namespace ck {

// Basis data for the space of conormal directions attached to w at the
// base point: the nilradical directions that stay upper triangular
// after conjugation by w. Pairs are matrix positions (1-based).
//   type A: (i, j) with i <= d < j and w(i) < w(j); generator E_{i,j}.
//   type C: (i, jbar) for 1 <= i <= j <= d with w(i) + w(j) <= 2d;
//           generator E_{i,ibar} when j = i, else E_{i,jbar} + E_{j,ibar}.
struct ConormalDirections {
  GrassContext ctx;
  std::vector<std::pair<int, int>> pairs;
  int dim() const { return static_cast<int>(pairs.size()); }
};

inline ConormalDirections conormal_directions(const Permutation& w, const GrassContext& ctx) {
  if (!is_minimal_rep(w, ctx)) throw UsageError("conormal_directions needs a minimal representative");
  if (ctx.type_c && !is_type_c_element(w))
    throw UsageError("conormal_directions: type C context needs a type C element");
  ConormalDirections u;
  u.ctx = ctx;
  int n = ctx.n, d = ctx.d;
  if (!ctx.type_c) {
    for (int i = 1; i <= d; ++i)
      for (int j = d + 1; j <= n; ++j)
        if (w(i) < w(j)) u.pairs.emplace_back(i, j);
  } else {
    for (int i = 1; i <= d; ++i)
      for (int j = i; j <= d; ++j)
        if (w(i) + w(j) <= 2 * d) u.pairs.emplace_back(i, n + 1 - j);
  }
  return u;
}

template <class K>
Matrix<K> direction_generator(const ConormalDirections& u, int index, FieldDesc f) {
  int n = u.ctx.n;
  auto [a, b] = u.pairs.at(index);
  Matrix<K> g = elementary_matrix<K>(n, a, b, f);
  if (u.ctx.type_c) {
    int j = n + 1 - b;
    if (j != a) g = g + elementary_matrix<K>(n, j, n + 1 - a, f);
  }
  return g;
}

template <class K>
std::vector<Matrix<K>> direction_basis(const ConormalDirections& u, FieldDesc f) {
  std::vector<Matrix<K>> basis;
  for (int k = 0; k < u.dim(); ++k) basis.push_back(direction_generator<K>(u, k, f));
  return basis;
}

// Membership of a matrix in the span of a list of matrices, by flattening.
template <class K>
bool in_matrix_span(const Matrix<K>& x, const std::vector<Matrix<K>>& gens) {
  int n2 = x.rows() * x.cols();
  Matrix<K> flat(static_cast<int>(gens.size()), n2, x.field());
  for (size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) flat.at(static_cast<int>(g), i * x.cols() + j) = gens[g].at(i, j);
  Subspace<K> span = Subspace<K>::span(flat);
  std::vector<K> v;
  v.reserve(n2);
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v.push_back(x.at(i, j));
  return span.contains(v);
}

// Random field-coefficient combination of the direction generators.
template <class K>
Matrix<K> random_direction(const ConormalDirections& u, FieldDesc f, Prng& rng) {
  Matrix<K> x(u.ctx.n, u.ctx.n, f);
  for (int k = 0; k < u.dim(); ++k) {
    long long c = f.is_rational() ? rng.range(-3, 3) : static_cast<long long>(rng.below(f.p));
    if (c == 0) continue;
    x = x + make_scalar<K>(f, c) * direction_generator<K>(u, k, f);
  }
  return x;
}

}  // namespace ck
