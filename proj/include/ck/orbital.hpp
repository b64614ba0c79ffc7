#pragma once

#include "ck/conormal.hpp"
#include "ck/tableau.hpp"

namespace ck {

template <class K>
bool is_strictly_upper(const Matrix<K>& x) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j <= i && j < x.cols(); ++j)
      if (!x.at(i, j).is_zero()) return false;
  return true;
}

// Orbital-variety membership: x strictly upper (type C: also in sp),
// x^2 = 0, and the same rank inequalities as the conormal test.
template <class K>
bool orbital_equations_test(const Matrix<K>& x, const Permutation& w, const GrassContext& ctx) {
  if (x.rows() != ctx.n || x.cols() != ctx.n) throw UsageError("orbital test: shape mismatch");
  if (!is_strictly_upper(x)) throw UsageError("orbital test: x must be strictly upper triangular");
  if (ctx.type_c) {
    SymplecticForm<K> form(ctx.d, x.field());
    if (!in_symplectic_lie_algebra(x, form)) throw UsageError("orbital test: x must lie in sp");
  }
  if (!(x * x).is_zero()) return false;
  BlockProfile p = block_profile(w, ctx);
  return conormal_bound_violations(x, p).empty();
}

// Jordan type of a square-zero matrix: (2^rank, 1^{size - 2 rank}).
template <class K>
Partition jordan_type_square_zero(const Matrix<K>& x) {
  if (x.rows() != x.cols()) throw UsageError("jordan type: matrix must be square");
  if (!(x * x).is_zero()) throw UsageError("jordan type: matrix must square to zero");
  return square_zero_jordan_type(x.rows(), rank(x));
}

// Witness for a passing x: a subspace V in the Schubert variety with
// im x in V in ker x, built by greedy completion of im x inside ker x
// against the column targets of dimension d. Type C completes
// isotropically, so the witness is Lagrangian. Failure contradicts the
// orbital theorem.
template <class K>
Subspace<K> orbital_witness(const Matrix<K>& x, const Permutation& w, const GrassContext& ctx) {
  if (!orbital_equations_test(x, w, ctx))
    throw UsageError("orbital_witness precondition: x must pass the orbital test");
  Subspace<K> img = image_subspace(x);
  Subspace<K> ker = kernel_subspace(x);
  RankTargets targets = rank_targets(w, ctx.d);
  Subspace<K> v(ctx.n, x.field());
  try {
    if (ctx.type_c) {
      SymplecticForm<K> form(ctx.d, x.field());
      v = complete_subspace(img, ker, ctx.d, targets, &form);
    } else {
      v = complete_subspace(img, ker, ctx.d, targets);
    }
  } catch (const CompletionError& e) {
    throw ContradictionError("orbital_witness: completion failed at column " +
                             std::to_string(e.column));
  }
  ConormalPoint<K> pt{v, x};
  if (!is_cotangent_point(v, x, ctx) || !conormal_equations_test(pt, w, ctx))
    throw ContradictionError("orbital_witness: witness fails its postconditions");
  return v;
}

}  // namespace ck
