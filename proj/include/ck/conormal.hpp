#pragma once

#include <vector>

#include "ck/schubert.hpp"
#include "ck/uw.hpp"

namespace ck {

// A candidate point of the cotangent bundle: a subspace V together with
// a nilpotent operator x satisfying im x in V in ker x. Type C further
// requires x in sp and V Lagrangian.
template <class K>
struct ConormalPoint {
  Subspace<K> V;
  Matrix<K> x;
};

template <class K>
bool is_cotangent_point(const Subspace<K>& v, const Matrix<K>& x, const GrassContext& ctx) {
  if (v.ambient_dim() != ctx.n || x.rows() != ctx.n || x.cols() != ctx.n || v.field() != x.field())
    throw UsageError("cotangent test: shape/field mismatch");
  if (v.dim() != ctx.d) return false;
  if (!v.contains(image_subspace(x))) return false;
  if (!apply(x, v).is_zero()) return false;
  if (ctx.type_c) {
    SymplecticForm<K> form(ctx.d, v.field());
    if (!in_symplectic_lie_algebra(x, form)) return false;
    if (!is_lagrangian(v, form)) return false;
  }
  return true;
}

// One failed rank inequality, for reporting.
struct BoundViolation {
  int i, j;  // checkpoint indices, 0 <= j < i <= l+1
  int lhs;   // dim(x E(checkpoint[i]) / E(checkpoint[j]))
  int rhs;   // min(run_sum[i-1]-run_sum[j], gap_sum[i]-gap_sum[j+1])
};

// The rank inequalities dim(x E(t_i) / E(t_j)) <= bound(i, j) over all
// 0 <= j < i <= l+1 (with E(t_0) = 0 and t_{l+1} = n).
template <class K>
std::vector<BoundViolation> conormal_bound_violations(const Matrix<K>& x, const BlockProfile& p) {
  std::vector<BoundViolation> out;
  int l = p.blocks;
  for (int i = 1; i <= l + 1; ++i) {
    Subspace<K> xe = apply(x, standard_subspace<K>(p.ctx.n, p.checkpoint[i], x.field()));
    for (int j = 0; j < i; ++j) {
      int lhs = quotient_dim(xe, standard_subspace<K>(p.ctx.n, p.checkpoint[j], x.field()));
      int rhs = conormal_bound(p, i, j);
      if (lhs > rhs) out.push_back({i, j, lhs, rhs});
    }
  }
  return out;
}

// Membership test for the conormal variety: V in the Schubert variety
// of w, plus the rank inequalities on x.
template <class K>
bool conormal_equations_test(const ConormalPoint<K>& pt, const Permutation& w,
                             const GrassContext& ctx) {
  if (!in_schubert(pt.V, w, ctx)) return false;
  BlockProfile p = block_profile(w, ctx);
  return conormal_bound_violations(pt.x, p).empty();
}

// A flag witness: F in the flag Schubert variety with the quiver
// containments x . F(upper) in F(lower).
template <class K>
struct LiftedFlag {
  PartialFlag<K> F;
  Matrix<K> x;
};

// Membership in the flag-level model of the conormal variety: flag
// Schubert membership plus every quiver containment.
template <class K>
bool in_flag_model(const PartialFlag<K>& flag, const Matrix<K>& x, const Permutation& w,
                   const GrassContext& ctx) {
  BlockProfile p = block_profile(w, ctx);
  FlagShape shape = flag_shape(p);
  if (flag.shape.q != shape.q) throw UsageError("in_flag_model: flag shape mismatch");
  if (ctx.type_c) {
    SymplecticForm<K> form(ctx.d, x.field());
    if (!in_flag_schubert(flag, w, shape, &form)) return false;
  } else {
    if (!in_flag_schubert(flag, w, shape)) return false;
  }
  for (auto [upper, lower] : quiver_level_pairs(p)) {
    if (!flag.at_level(lower).contains(apply(x, flag.at_level(upper)))) return false;
  }
  return true;
}

// Full preimage {v : x v lies in W}.
template <class K>
Subspace<K> preimage_subspace(const Matrix<K>& x, const Subspace<K>& w) {
  return kernel_subspace(kernel_basis(w.basis()) * x);
}

namespace detail {

// One lift attempt. The downward pass completes an anchor inside
// V_{i} meet E(t_{i-1}) against the column targets of each level; the
// anchor always contains x E(t_i), optionally the low part of the
// operator image (`anchor_image`), and in type C the mirror condition
// of an already-chosen level, which is what makes the perp-mirrored
// upper half satisfy its quiver containments. The type A upward pass
// completes inside the full preimage x^-1(V_{i-1}), which is the exact
// quiver constraint and strictly more room than ker x + E(t_i).
template <class K>
LiftedFlag<K> lift_flag_attempt(const ConormalPoint<K>& pt, const Permutation& w,
                                const BlockProfile& p, bool anchor_image) {
  const GrassContext& ctx = p.ctx;
  FlagShape shape = flag_shape(p);
  int n = ctx.n, l = p.blocks;
  FieldDesc f = pt.V.field();
  const Matrix<K>& x = pt.x;

  auto E = [&](int level) { return standard_subspace<K>(n, level, f); };

  std::vector<Subspace<K>> chain(l + 1, pt.V);  // chain[i] has dim run_sum[i]
  Subspace<K> img = image_subspace(x);
  for (int m = l - 1; m >= 0; --m) {
    Subspace<K> anchor = apply(x, E(p.checkpoint[m + 1]));
    if (anchor_image) anchor = sum(anchor, intersect(img, E(p.checkpoint[m])));
    if (ctx.type_c) {
      SymplecticForm<K> form(ctx.d, f);
      int mirror = l + p.pairing_offset - m - 1;
      if (mirror > m && mirror <= l)
        anchor = sum(anchor, apply(x, perp(chain[mirror], form)));
      else if (mirror == m)
        anchor = sum(anchor, intersect(img, E(p.checkpoint[m])));
    }
    chain[m] = complete_subspace(anchor, intersect(chain[m + 1], E(p.checkpoint[m])),
                                 p.run_sum[m], rank_targets(w, p.run_sum[m]));
  }

  PartialFlag<K> flag;
  flag.shape = shape;
  if (!ctx.type_c) {
    for (int i = 0; i <= l; ++i) flag.spaces.push_back(chain[i]);
    Subspace<K> up = pt.V;
    for (int i = 1; i <= l + 1; ++i) {
      int level = ctx.d + p.gap_sum[i];
      up = complete_subspace(up, preimage_subspace(x, chain[i - 1]), level,
                             rank_targets(w, level));
      flag.spaces.push_back(up);
    }
  } else {
    SymplecticForm<K> form(ctx.d, f);
    for (int level : shape.q) {
      if (level <= ctx.d) {
        int k = -1;
        for (int i = 0; i <= l; ++i)
          if (p.run_sum[i] == level) k = i;
        if (k < 0) throw CompletionError(0);
        flag.spaces.push_back(chain[k]);
      } else {
        int k = -1;
        for (int i = 0; i <= l; ++i)
          if (p.run_sum[i] == n - level) k = i;
        if (k < 0) throw CompletionError(0);
        flag.spaces.push_back(perp(chain[k], form));
      }
    }
  }

  if (flag.at_level(ctx.d) != pt.V) throw CompletionError(0);
  if (!in_flag_model(flag, x, w, ctx)) throw CompletionError(0);
  return {flag, x};
}

}  // namespace detail

// Constructive flag lift. Given a point satisfying the conormal
// equations, produce a flag in the model projecting to V; the output is
// fully re-verified before returning. Two deterministic attempts run in
// order (plain anchors, then image-anchored); exhausting both is not a
// caller error but the tripwire the verification sweeps watch for: it
// means no model flag covers a point the rank test admitted.
template <class K>
LiftedFlag<K> lift_flag(const ConormalPoint<K>& pt, const Permutation& w,
                        const GrassContext& ctx) {
  if (!is_cotangent_point(pt.V, pt.x, ctx) || !conormal_equations_test(pt, w, ctx))
    throw UsageError("lift_flag precondition: point must satisfy the conormal equations");
  BlockProfile p = block_profile(w, ctx);
  for (bool anchor_image : {false, true}) {
    try {
      return detail::lift_flag_attempt(pt, w, p, anchor_image);
    } catch (const CompletionError&) {
      // fall through to the stronger anchor
    }
  }
  throw ContradictionError("lift_flag: no completion strategy produced a model flag");
}

}  // namespace ck
