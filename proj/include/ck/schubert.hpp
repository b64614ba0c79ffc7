#pragma once

#include <optional>
#include <vector>

#include "ck/flag.hpp"
#include "ck/symplectic.hpp"

namespace ck {

// Column targets for a Schubert condition: target[j] is the least
// admissible dim(V meet E(j)). Weakly increasing with steps in {0,1},
// target[n] equals the subspace dimension being constrained.
struct RankTargets {
  std::vector<int> target;  // indexed 0..n, target[0] = 0
  int operator()(int j) const { return target.at(j); }
  int ambient() const { return static_cast<int>(target.size()) - 1; }
};

inline RankTargets rank_targets(const Permutation& w, int q) {
  RankTargets t;
  t.target.resize(w.size() + 1);
  for (int j = 0; j <= w.size(); ++j) t.target[j] = corner_rank(w, j, q);
  return t;
}

// One Schubert-condition violation, for reporting.
struct RankViolation {
  int j;     // flag level E(j)
  int have;  // dim(V meet E(j))
  int need;  // required minimum
};

template <class K>
std::vector<RankViolation> schubert_violations(const Subspace<K>& v, const Permutation& w,
                                               const GrassContext& ctx) {
  if (v.ambient_dim() != ctx.n || w.size() != ctx.n)
    throw UsageError("schubert test: ambient size mismatch");
  if (v.dim() != ctx.d) throw UsageError("schubert test: dim V != d");
  std::vector<RankViolation> out;
  std::vector<int> dims = standard_flag_meet_dims(v);
  for (int j = 1; j <= ctx.n; ++j) {
    int need = corner_rank(w, j, ctx.d);
    if (dims[j] < need) out.push_back({j, dims[j], need});
  }
  return out;
}

// dim(V meet E(j)) >= corner_rank(w, j, d) for every j.
template <class K>
bool in_schubert(const Subspace<K>& v, const Permutation& w, const GrassContext& ctx) {
  return schubert_violations(v, w, ctx).empty();
}

// Equality at every j: the open cell.
template <class K>
bool in_cell(const Subspace<K>& v, const Permutation& w, const GrassContext& ctx) {
  if (v.dim() != ctx.d) throw UsageError("cell test: dim V != d");
  std::vector<int> dims = standard_flag_meet_dims(v);
  for (int j = 1; j <= ctx.n; ++j)
    if (dims[j] != corner_rank(w, j, ctx.d)) return false;
  return true;
}

// Flag Schubert membership. Type A checks every level against its
// column targets. Type C checks the lower half (levels with q_i <= d)
// plus the perp pairing of the flag; the anti-diagonal symmetry of w
// makes the upper-half inequalities redundant.
template <class K>
bool in_flag_schubert(const PartialFlag<K>& flag, const Permutation& w, const FlagShape& shape,
                      const SymplecticForm<K>* form = nullptr) {
  if (flag.shape.q != shape.q) throw UsageError("flag shape mismatch");
  flag.validate();
  int levels = static_cast<int>(shape.q.size());
  auto level_ok = [&](int i) {
    std::vector<int> dims = standard_flag_meet_dims(flag.spaces[i]);
    for (int j = 1; j <= shape.ctx.n; ++j)
      if (dims[j] < corner_rank(w, j, shape.q[i])) return false;
    return true;
  };
  if (!shape.ctx.type_c) {
    for (int i = 0; i < levels; ++i)
      if (!level_ok(i)) return false;
    return true;
  }
  if (form == nullptr) throw UsageError("type C flag membership needs the symplectic form");
  int l = (levels - 1) / 2;
  for (int i = 0; i <= l; ++i) {
    if (!level_ok(i)) return false;
    if (perp(flag.spaces[i], *form) != flag.spaces[levels - 1 - i]) return false;
  }
  return true;
}

// Greedy constructive completion: grow U inside V until every column
// target is met and the dimension reaches target_dim. At column j the
// adjoined vector is the RREF basis row of V meet E(j) that lies
// outside the current U, with the largest pivot column (deterministic).
// An optional form restricts the choice to vectors orthogonal to the
// current U, so the result stays isotropic when U starts isotropic.
//
// Preconditions (the caller's obligation; the greedy fails with
// CompletionError carrying the column index otherwise):
//   dim(U meet E(j)) >= targets(j) - (target_dim - dim U)  for all j
//   dim(V meet E(j)) >= targets(j)                         for all j
namespace detail {

// Adjoin to `cur` the RREF basis row of `pool` outside cur with the
// largest pivot column; false when pool is contained in cur.
template <class K>
bool adjoin_from(Subspace<K>& cur, const Subspace<K>& pool) {
  std::optional<int> best;
  for (int r = 0; r < pool.dim(); ++r) {
    if (cur.contains(pool.row(r))) continue;
    best = r;  // rows are RREF ordered by pivot; later row = larger pivot
  }
  if (!best) return false;
  int n = cur.ambient_dim();
  Matrix<K> grown(cur.dim() + 1, n, cur.field());
  for (int i = 0; i < cur.dim(); ++i)
    for (int c = 0; c < n; ++c) grown.at(i, c) = cur.basis().at(i, c);
  for (int c = 0; c < n; ++c) grown.at(cur.dim(), c) = pool.basis().at(*best, c);
  cur = Subspace<K>::span(grown);
  return true;
}

}  // namespace detail

template <class K>
Subspace<K> complete_subspace(const Subspace<K>& u, const Subspace<K>& v, int target_dim,
                              const RankTargets& targets,
                              const SymplecticForm<K>* form = nullptr) {
  check_compatible(u, v);
  int n = u.ambient_dim();
  if (targets.ambient() != n) throw UsageError("targets ambient mismatch");
  if (!v.contains(u) || u.dim() > target_dim) throw CompletionError(0);

  Subspace<K> cur = u;
  for (int j = 1; j <= n; ++j) {
    while (intersect(cur, standard_subspace<K>(n, j, u.field())).dim() < targets(j)) {
      if (cur.dim() >= target_dim) throw CompletionError(j);
      Subspace<K> pool = intersect(v, standard_subspace<K>(n, j, u.field()));
      if (form != nullptr) pool = intersect(pool, perp(cur, *form));
      if (!detail::adjoin_from(cur, pool)) throw CompletionError(j);
    }
  }
  while (cur.dim() < target_dim) {
    Subspace<K> pool = (form != nullptr) ? intersect(v, perp(cur, *form)) : v;
    if (!detail::adjoin_from(cur, pool)) throw CompletionError(n);
  }
  return cur;
}

}  // namespace ck
