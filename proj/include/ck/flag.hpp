#pragma once

#include <vector>

#include "ck/blocks.hpp"
#include "ck/subspace.hpp"

namespace ck {

// Nested chain of subspaces matching a flag shape: dim(spaces[i]) = q[i]
// and spaces[i] is contained in spaces[i+1]. Repeated levels (type A
// shapes may carry one) hold equal subspaces.
template <class K>
struct PartialFlag {
  FlagShape shape;
  std::vector<Subspace<K>> spaces;

  void validate() const {
    if (spaces.size() != shape.q.size()) throw UsageError("flag/shape length mismatch");
    for (size_t i = 0; i < spaces.size(); ++i) {
      if (spaces[i].dim() != shape.q[i]) throw UsageError("flag level has wrong dimension");
      if (i + 1 < spaces.size() && !spaces[i + 1].contains(spaces[i]))
        throw UsageError("flag levels are not nested");
    }
  }

  // The subspace of a given dimension; levels in a shape are weakly
  // increasing, and equal levels carry equal subspaces.
  const Subspace<K>& at_level(int level) const {
    for (size_t i = 0; i < spaces.size(); ++i)
      if (shape.q[i] == level) return spaces[i];
    throw UsageError("no flag level of dimension " + std::to_string(level));
  }
};

// The standard flag of a given shape: E(q_0) in E(q_1) in ...
template <class K>
PartialFlag<K> standard_flag(const FlagShape& shape, FieldDesc f) {
  PartialFlag<K> flag;
  flag.shape = shape;
  for (int level : shape.q) flag.spaces.push_back(standard_subspace<K>(shape.ctx.n, level, f));
  return flag;
}

}  // namespace ck
