#include "ck/blocks.hpp"

#include <algorithm>

namespace ck {

BlockProfile block_profile(const Permutation& w, const GrassContext& ctx) {
  if (!is_minimal_rep(w, ctx)) throw UsageError("block_profile needs a minimal representative");
  if (ctx.type_c && !is_type_c_element(w))
    throw UsageError("block_profile: type C context needs a type C element");

  BlockProfile p;
  p.ctx = ctx;
  int n = ctx.n, d = ctx.d;

  // maximal runs of consecutive values in w(1..d)
  int k = 1;
  while (k <= d) {
    int start = w(k) - 1;
    int end = w(k);
    while (k + 1 <= d && w(k + 1) == end + 1) {
      ++k;
      ++end;
    }
    p.run_begin.push_back(start);
    p.run_end.push_back(end);
    ++k;
  }
  p.blocks = static_cast<int>(p.run_begin.size());
  int l = p.blocks;

  p.run_sum.assign(l + 1, 0);
  for (int i = 1; i <= l; ++i) p.run_sum[i] = p.run_sum[i - 1] + (p.run_end[i - 1] - p.run_begin[i - 1]);

  p.gap_sum.assign(l + 2, 0);
  for (int i = 1; i <= l; ++i) p.gap_sum[i] = p.gap_sum[i - 1] + (p.run_begin[i - 1] - (i >= 2 ? p.run_end[i - 2] : 0));
  p.gap_sum[l + 1] = p.gap_sum[l] + (n - p.run_end[l - 1]);

  p.checkpoint.assign(l + 2, 0);
  for (int i = 1; i <= l; ++i) p.checkpoint[i] = p.run_end[i - 1];
  p.checkpoint[l + 1] = n;

  if (p.run_sum[l] != d || p.gap_sum[l + 1] != n - d)
    throw ContradictionError("block profile sums are inconsistent");
  for (int i = 1; i <= l; ++i)
    if (p.checkpoint[i] != p.run_sum[i] + p.gap_sum[i])
      throw ContradictionError("checkpoint != run_sum + gap_sum");

  if (ctx.type_c) {
    // exactly one of {1 in first block, 2d in first block} holds
    p.pairing_offset = (p.run_begin.front() == 0) ? 1 : 0;
    int s = p.pairing_offset;
    for (int i = 0; i <= l + 1; ++i) {
      int m = l + s - i;
      if (m >= 0 && m <= l + 1 && p.checkpoint[i] + p.checkpoint[m] != n)
        throw ContradictionError("type C checkpoint pairing failed");
      if (i <= l && m >= 0 && m <= l + 1 && p.run_sum[i] + p.gap_sum[m] != d)
        throw ContradictionError("type C run/gap pairing failed");
    }
  }
  return p;
}

int corner_rank_at_run(const BlockProfile& p, int i, int j) {
  if (i < 1 || i > p.blocks || j < 1 || j > p.blocks)
    throw UsageError("corner_rank_at_run index out of range");
  return std::min(p.run_sum[i], p.run_sum[j]);
}

int corner_rank_at_gap(const BlockProfile& p, int i, int j) {
  if (i < 1 || i > p.blocks || j < 1 || j > p.blocks)
    throw UsageError("corner_rank_at_gap index out of range");
  return p.run_sum[i] + std::min(p.gap_sum[i], p.gap_sum[j]);
}

std::vector<int> full_levels(const BlockProfile& p) {
  std::vector<int> q;
  for (int i = 0; i <= p.blocks; ++i) q.push_back(p.run_sum[i]);
  for (int i = 1; i <= p.blocks + 1; ++i) q.push_back(p.ctx.d + p.gap_sum[i]);
  return q;
}

FlagShape flag_shape(const BlockProfile& p) {
  FlagShape s;
  s.ctx = p.ctx;
  s.q = full_levels(p);
  if (p.ctx.type_c) {
    std::sort(s.q.begin(), s.q.end());
    s.q.erase(std::unique(s.q.begin(), s.q.end()), s.q.end());
    int m = static_cast<int>(s.q.size());
    if (m != 2 * p.blocks + 1) throw ContradictionError("type C shape is not 2l+1 levels");
    for (int i = 0; i < m; ++i)
      if (s.q[i] + s.q[m - 1 - i] != p.ctx.n)
        throw ContradictionError("type C shape is not symmetric");
  }
  return s;
}

std::vector<std::pair<int, int>> quiver_level_pairs(const BlockProfile& p) {
  std::vector<int> q = full_levels(p);
  int l = p.blocks;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= l + 1; ++i) pairs.emplace_back(q[l + i], q[i - 1]);
  return pairs;
}

int conormal_bound(const BlockProfile& p, int i, int j) {
  if (!(0 <= j && j < i && i <= p.blocks + 1)) throw UsageError("conormal_bound index out of range");
  return std::min(p.run_sum[i - 1] - p.run_sum[j], p.gap_sum[i] - p.gap_sum[j + 1]);
}

}  // namespace ck
