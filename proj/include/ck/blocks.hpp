#pragma once

#include <vector>

#include "ck/perm.hpp"

namespace ck {

// Block data of a minimal representative. The first block of w, read as
// values, is the disjoint union of the runs (run_begin[i], run_end[i]],
// 1 <= i <= blocks; the second block is the union of the gaps.
//
//   run_sum[i] = total length of runs 1..i        (d at i = blocks)
//   gap_sum[i] = total length of gaps 1..i        (n - d at i = blocks+1)
//   checkpoint[i] = run_sum[i] + gap_sum[i]       (= run_end[i] for i >= 1)
//
// checkpoint has blocks+2 entries: checkpoint[0] = 0 and
// checkpoint[blocks+1] = n, the two sentinels every rank inequality uses.
struct BlockProfile {
  GrassContext ctx;
  int blocks = 0;                // l
  std::vector<int> run_begin;    // size l, run i is (run_begin[i-1], run_end[i-1]]
  std::vector<int> run_end;      // size l
  std::vector<int> run_sum;      // size l+1, run_sum[0] = 0
  std::vector<int> gap_sum;      // size l+2, gap_sum[0] = 0
  std::vector<int> checkpoint;   // size l+2, checkpoint[0] = 0, checkpoint[l+1] = n

  // Type C only: 0 when 2d is a value of the first block, 1 when 1 is.
  // The standard-flag perp pairing is checkpoint[i] + checkpoint[blocks
  // + pairing_offset - i] = 2d, and run_sum[i] + gap_sum[blocks +
  // pairing_offset - i] = d.
  int pairing_offset = 0;
};

BlockProfile block_profile(const Permutation& w, const GrassContext& ctx);

// corner_rank(w, checkpoint[i], run_sum[j]) evaluated from the profile
// alone: min(run_sum[i], run_sum[j]), for 1 <= i, j <= blocks.
int corner_rank_at_run(const BlockProfile& p, int i, int j);

// corner_rank(w, checkpoint[i], d + gap_sum[j]) from the profile alone:
// run_sum[i] + min(gap_sum[i], gap_sum[j]), for 1 <= i, j <= blocks.
int corner_rank_at_gap(const BlockProfile& p, int i, int j);

// The flag shape attached to w. Type A: (run_sum[0..l], d+gap_sum[1..l+1]),
// length 2l+2, weakly increasing with at most one repeated level. Type C:
// the same levels deduplicated, length 2l+1, symmetric: q[i] + q[2l-i] = 2d.
struct FlagShape {
  GrassContext ctx;
  std::vector<int> q;
};

FlagShape flag_shape(const BlockProfile& p);

// The full 2l+2 level list (run_sum then d+gap_sum), repetitions kept.
// Index arithmetic on this list drives the quiver conditions uniformly
// in both types.
std::vector<int> full_levels(const BlockProfile& p);

// The quiver containment pairs: x . F(upper) must land in F(lower),
// listed as (upper level, lower level) for i = 1..l+1.
std::vector<std::pair<int, int>> quiver_level_pairs(const BlockProfile& p);

// min(run_sum[i-1] - run_sum[j], gap_sum[i] - gap_sum[j+1]) for the
// inequality at the (i, j) checkpoint pair, 0 <= j < i <= l+1.
int conormal_bound(const BlockProfile& p, int i, int j);

}  // namespace ck
