#pragma once

#include <utility>
#include <vector>

#include "ck/perm.hpp"

namespace ck {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;
  int size() const;
  std::string str() const;
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

// Standard Young tableau, row-wise storage: rows strictly increasing,
// columns strictly increasing, row lengths weakly decreasing, entries
// exactly 1..n.
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  int size() const;
  int columns() const;      // length of the first row (0 for empty)
  Partition shape() const;
  void validate() const;    // throws UsageError when not standard

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows == b.rows;
  }
  std::string str() const;
};

// Skew tableau: per-row leading gap plus entries; strictly increasing
// along rows and down columns, inner shape inside outer shape.
struct SkewTableau {
  std::vector<int> gaps;
  std::vector<std::vector<int>> rows;
};

// Row-insertion tableau of w(1), ..., w(n) (the left tableau of the
// correspondence).
StandardTableau rsk_insertion_tableau(const Permutation& w);

// Rectify a skew standard tableau by inward slides. Confluent, so the
// inner-corner order does not matter; we fix the bottom-most corner.
StandardTableau rectify(SkewTableau skew);

// For a two-column tableau with first-column entries a_1 < ... < a_k and
// second-column entries b_1 < ... < b_{n-k}: w = (a_1..a_k, b_1..b_{n-k})
// and v = w w_P for the block reversal w_P at k. The insertion tableau
// of v is verified to be T before returning.
std::pair<Permutation, Permutation> two_column_to_permutations(const StandardTableau& t);

// Restrict T to the entries in (lo, hi], relabel to 1..hi-lo, rectify.
StandardTableau rectified_window(const StandardTableau& t, int lo, int hi);

// Jordan type of a square-zero matrix of size m and given rank:
// (2^rank, 1^{m-2 rank}).
Partition square_zero_jordan_type(int size, int rank);

// Window-count consistency: for every 0 <= j < i <= l, the second-column
// box count of the rectified window (t_j, t_i] of T equals
// min(run_sum[i-1]-run_sum[j], gap_sum[i]-gap_sum[j+1]) computed from
// the block profile of the w attached to T. Holds for every tableau with
// at most 9 boxes; first fails at 10 (the window count is then the
// sharper of the two).
bool window_rank_bounds_agree(const StandardTableau& t);

// All standard Young tableaux with n boxes and at most two columns.
std::vector<StandardTableau> enumerate_two_column_tableaux(int n);

}  // namespace ck
