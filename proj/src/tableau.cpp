#include "ck/tableau.hpp"

#include <algorithm>

#include "ck/blocks.hpp"

namespace ck {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

int StandardTableau::size() const {
  int s = 0;
  for (const auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

int StandardTableau::columns() const {
  return rows.empty() ? 0 : static_cast<int>(rows.front().size());
}

Partition StandardTableau::shape() const {
  Partition p;
  for (const auto& r : rows) p.parts.push_back(static_cast<int>(r.size()));
  return p;
}

void StandardTableau::validate() const {
  int n = size();
  std::vector<bool> seen(n + 1, false);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw UsageError("tableau has an empty row");
    if (i > 0 && rows[i].size() > rows[i - 1].size())
      throw UsageError("tableau row lengths are not weakly decreasing");
    for (size_t j = 0; j < rows[i].size(); ++j) {
      int v = rows[i][j];
      if (v < 1 || v > n || seen[v]) throw UsageError("tableau entries are not exactly 1..n");
      seen[v] = true;
      if (j > 0 && rows[i][j - 1] >= v) throw UsageError("tableau row not strictly increasing");
      if (i > 0 && rows[i - 1][j] >= v) throw UsageError("tableau column not strictly increasing");
    }
  }
}

std::string StandardTableau::str() const {
  std::string s;
  for (const auto& r : rows) {
    s += "(";
    for (size_t j = 0; j < r.size(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
    s += ")";
  }
  return s;
}

StandardTableau rsk_insertion_tableau(const Permutation& w) {
  StandardTableau t;
  for (int k = 1; k <= w.size(); ++k) {
    int v = w(k);
    for (size_t i = 0;; ++i) {
      if (i == t.rows.size()) {
        t.rows.push_back({v});
        break;
      }
      auto& row = t.rows[i];
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        break;
      }
      std::swap(*it, v);  // bump
    }
  }
  return t;
}

StandardTableau rectify(SkewTableau skew) {
  // grid view: row r occupies columns [0, outer[r]), with holes at
  // columns [0, inner[r]) and entries in val[r][inner[r]..outer[r])
  int nrows = static_cast<int>(skew.rows.size());
  std::vector<int> inner(skew.gaps), outer(nrows);
  int width = 0;
  for (int r = 0; r < nrows; ++r) {
    outer[r] = inner[r] + static_cast<int>(skew.rows[r].size());
    width = std::max(width, outer[r]);
  }
  std::vector<std::vector<int>> val(nrows, std::vector<int>(width, 0));
  for (int r = 0; r < nrows; ++r)
    for (size_t j = 0; j < skew.rows[r].size(); ++j) val[r][inner[r] + j] = skew.rows[r][j];

  while (true) {
    // bottom-most removable inner corner: a gapped row whose gap
    // strictly exceeds the gap of the row below
    int start = -1;
    for (int r = nrows - 1; r >= 0; --r) {
      if (inner[r] == 0) continue;
      if (r + 1 >= nrows || inner[r + 1] < inner[r]) {
        start = r;
        break;
      }
    }
    if (start < 0) break;
    int r = start, c = inner[start] - 1;
    --inner[start];  // the corner cell leaves the inner shape
    while (true) {
      bool has_right = c + 1 < outer[r];
      bool has_below = r + 1 < nrows && c < outer[r + 1];
      if (!has_right && !has_below) {
        --outer[r];  // hole reached an outer corner; the cell disappears
        break;
      }
      if (has_right && (!has_below || val[r][c + 1] < val[r + 1][c])) {
        val[r][c] = val[r][c + 1];
        ++c;
      } else {
        val[r][c] = val[r + 1][c];
        ++r;
      }
      val[r][c] = 0;  // hole is now here
    }
  }

  StandardTableau t;
  for (int r = 0; r < nrows; ++r) {
    if (outer[r] == 0) continue;
    t.rows.emplace_back(val[r].begin(), val[r].begin() + outer[r]);
  }
  t.validate();
  return t;
}

std::pair<Permutation, Permutation> two_column_to_permutations(const StandardTableau& t) {
  t.validate();
  if (t.columns() > 2) throw UsageError("tableau has more than two columns");
  int n = t.size();
  std::vector<int> first, second;
  for (const auto& r : t.rows) {
    first.push_back(r[0]);
    if (r.size() == 2) second.push_back(r[1]);
  }
  int k = static_cast<int>(first.size());
  std::vector<int> word = first;
  word.insert(word.end(), second.begin(), second.end());
  Permutation w(word);
  Permutation v = compose(w, block_reversal(n, k));
  if (!(rsk_insertion_tableau(v) == t))
    throw ContradictionError("two-column correspondence: insertion tableau of v is not T");
  return {w, v};
}

StandardTableau rectified_window(const StandardTableau& t, int lo, int hi) {
  t.validate();
  if (!(0 <= lo && lo < hi && hi <= t.size())) throw UsageError("window out of range");
  SkewTableau skew;
  for (const auto& row : t.rows) {
    int gap = 0;
    std::vector<int> kept;
    for (int v : row) {
      if (v <= lo)
        ++gap;
      else if (v <= hi)
        kept.push_back(v - lo);
    }
    if (gap == 0 && kept.empty()) continue;
    skew.gaps.push_back(gap);
    skew.rows.push_back(kept);
  }
  while (!skew.rows.empty() && skew.rows.back().empty()) {
    skew.rows.pop_back();
    skew.gaps.pop_back();
  }
  return rectify(skew);
}

Partition square_zero_jordan_type(int size, int rank) {
  if (2 * rank > size) throw UsageError("rank too large for a square-zero matrix");
  Partition p;
  p.parts.assign(rank, 2);
  p.parts.insert(p.parts.end(), size - 2 * rank, 1);
  return p;
}

bool window_rank_bounds_agree(const StandardTableau& t) {
  auto [w, v] = two_column_to_permutations(t);
  int n = t.size();
  int k = static_cast<int>(t.rows.size());
  if (k == n) {
    // single column: every window rectifies to a column, all bounds zero
    for (int lo = 0; lo < n; ++lo)
      for (int hi = lo + 1; hi <= n; ++hi)
        if (rectified_window(t, lo, hi).columns() > 1) return false;
    return true;
  }
  BlockProfile p = block_profile(w, GrassContext::type_a(n, k));
  for (int i = 1; i <= p.blocks; ++i)
    for (int j = 0; j < i; ++j) {
      StandardTableau window = rectified_window(t, p.checkpoint[j], p.checkpoint[i]);
      int second_column = 0;
      for (const auto& row : window.rows)
        if (row.size() >= 2) ++second_column;
      if (second_column != conormal_bound(p, i, j)) return false;
    }
  return true;
}

std::vector<StandardTableau> enumerate_two_column_tableaux(int n) {
  std::vector<StandardTableau> out;
  // grow entry by entry; each prefix must stay a standard tableau with
  // at most two columns, i.e. first column count >= second column count
  struct Rec {
    static void go(int next, int n, std::vector<int>& first, std::vector<int>& second,
                   std::vector<StandardTableau>& out) {
      if (next > n) {
        StandardTableau t;
        for (size_t i = 0; i < first.size(); ++i) {
          std::vector<int> row{first[i]};
          if (i < second.size()) row.push_back(second[i]);
          t.rows.push_back(row);
        }
        t.validate();
        out.push_back(t);
        return;
      }
      first.push_back(next);
      go(next + 1, n, first, second, out);
      first.pop_back();
      if (second.size() < first.size()) {
        second.push_back(next);
        go(next + 1, n, first, second, out);
        second.pop_back();
      }
    }
  };
  std::vector<int> first, second;
  Rec::go(1, n, first, second, out);
  return out;
}

}  // namespace ck
