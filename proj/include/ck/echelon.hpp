#pragma once

#include <vector>

#include "ck/matrix.hpp"

namespace ck {

// Reduced row echelon form, in place. Returns the pivot columns
// (0-based). The RREF of a matrix is unique, so equal row spans yield
// bit-identical results; this is what makes Subspace equality exact.
template <class K>
std::vector<int> rref_in_place(Matrix<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
    K inv = m.at(row, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      K factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class K>
int rank(Matrix<K> m) {
  return static_cast<int>(rref_in_place(m).size());
}

// Basis of {v : m v = 0}, one kernel vector per row, in RREF.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  Matrix<K> r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  int k = m.cols() - static_cast<int>(pivots.size());
  Matrix<K> ker(k, m.cols(), m.field());
  int out = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    ker.at(out, c) = ker.one();
    for (size_t i = 0; i < pivots.size(); ++i) ker.at(out, pivots[i]) = -r.at(static_cast<int>(i), c);
    ++out;
  }
  rref_in_place(ker);
  return ker;
}

}  // namespace ck
