#pragma once

#include <vector>

#include "ck/echelon.hpp"
#include "ck/matrix.hpp"

namespace ck {

// A linear subspace of the ambient coordinate space, stored as the
// unique RREF basis of its row span (one basis vector per row). Two
// subspaces are equal iff their representations are identical. The zero
// subspace is a 0xn basis, not a special value.
template <class K>
class Subspace {
 public:
  Subspace(int ambient, FieldDesc f) : basis_(0, ambient, f) {}

  // RREF span of the given rows; rank-deficient input collapses.
  static Subspace span(const Matrix<K>& raw_basis) {
    Matrix<K> m = raw_basis;
    int r = static_cast<int>(rref_in_place(m).size());
    Subspace s(raw_basis.cols(), raw_basis.field());
    s.basis_ = Matrix<K>(r, raw_basis.cols(), raw_basis.field());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < raw_basis.cols(); ++j) s.basis_.at(i, j) = m.at(i, j);
    return s;
  }

  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const FieldDesc& field() const { return basis_.field(); }

  bool is_zero() const { return dim() == 0; }

  // Reduce a row vector against the RREF basis; v is in the span iff
  // the remainder vanishes.
  bool contains(const std::vector<K>& v) const {
    std::vector<K> w = v;
    reduce_against(w);
    for (const K& x : w)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw UsageError("ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
      if (!contains(other.row(i))) return false;
    return true;
  }

  std::vector<K> row(int i) const {
    std::vector<K> v;
    v.reserve(ambient_dim());
    for (int j = 0; j < ambient_dim(); ++j) v.push_back(basis_.at(i, j));
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  std::string str() const { return basis_.str(); }

 private:
  void reduce_against(std::vector<K>& v) const {
    int r = 0;
    for (int c = 0; c < ambient_dim() && r < dim(); ++c) {
      if (basis_.at(r, c).is_zero()) continue;  // not this row's pivot
      if (!v[c].is_zero()) {
        K factor = v[c];
        for (int j = c; j < ambient_dim(); ++j) v[j] -= factor * basis_.at(r, j);
      }
      ++r;
    }
  }

  Matrix<K> basis_;
};

template <class K>
Subspace<K> canonicalize(const Matrix<K>& raw_basis) {
  return Subspace<K>::span(raw_basis);
}

template <class K>
Subspace<K> zero_subspace(int ambient, FieldDesc f) {
  return Subspace<K>(ambient, f);
}

template <class K>
Subspace<K> full_space(int ambient, FieldDesc f) {
  return Subspace<K>::span(identity_matrix<K>(ambient, f));
}

// E(i): span of the first i coordinate vectors.
template <class K>
Subspace<K> standard_subspace(int ambient, int i, FieldDesc f) {
  if (i < 0 || i > ambient) throw UsageError("standard_subspace level out of range");
  Matrix<K> m(i, ambient, f);
  for (int r = 0; r < i; ++r) m.at(r, r) = m.one();
  return Subspace<K>::span(m);
}

template <class K>
void check_compatible(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw UsageError("subspace ambient/field mismatch");
}

template <class K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
  check_compatible(a, b);
  Matrix<K> m(a.dim() + b.dim(), a.ambient_dim(), a.field());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) m.at(i, j) = a.basis().at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) m.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace<K>::span(m);
}

// Zassenhaus: row reduce [A | A; B | 0]; rows whose left half vanished
// carry the intersection in their right half.
template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
  check_compatible(a, b);
  int n = a.ambient_dim();
  Matrix<K> m(a.dim() + b.dim(), 2 * n, a.field());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = a.basis().at(i, j);
      m.at(i, n + j) = a.basis().at(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) m.at(a.dim() + i, j) = b.basis().at(i, j);
  rref_in_place(m);
  Matrix<K> inter(0, n, a.field());
  std::vector<std::vector<K>> rows;
  for (int i = 0; i < m.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = m.at(i, j).is_zero();
    bool right_zero = true;
    for (int j = 0; j < n && right_zero; ++j) right_zero = m.at(i, n + j).is_zero();
    if (left_zero && !right_zero) {
      std::vector<K> v;
      for (int j = 0; j < n; ++j) v.push_back(m.at(i, n + j));
      rows.push_back(v);
    }
  }
  Matrix<K> raw(static_cast<int>(rows.size()), n, a.field());
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) raw.at(static_cast<int>(i), j) = rows[i][j];
  return Subspace<K>::span(raw);
}

// Image subspace x . V (x applied to every basis vector).
template <class K>
Subspace<K> apply(const Matrix<K>& x, const Subspace<K>& v) {
  if (x.cols() != v.ambient_dim() || x.rows() != x.cols() || x.field() != v.field())
    throw UsageError("apply: operator shape/field mismatch");
  Matrix<K> img = v.basis() * x.transpose();
  return Subspace<K>::span(img);
}

// dim(U / (U meet W)) = dim((U + W) / W)
template <class K>
int quotient_dim(const Subspace<K>& u, const Subspace<K>& w) {
  check_compatible(u, w);
  return u.dim() - intersect(u, w).dim();
}

// ker x as a subspace (x acting on column vectors).
template <class K>
Subspace<K> kernel_subspace(const Matrix<K>& x) {
  return Subspace<K>::span(kernel_basis(x));
}

// im x as a subspace (column space of x).
template <class K>
Subspace<K> image_subspace(const Matrix<K>& x) {
  return Subspace<K>::span(x.transpose());
}

// dim(V meet E(j)) for j = 0..n, in one vector.
template <class K>
std::vector<int> standard_flag_meet_dims(const Subspace<K>& v) {
  int n = v.ambient_dim();
  std::vector<int> dims(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    // dim(V meet E(j)) = dim V - rank of the trailing columns
    Matrix<K> tail(v.dim(), n - j, v.field());
    for (int i = 0; i < v.dim(); ++i)
      for (int c = j; c < n; ++c) tail.at(i, c - j) = v.basis().at(i, c);
    dims[j] = v.dim() - rank(tail);
  }
  return dims;
}

}  // namespace ck
