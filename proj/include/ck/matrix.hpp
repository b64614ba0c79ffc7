#pragma once

#include <string>
#include <vector>

#include "ck/field.hpp"

namespace ck {

// Dense row-major matrix over an exact field scalar K (Rat or Fp).
// Entry access is 0-based; the 1-based helpers that mirror mathematical
// notation (elementary matrices, coordinate subspaces) live below.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, FieldDesc f)
      : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, make_scalar<K>(f, 0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }

  K& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const K& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  K zero() const { return make_scalar<K>(field_, 0); }
  K one() const { return make_scalar<K>(field_, 1); }

  bool is_zero() const {
    for (const K& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix s(a.rows_, a.cols_, a.field_);
    for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] + b.a_[i];
    return s;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix s(a.rows_, a.cols_, a.field_);
    for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = a.a_[i] - b.a_[i];
    return s;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
      throw UsageError("matrix product shape/field mismatch");
    Matrix s(a.rows_, b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) s.at(i, j) += aik * b.at(k, j);
      }
    return s;
  }
  friend Matrix operator*(const K& c, const Matrix& a) {
    Matrix s(a.rows_, a.cols_, a.field_);
    for (size_t i = 0; i < a.a_.size(); ++i) s.a_[i] = c * a.a_[i];
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (a.a_[i] != b.a_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += "[";
      for (int j = 0; j < cols_; ++j) s += (j ? " " : "") + at(i, j).str();
      s += "]";
    }
    return s;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_ || field_ != b.field_)
      throw UsageError("matrix shape/field mismatch");
  }

  int rows_, cols_;
  FieldDesc field_;
  std::vector<K> a_;
};

template <class K>
Matrix<K> identity_matrix(int n, FieldDesc f) {
  Matrix<K> m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = m.one();
  return m;
}

// E_{i,j}: 1 in position (i, j), 1-based, zero elsewhere.
template <class K>
Matrix<K> elementary_matrix(int n, int i, int j, FieldDesc f) {
  if (i < 1 || j < 1 || i > n || j > n) throw UsageError("elementary_matrix index out of range");
  Matrix<K> m(n, n, f);
  m.at(i - 1, j - 1) = m.one();
  return m;
}

}  // namespace ck
