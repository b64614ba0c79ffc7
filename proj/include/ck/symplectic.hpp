#pragma once

#include "ck/subspace.hpp"

namespace ck {

// The standard skew form on E(2d): omega(e_i, e_j) = +1 if j = 2d+1-i
// and i <= d, -1 if j = 2d+1-i and i > d, 0 otherwise. With this form
// E(i)^perp = E(2d-i) along the standard flag.
template <class K>
class SymplecticForm {
 public:
  SymplecticForm(int d, FieldDesc f) : d_(d), gram_(2 * d, 2 * d, f) {
    if (d < 1) throw UsageError("symplectic form needs d >= 1");
    for (int i = 1; i <= 2 * d; ++i) {
      int j = 2 * d + 1 - i;
      gram_.at(i - 1, j - 1) = (i <= d) ? gram_.one() : -gram_.one();
    }
  }

  int half_dim() const { return d_; }
  int ambient_dim() const { return 2 * d_; }
  const Matrix<K>& gram() const { return gram_; }

  K pair(const std::vector<K>& u, const std::vector<K>& v) const {
    K s = gram_.zero();
    for (int i = 0; i < 2 * d_; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < 2 * d_; ++j)
        if (!gram_.at(i, j).is_zero()) s += u[i] * gram_.at(i, j) * v[j];
    }
    return s;
  }

 private:
  int d_;
  Matrix<K> gram_;
};

// V^perp = kernel of v -> omega(b_i, v) over the basis rows of V.
template <class K>
Subspace<K> perp(const Subspace<K>& v, const SymplecticForm<K>& form) {
  if (v.ambient_dim() != form.ambient_dim())
    throw UsageError("perp: ambient dimension mismatch (must be 2d)");
  return kernel_subspace(v.basis() * form.gram());
}

template <class K>
bool is_isotropic(const Subspace<K>& v, const SymplecticForm<K>& form) {
  return perp(v, form).contains(v);
}

template <class K>
bool is_lagrangian(const Subspace<K>& v, const SymplecticForm<K>& form) {
  return v.dim() == form.half_dim() && is_isotropic(v, form);
}

// x in sp: omega(x u, v) + omega(u, x v) = 0, i.e. x^T G + G x = 0.
template <class K>
bool in_symplectic_lie_algebra(const Matrix<K>& x, const SymplecticForm<K>& form) {
  if (x.rows() != form.ambient_dim() || x.cols() != form.ambient_dim())
    throw UsageError("sp test: shape mismatch");
  return (x.transpose() * form.gram() + form.gram() * x).is_zero();
}

// g in Sp: g^T G g = G.
template <class K>
bool preserves_form(const Matrix<K>& g, const SymplecticForm<K>& form) {
  return g.transpose() * form.gram() * g == form.gram();
}

// Generators of the positive root spaces of sp, all strictly upper and
// square-zero:
//   E_{i,j} - E_{jbar,ibar} (i < j <= d), E_{i,jbar} + E_{j,ibar} (i < j <= d),
//   E_{i,ibar} (i <= d).
template <class K>
std::vector<Matrix<K>> sp_positive_root_generators(int d, FieldDesc f) {
  int n = 2 * d;
  std::vector<Matrix<K>> gens;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      gens.push_back(elementary_matrix<K>(n, i, j, f) - elementary_matrix<K>(n, n + 1 - j, n + 1 - i, f));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      gens.push_back(elementary_matrix<K>(n, i, n + 1 - j, f) + elementary_matrix<K>(n, j, n + 1 - i, f));
  for (int i = 1; i <= d; ++i) gens.push_back(elementary_matrix<K>(n, i, n + 1 - i, f));
  return gens;
}

}  // namespace ck
