#pragma once

#include <utility>
#include <vector>

#include "ck/common.hpp"

namespace ck {

// Permutation of {1..n} in one-line notation; 1-indexed externally.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const {
    if (i < 1 || i > size()) throw UsageError("permutation index out of range");
    return word_[i - 1];
  }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

  std::string str() const;

 private:
  std::vector<int> word_;
};

// (a b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);

// Which Grassmannian: type A Gr(d, n), or type C SGr(2d) with ambient 2d.
struct GrassContext {
  bool type_c = false;
  int n = 0;  // ambient dimension (2d in type C)
  int d = 0;

  static GrassContext type_a(int n, int d) {
    if (!(0 < d && d < n)) throw UsageError("type A context needs 0 < d < n");
    return GrassContext{false, n, d};
  }
  static GrassContext symplectic(int d) {
    if (d < 1) throw UsageError("type C context needs d >= 1");
    return GrassContext{true, 2 * d, d};
  }
  std::string str() const;
};

// Number of nonzero entries in the top-left i x j corner of the
// permutation matrix: |{k <= j : w(k) <= i}|. Accepts i or j equal 0.
int corner_rank(const Permutation& w, int i, int j);

// Increasing on positions 1..d and d+1..n.
bool is_minimal_rep(const Permutation& w, const GrassContext& ctx);

// w(n+1-i) = n+1-w(i) for all i (n even).
bool is_type_c_element(const Permutation& w);

// Longest element of the block parabolic: reverses 1..d and d+1..n.
Permutation block_reversal(int n, int d);

// (w_P, v = w w_P); v is decreasing on both blocks.
std::pair<Permutation, Permutation> maximal_rep_pair(const Permutation& w, const GrassContext& ctx);

// All minimal representatives, lexicographically by word.
// Guards: type A n <= 12, type C d <= 6.
std::vector<Permutation> enumerate_minimal_reps(const GrassContext& ctx);

// Indices i in [1, d] with w(i) > w(i+1); right-multiplying by the
// corresponding type-C simple reflection shortens w. Empty iff w = id.
std::vector<int> type_c_descent_word(Permutation w);

// Apply the type-C simple reflection s_i on positions (right action).
Permutation apply_type_c_reflection(const Permutation& w, int i);

}  // namespace ck
