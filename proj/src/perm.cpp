#include "ck/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ck {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[v - 1])
      throw UsageError("not a permutation of 1..n: " + str());
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(w);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(inv);
}

std::string Permutation::str() const {
  std::string s = "[";
  for (size_t i = 0; i < word_.size(); ++i) s += (i ? "," : "") + std::to_string(word_[i]);
  return s + "]";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw UsageError("composing permutations of different sizes");
  std::vector<int> w(a.size());
  for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
  return Permutation(w);
}

std::string GrassContext::str() const {
  if (type_c) return "SGr(" + std::to_string(n) + ")";
  return "Gr(" + std::to_string(d) + "," + std::to_string(n) + ")";
}

int corner_rank(const Permutation& w, int i, int j) {
  if (i < 0 || j < 0 || i > w.size() || j > w.size())
    throw UsageError("corner_rank index out of range");
  int count = 0;
  for (int k = 1; k <= j; ++k)
    if (w(k) <= i) ++count;
  return count;
}

bool is_minimal_rep(const Permutation& w, const GrassContext& ctx) {
  if (w.size() != ctx.n) throw UsageError("permutation size does not match context");
  for (int i = 1; i < ctx.n; ++i) {
    if (i == ctx.d) continue;
    if (w(i) > w(i + 1)) return false;
  }
  return true;
}

bool is_type_c_element(const Permutation& w) {
  int n = w.size();
  if (n % 2 != 0) throw UsageError("type C element test needs even size");
  for (int i = 1; i <= n; ++i)
    if (w(n + 1 - i) != n + 1 - w(i)) return false;
  return true;
}

Permutation block_reversal(int n, int d) {
  std::vector<int> w(n);
  for (int i = 1; i <= d; ++i) w[i - 1] = d + 1 - i;
  for (int i = d + 1; i <= n; ++i) w[i - 1] = n + d + 1 - i;
  return Permutation(w);
}

std::pair<Permutation, Permutation> maximal_rep_pair(const Permutation& w,
                                                     const GrassContext& ctx) {
  if (!is_minimal_rep(w, ctx)) throw UsageError("maximal_rep_pair needs a minimal representative");
  Permutation wp = block_reversal(ctx.n, ctx.d);
  return {wp, compose(w, wp)};
}

std::vector<Permutation> enumerate_minimal_reps(const GrassContext& ctx) {
  if (!ctx.type_c && ctx.n > 12) throw ResourceError("enumerate_minimal_reps guard: type A needs n <= 12");
  if (ctx.type_c && ctx.d > 6) throw ResourceError("enumerate_minimal_reps guard: type C needs d <= 6");

  std::vector<Permutation> out;
  int n = ctx.n, d = ctx.d;
  // A minimal representative is determined by the value set of its
  // first block; both blocks are then sorted increasingly.
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 1);
  auto emit = [&](const std::vector<int>& s) {
    if (ctx.type_c) {
      // type C: the first block must contain exactly one of {k, n+1-k}
      for (int v : s)
        if (std::find(s.begin(), s.end(), n + 1 - v) != s.end()) return;
    }
    std::vector<bool> in_s(n + 1, false);
    for (int v : s) in_s[v] = true;
    std::vector<int> w;
    w.reserve(n);
    for (int v = 1; v <= n; ++v)
      if (in_s[v]) w.push_back(v);
    for (int v = 1; v <= n; ++v)
      if (!in_s[v]) w.push_back(v);
    out.emplace_back(w);
  };
  // iterate d-subsets of {1..n} in lexicographic order
  while (true) {
    emit(pick);
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + 1 + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation apply_type_c_reflection(const Permutation& w, int i) {
  int n = w.size(), d = n / 2;
  if (n % 2 != 0 || i < 1 || i > d) throw UsageError("type C reflection index out of range");
  std::vector<int> v = w.word();
  std::swap(v[i - 1], v[i]);
  if (i < d) std::swap(v[n - i - 1], v[n - i]);
  return Permutation(v);
}

std::vector<int> type_c_descent_word(Permutation w) {
  int n = w.size(), d = n / 2;
  if (n % 2 != 0 || !is_type_c_element(w)) throw UsageError("descent word needs a type C element");
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= d; ++i) {
      if (w(i) > w(i + 1)) {
        w = apply_type_c_reflection(w, i);
        word.push_back(i);
        moved = true;
        break;
      }
    }
  }
  // now w is increasing on 1..d+1, which forces w = id
  if (w != Permutation::identity(n)) throw ContradictionError("type C descent reduction did not reach the identity");
  return word;
}

}  // namespace ck
