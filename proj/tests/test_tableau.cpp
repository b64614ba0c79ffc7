#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ck/tableau.hpp"

using namespace ck;

namespace {

StandardTableau tab(std::vector<std::vector<int>> rows) {
  StandardTableau t;
  t.rows = std::move(rows);
  t.validate();
  return t;
}

long long binomial(int n, int k) {
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(tab({{1, 2}, {3, 4}}));
  CHECK_THROWS_AS(tab({{1, 3}, {2, 3}}), UsageError);   // repeated entry
  CHECK_THROWS_AS(tab({{2, 1}}), UsageError);           // row not increasing
  CHECK_THROWS_AS(tab({{2, 3}, {1, 4}}), UsageError);   // column not increasing
  CHECK_THROWS_AS(tab({{1}, {2, 3}}), UsageError);      // row lengths increase
}

TEST_CASE("row insertion: worked examples") {
  CHECK(rsk_insertion_tableau(Permutation::identity(5)) == tab({{1, 2, 3, 4, 5}}));
  CHECK(rsk_insertion_tableau(Permutation({2, 4, 1, 3})) == tab({{1, 3}, {2, 4}}));
  CHECK(rsk_insertion_tableau(Permutation({3, 1, 4, 2})) == tab({{1, 2}, {3, 4}}));

  // output is standard for every word
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
      CHECK_NOTHROW(rsk_insertion_tableau(Permutation(word)).validate());
    } while (std::next_permutation(word.begin(), word.end()));
  }
}

TEST_CASE("two-column correspondence") {
  auto [w, v] = two_column_to_permutations(tab({{1, 2}, {3, 4}}));
  CHECK(w == Permutation({1, 3, 2, 4}));
  CHECK(v == Permutation({3, 1, 4, 2}));

  auto [w1, v1] = two_column_to_permutations(tab({{1}, {2}, {3}}));
  CHECK(w1 == Permutation::identity(3));
  CHECK(v1 == block_reversal(3, 3));

  CHECK_THROWS_AS(two_column_to_permutations(tab({{1, 2, 3}})), UsageError);

  // two-column tableaux on 1..n are ballot sequences: C(n, floor(n/2))
  // of them; the op itself verifies rsk(v) = T, so run it broadly
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_two_column_tableaux(n);
    CHECK(static_cast<long long>(all.size()) == binomial(n, n / 2));
    for (const StandardTableau& t : all) CHECK_NOTHROW(two_column_to_permutations(t));
  }
  // tableaux of the full two-column shape on 16 letters: Catalan(8)
  long long full_shape = 0;
  for (const StandardTableau& t : enumerate_two_column_tableaux(16))
    if (static_cast<int>(t.rows.size()) == 8) ++full_shape;
  CHECK(full_shape == 1430);
}

TEST_CASE("rectified windows") {
  StandardTableau t = tab({{1, 2}, {3, 4}});

  // whole range: rectification of a straight tableau is itself
  CHECK(rectified_window(t, 0, 4) == t);

  // entries {3, 4}: one slide up to a single row
  CHECK(rectified_window(t, 2, 4) == tab({{1, 2}}));

  // a single entry rectifies to a single box
  CHECK(rectified_window(t, 3, 4) == tab({{1}}));

  // entries {2, 3}: skew shape with one slide
  CHECK(rectified_window(t, 1, 3) == tab({{1}, {2}}));

  // straight tableaux are fixed points of rectification
  for (int n = 1; n <= 7; ++n)
    for (const StandardTableau& u : enumerate_two_column_tableaux(n))
      CHECK(rectified_window(u, 0, n) == u);

  CHECK_THROWS_AS(rectified_window(t, 2, 2), UsageError);
  CHECK_THROWS_AS(rectified_window(t, 0, 5), UsageError);
}

TEST_CASE("window bounds agree with the profile bounds") {
  CHECK(window_rank_bounds_agree(tab({{1, 2}, {3, 4}})));
  CHECK(window_rank_bounds_agree(tab({{1}, {2}, {3}})));
  CHECK(window_rank_bounds_agree(tab({{1, 4}, {2, 5}, {3, 6}})));
  for (int n = 1; n <= 7; ++n)
    for (const StandardTableau& t : enumerate_two_column_tableaux(n))
      CHECK(window_rank_bounds_agree(t));
}

TEST_CASE("square-zero jordan shapes") {
  CHECK(square_zero_jordan_type(3, 0) == Partition{{1, 1, 1}});
  CHECK(square_zero_jordan_type(4, 2) == Partition{{2, 2}});
  CHECK(square_zero_jordan_type(5, 2) == Partition{{2, 2, 1}});
  CHECK(square_zero_jordan_type(5, 2).size() == 5);
  CHECK_THROWS_AS(square_zero_jordan_type(3, 2), UsageError);
}
