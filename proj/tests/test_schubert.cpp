#include <doctest.h>

#include <map>
#include <numeric>

#include "ck/enumerate.hpp"
#include "ck/schubert.hpp"

using namespace ck;

namespace {

Subspace<Fp> span_of(std::vector<std::vector<long long>> data, FieldDesc f) {
  int r = static_cast<int>(data.size());
  int c = r ? static_cast<int>(data[0].size()) : 0;
  Matrix<Fp> m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = make_scalar<Fp>(f, data[i][j]);
  return Subspace<Fp>::span(m);
}

// coordinate subspace spanned by e_{w(1)}, ..., e_{w(d)}
Subspace<Fp> torus_fixed_point(const Permutation& w, int d, FieldDesc f) {
  Matrix<Fp> m(d, w.size(), f);
  for (int i = 0; i < d; ++i) m.at(i, w(i + 1) - 1) = m.one();
  return Subspace<Fp>::span(m);
}

int inversions(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

}  // namespace

TEST_CASE("schubert membership") {
  FieldDesc f2 = FieldDesc::prime(2);
  Guards g;

  // the base point lies in every Schubert variety
  for (int n = 3; n <= 5; ++n)
    for (int d = 1; d < n; ++d) {
      GrassContext ctx = GrassContext::type_a(n, d);
      Subspace<Fp> base = standard_subspace<Fp>(n, d, f2);
      for (const Permutation& w : enumerate_minimal_reps(ctx)) CHECK(in_schubert(base, w, ctx));
    }

  // the longest representative cuts nothing out
  GrassContext a42 = GrassContext::type_a(4, 2);
  Permutation longest({3, 4, 1, 2});
  for_each_subspace(4, 2, f2, g, [&](const Subspace<Fp>& v) { CHECK(in_schubert(v, longest, a42)); });

  // the torus-fixed point of the cell of w = [2,4,1,3]: dims against the
  // direct count confirm membership (dims (0,1,1,2) meet targets (0,1,1,2))
  Permutation w({2, 4, 1, 3});
  Subspace<Fp> v24 = span_of({{0, 1, 0, 0}, {0, 0, 0, 1}}, f2);
  std::vector<int> dims = standard_flag_meet_dims(v24);
  for (int j = 1; j <= 4; ++j) CHECK(dims[j] == corner_rank(w, j, 2));
  CHECK(in_schubert(v24, w, a42));
  auto viols = schubert_violations(span_of({{0, 0, 1, 0}, {0, 0, 0, 1}}, f2), w, a42);
  REQUIRE(!viols.empty());
  CHECK(viols[0].j == 2);
  CHECK(viols[0].have == 0);
  CHECK(viols[0].need == 1);

  CHECK_THROWS_AS(in_schubert(span_of({{1, 0, 0, 0}}, f2), w, a42), UsageError);
}

TEST_CASE("cells partition the Grassmannian with sizes 2^length") {
  FieldDesc f2 = FieldDesc::prime(2);
  Guards g;
  for (auto [n, d, total] : std::vector<std::tuple<int, int, int>>{{4, 2, 35}, {5, 2, 155}}) {
    GrassContext ctx = GrassContext::type_a(n, d);
    auto reps = enumerate_minimal_reps(ctx);
    std::map<std::string, int> cell_sizes;
    int points = 0;
    for_each_subspace(n, d, f2, g, [&](const Subspace<Fp>& v) {
      ++points;
      int owners = 0;
      for (const Permutation& w : reps) {
        CHECK(in_cell(torus_fixed_point(w, d, f2), w, ctx));
        if (in_cell(v, w, ctx)) {
          ++owners;
          cell_sizes[w.str()] += 1;
        }
      }
      CHECK(owners == 1);
    });
    CHECK(points == total);
    for (const Permutation& w : reps) CHECK(cell_sizes[w.str()] == 1 << inversions(w));
  }

  // spot check the size multiset for Gr(2,4)
  std::vector<int> sizes;
  GrassContext a42 = GrassContext::type_a(4, 2);
  for (const Permutation& w : enumerate_minimal_reps(a42)) sizes.push_back(1 << inversions(w));
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>({1, 2, 4, 4, 8, 16}));
}

TEST_CASE("flag membership") {
  FieldDesc f2 = FieldDesc::prime(2);
  GrassContext a42 = GrassContext::type_a(4, 2);
  Permutation id4 = Permutation::identity(4);
  FlagShape shape = flag_shape(block_profile(id4, a42));
  CHECK(in_flag_schubert(standard_flag<Fp>(shape, f2), id4, shape));

  // a flag whose middle level leaves the Schubert variety fails
  Permutation w({2, 4, 1, 3});
  FlagShape ws = flag_shape(block_profile(w, a42));
  PartialFlag<Fp> bad;
  bad.shape = ws;
  bad.spaces = {zero_subspace<Fp>(4, f2), span_of({{0, 0, 1, 0}}, f2),
                span_of({{0, 0, 1, 0}, {0, 0, 0, 1}}, f2),
                span_of({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f2), full_space<Fp>(4, f2),
                full_space<Fp>(4, f2)};
  CHECK(!in_flag_schubert(bad, w, ws));
}

TEST_CASE("type C flag membership equals the full-range test") {
  // the one-sided test plus isotropy must agree with testing every level
  FieldDesc f3 = FieldDesc::prime(3);
  GrassContext c2 = GrassContext::symplectic(2);
  SymplecticForm<Fp> form(2, f3);
  Guards g;
  for (const Permutation& w : enumerate_minimal_reps(c2)) {
    BlockProfile p = block_profile(w, c2);
    FlagShape shape = flag_shape(p);
    int l = p.blocks;
    int checked = 0;
    for_each_subspace(4, 2, f3, g, [&](const Subspace<Fp>& v) {
      if (!is_lagrangian(v, form)) return;
      // isotropic flags through v: free chain below, mirrored above
      Subspace<Fp> zero = zero_subspace<Fp>(4, f3);
      for_each_subspace_between(zero, v, shape.q[l - 1 >= 0 ? l - 1 : 0], g,
                                [&](const Subspace<Fp>& below) {
        PartialFlag<Fp> flag;
        flag.shape = shape;
        for (int level : shape.q) {
          if (level == 0)
            flag.spaces.push_back(zero);
          else if (level <= 2)
            flag.spaces.push_back(level == below.dim() ? below : v);
          else
            flag.spaces.push_back(perp(level == 4 - below.dim() ? below : zero, form));
        }
        if (l == 1) {
          flag.spaces.clear();
          for (int level : shape.q)
            flag.spaces.push_back(level == 0   ? zero
                                  : level == 2 ? v
                                               : full_space<Fp>(4, f3));
        }
        ++checked;
        bool one_sided = in_flag_schubert(flag, w, shape, &form);
        bool full = true;
        for (size_t i = 0; i < flag.spaces.size(); ++i) {
          std::vector<int> dims = standard_flag_meet_dims(flag.spaces[i]);
          for (int j = 1; j <= 4; ++j)
            if (dims[j] < corner_rank(w, j, shape.q[i])) full = false;
        }
        for (size_t i = 0; i < flag.spaces.size(); ++i)
          if (perp(flag.spaces[i], form) != flag.spaces[flag.spaces.size() - 1 - i]) full = false;
        CHECK(one_sided == full);
      });
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("greedy completion: worked examples") {
  FieldDesc f2 = FieldDesc::prime(2);
  int n = 4;

  // identity case: U already complete
  Permutation w({2, 4, 1, 3});
  RankTargets t = rank_targets(w, 2);
  Subspace<Fp> u = span_of({{0, 1, 0, 0}, {0, 0, 0, 1}}, f2);
  CHECK(complete_subspace(u, u, 2, t) == u);

  // identity targets pick the first coordinate vectors
  Permutation id4 = Permutation::identity(4);
  CHECK(complete_subspace(zero_subspace<Fp>(n, f2), full_space<Fp>(n, f2), 2,
                          rank_targets(id4, 2)) == standard_subspace<Fp>(n, 2, f2));

  // the pivot-maximal rule: growing span{e2} inside span{e2,e3,e4}
  Subspace<Fp> grown = complete_subspace(span_of({{0, 1, 0, 0}}, f2),
                                         span_of({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f2),
                                         2, t);
  CHECK(grown == span_of({{0, 1, 0, 0}, {0, 0, 0, 1}}, f2));
  CHECK(intersect(grown, standard_subspace<Fp>(n, 2, f2)).dim() >= 1);

  // determinism: identical inputs, identical outputs
  CHECK(grown == complete_subspace(span_of({{0, 1, 0, 0}}, f2),
                                   span_of({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f2), 2, t));

  // infeasible: targets demand a vector the container cannot provide
  CHECK_THROWS_AS(complete_subspace(zero_subspace<Fp>(n, f2), span_of({{0, 0, 0, 1}}, f2), 1,
                                    rank_targets(id4, 1)),
                  CompletionError);
  try {
    complete_subspace(zero_subspace<Fp>(n, f2), span_of({{0, 0, 0, 1}}, f2), 1,
                      rank_targets(id4, 1));
  } catch (const CompletionError& e) {
    CHECK(e.column == 1);
  }
}

TEST_CASE("greedy completion satisfies its postconditions") {
  FieldDesc f2 = FieldDesc::prime(2);
  GrassContext a42 = GrassContext::type_a(4, 2);
  for (const Permutation& w : enumerate_minimal_reps(a42)) {
    RankTargets t = rank_targets(w, 2);
    Subspace<Fp> v =
        complete_subspace(zero_subspace<Fp>(4, f2), full_space<Fp>(4, f2), 2, t);
    CHECK(v.dim() == 2);
    CHECK(in_schubert(v, w, a42));
  }

  // isotropic completion yields Lagrangian members in type C
  FieldDesc f3 = FieldDesc::prime(3);
  GrassContext c2 = GrassContext::symplectic(2);
  SymplecticForm<Fp> form(2, f3);
  for (const Permutation& w : enumerate_minimal_reps(c2)) {
    RankTargets t = rank_targets(w, 2);
    Subspace<Fp> v = complete_subspace(zero_subspace<Fp>(4, f3), full_space<Fp>(4, f3), 2, t, &form);
    CHECK(is_lagrangian(v, form));
    CHECK(in_schubert(v, w, c2));
  }
}

TEST_CASE("descending-tail permutations need only their head targets") {
  FieldDesc f2 = FieldDesc::prime(2);
  Guards g;
  for (int n = 3; n <= 5; ++n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> all;
    do {
      all.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));

    for (int d = 1; d < n; ++d) {
      GrassContext ctx = GrassContext::type_a(n, d);
      std::vector<std::vector<int>> dim_profiles;
      for_each_subspace(n, d, f2, g, [&](const Subspace<Fp>& v) {
        dim_profiles.push_back(standard_flag_meet_dims(v));
      });
      for (const Permutation& w : all) {
        for (int k = 0; k <= d; ++k) {
          bool tail_descends = true;
          for (int i = k + 1; i < n; ++i)
            if (w(i) < w(i + 1)) tail_descends = false;
          if (!tail_descends) continue;
          for (const auto& dims : dim_profiles) {
            bool full_test = true, head_test = true;
            for (int j = 1; j <= n; ++j) {
              if (dims[j] < corner_rank(w, j, d)) full_test = false;
              if (dims[j] < corner_rank(w, j, k)) head_test = false;
            }
            CHECK(full_test == head_test);
          }
        }
      }
    }
  }
}
