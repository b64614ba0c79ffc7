#include "ck/verify.hpp"

#include <algorithm>
#include <numeric>

namespace ck {

namespace {

// All elements of the type C Weyl group inside S_{2d}: a permutation of
// {1..d} together with a sign choice per letter, completed symmetrically.
std::vector<Permutation> all_type_c_elements(int d) {
  int n = 2 * d;
  std::vector<Permutation> out;
  std::vector<int> base(d);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (int signs = 0; signs < (1 << d); ++signs) {
      std::vector<int> word(n);
      for (int i = 1; i <= d; ++i) {
        int img = (signs >> (i - 1)) & 1 ? n + 1 - base[i - 1] : base[i - 1];
        word[i - 1] = img;
        word[n - i] = n + 1 - img;
      }
      out.emplace_back(word);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

SweepReport verify_identities(int max_n_type_a, int max_d_type_c, int max_n_rank) {
  if (max_n_type_a > 10 || max_d_type_c > 5 || max_n_rank > 6)
    throw ResourceError("identity sweep bounds exceed the guard");
  SweepReport report;
  report.context = "identities nA<=" + std::to_string(max_n_type_a) + " dC<=" +
                   std::to_string(max_d_type_c) + " nRank<=" + std::to_string(max_n_rank);
  auto t0 = std::chrono::steady_clock::now();
  long long ordinal = 0;

  // checkpoint corner-rank evaluations vs the direct count
  for (int n = 2; n <= max_n_type_a; ++n)
    for (int d = 1; d < n; ++d) {
      GrassContext ctx = GrassContext::type_a(n, d);
      for (const Permutation& w : enumerate_minimal_reps(ctx)) {
        BlockProfile p = block_profile(w, ctx);
        for (int i = 1; i <= p.blocks; ++i)
          for (int j = 1; j <= p.blocks; ++j) {
            bool run_ok = corner_rank_at_run(p, i, j) ==
                          corner_rank(w, p.checkpoint[i], p.run_sum[j]);
            bool gap_ok = corner_rank_at_gap(p, i, j) ==
                          corner_rank(w, p.checkpoint[i], d + p.gap_sum[j]);
            report.record(ordinal++, run_ok && gap_ok,
                          "corner rank at checkpoints: w=" + w.str() + " i=" + std::to_string(i) +
                              " j=" + std::to_string(j));
          }
      }
    }

  // type C run/gap and checkpoint pairings
  for (int d = 1; d <= max_d_type_c; ++d) {
    GrassContext ctx = GrassContext::symplectic(d);
    for (const Permutation& w : enumerate_minimal_reps(ctx)) {
      BlockProfile p = block_profile(w, ctx);
      int l = p.blocks, s = p.pairing_offset;
      bool ok = true;
      for (int i = 0; i <= l + 1; ++i) {
        int m = l + s - i;
        if (m < 0 || m > l + 1) continue;
        if (p.checkpoint[i] + p.checkpoint[m] != 2 * d) ok = false;
        if (i <= l && m <= l + 1 && p.run_sum[i] + p.gap_sum[m] != d) ok = false;
      }
      report.record(ordinal++, ok, "type C pairing: w=" + w.str());
    }
  }

  // anti-diagonal symmetry of the corner rank for every group element
  for (int d = 1; d <= max_d_type_c; ++d) {
    int n = 2 * d;
    for (const Permutation& w : all_type_c_elements(d)) {
      bool ok = is_type_c_element(w);
      for (int i = 1; i <= n && ok; ++i)
        for (int j = 1; j <= n && ok; ++j)
          ok = n - (i + j - corner_rank(w, i, j)) == corner_rank(w, n - i, n - j);
      report.record(ordinal++, ok, "anti-diagonal corner-rank symmetry: w=" + w.str());
    }
  }

  // quotient dimension = rank of the square submatrix with corners
  // (b+1, b+1)..(a, a), for strictly upper x over F_2
  FieldDesc f2 = FieldDesc::prime(2);
  Guards g;
  for (int n = 2; n <= max_n_rank; ++n) {
    GrassContext ctx = GrassContext::type_a(n, 1);
    for_each_strictly_upper(ctx, f2, g, [&](const Matrix<Fp>& x) {
      bool ok = true;
      for (int b = 0; b < n && ok; ++b)
        for (int a = b + 1; a <= n && ok; ++a) {
          Subspace<Fp> xe = apply(x, standard_subspace<Fp>(n, a, f2));
          int lhs = quotient_dim(xe, standard_subspace<Fp>(n, b, f2));
          Matrix<Fp> sub(a - b, a - b, f2);
          for (int i = b; i < a; ++i)
            for (int j = b; j < a; ++j) sub.at(i - b, j - b) = x.at(i, j);
          ok = lhs == rank(sub);
        }
      report.record(ordinal++, ok, "quotient vs submatrix rank: x=" + x.str());
    });
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace ck
