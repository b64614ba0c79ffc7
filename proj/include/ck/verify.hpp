#pragma once

#include <chrono>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ck/enumerate.hpp"
#include "ck/orbital.hpp"
#include "ck/sample.hpp"

namespace ck {

// Outcome of one exhaustive sweep. Counts merge associatively across
// workers; the surviving counterexample is the one with the smallest
// ordinal, so partitioned runs aggregate to the identical report.
struct SweepReport {
  std::string context;
  long long points = 0;
  long long agreements = 0;
  long long disagreements = 0;
  long long counterexample_ordinal = -1;
  std::string counterexample;
  double wall_seconds = 0;

  bool pass() const { return disagreements == 0; }

  void record(long long ordinal, bool agree, const std::string& describe) {
    ++points;
    if (agree) {
      ++agreements;
      return;
    }
    ++disagreements;
    if (counterexample_ordinal < 0 || ordinal < counterexample_ordinal) {
      counterexample_ordinal = ordinal;
      counterexample = describe;
    }
  }

  void merge(const SweepReport& o) {
    points += o.points;
    agreements += o.agreements;
    disagreements += o.disagreements;
    if (o.counterexample_ordinal >= 0 &&
        (counterexample_ordinal < 0 || o.counterexample_ordinal < counterexample_ordinal)) {
      counterexample_ordinal = o.counterexample_ordinal;
      counterexample = o.counterexample;
    }
    wall_seconds += o.wall_seconds;
  }
};

namespace detail {

inline std::vector<long long> matrix_key(const Matrix<Fp>& x) {
  std::vector<long long> key;
  key.reserve(static_cast<size_t>(x.rows()) * x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) key.push_back(x.at(i, j).value());
  return key;
}

// All points of the (possibly isotropic) Grassmannian over F_p.
inline std::vector<Subspace<Fp>> grassmannian_points(const GrassContext& ctx, FieldDesc f,
                                                     const Guards& g) {
  std::vector<Subspace<Fp>> out;
  SymplecticForm<Fp> form(ctx.type_c ? ctx.d : 1, f);
  for_each_subspace(ctx.n, ctx.d, f, g, [&](const Subspace<Fp>& v) {
    if (ctx.type_c && !is_lagrangian(v, form)) return;
    out.push_back(v);
  });
  return out;
}

// All flags of the given shape whose level-d space is V and which lie
// in the flag Schubert variety of w. Type C mirrors the lower chain
// through the form, so only the chain below V is free.
inline std::vector<PartialFlag<Fp>> model_flag_candidates(const Subspace<Fp>& v,
                                                          const Permutation& w,
                                                          const BlockProfile& p,
                                                          const Guards& g) {
  const GrassContext& ctx = p.ctx;
  FieldDesc f = v.field();
  FlagShape shape = flag_shape(p);
  int l = p.blocks;
  std::vector<PartialFlag<Fp>> out;
  if (!in_schubert(v, w, ctx)) return out;

  // nested chains below V at levels q[0..l-1] (dims run_sum[0..l-1])
  std::vector<std::vector<Subspace<Fp>>> chains;
  std::vector<Subspace<Fp>> cur(l + 1, v);
  struct Rec {
    static void go(int i, std::vector<Subspace<Fp>>& cur, const BlockProfile& p, const Guards& g,
                   std::vector<std::vector<Subspace<Fp>>>& chains) {
      if (i < 0) {
        chains.push_back(cur);
        return;
      }
      Subspace<Fp> zero = zero_subspace<Fp>(cur[i + 1].ambient_dim(), cur[i + 1].field());
      for_each_subspace_between(zero, cur[i + 1], p.run_sum[i], g, [&](const Subspace<Fp>& wsp) {
        cur[i] = wsp;
        go(i - 1, cur, p, g, chains);
      });
    }
  };
  Rec::go(l - 1, cur, p, g, chains);

  SymplecticForm<Fp> form(ctx.type_c ? ctx.d : 1, f);
  for (const auto& chain : chains) {
    if (!ctx.type_c) {
      // extend upward at levels q[l+1..2l+1]
      std::vector<std::vector<Subspace<Fp>>> ups;
      struct Up {
        static void go(size_t i, std::vector<Subspace<Fp>>& acc, const std::vector<int>& levels,
                       const Subspace<Fp>& top, const Guards& g,
                       std::vector<std::vector<Subspace<Fp>>>& ups) {
          if (i == levels.size()) {
            ups.push_back(acc);
            return;
          }
          Subspace<Fp> base = acc.back();  // copy: the callback grows acc
          for_each_subspace_between(base, top, levels[i], g, [&](const Subspace<Fp>& wsp) {
            acc.push_back(wsp);
            go(i + 1, acc, levels, top, g, ups);
            acc.pop_back();
          });
        }
      };
      std::vector<int> levels(shape.q.begin() + l + 1, shape.q.end());
      std::vector<Subspace<Fp>> acc{chain[l]};
      Up::go(0, acc, levels, full_space<Fp>(ctx.n, f), g, ups);
      for (const auto& up : ups) {
        PartialFlag<Fp> flag;
        flag.shape = shape;
        for (int i = 0; i <= l; ++i) flag.spaces.push_back(chain[i]);
        for (size_t i = 1; i < up.size(); ++i) flag.spaces.push_back(up[i]);
        if (in_flag_schubert(flag, w, shape)) out.push_back(flag);
      }
    } else {
      PartialFlag<Fp> flag;
      flag.shape = shape;
      for (int level : shape.q) {
        if (level <= ctx.d) {
          for (int i = 0; i <= l; ++i)
            if (p.run_sum[i] == level) flag.spaces.push_back(chain[i]);
        } else {
          for (int i = 0; i <= l; ++i)
            if (p.run_sum[i] == ctx.n - level) flag.spaces.push_back(perp(chain[i], form));
        }
      }
      bool nested = true;
      for (size_t i = 0; i + 1 < flag.spaces.size() && nested; ++i)
        nested = flag.spaces[i + 1].contains(flag.spaces[i]);
      if (nested && in_flag_schubert(flag, w, shape, &form)) out.push_back(flag);
    }
  }
  return out;
}

template <class Fn>
void parallel_over(int jobs, size_t count, SweepReport& total, Fn&& body) {
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(count) > 0 ? static_cast<int>(count) : 1);
  std::vector<SweepReport> parts(jobs);
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      for (size_t i = t; i < count; i += jobs) body(i, parts[t]);
    });
  for (auto& th : threads) th.join();
  for (const auto& part : parts) total.merge(part);
}

}  // namespace detail

// Three-way agreement over every cotangent point (V, x) over F_p:
//  (a) the rank-inequality membership test,
//  (b) existence of a model flag over V by exhaustive search,
//  (c) success (with verified output) of the constructive lift when (a).
inline SweepReport verify_theorem_b(const Permutation& w, const GrassContext& ctx, FieldDesc f,
                                    const Guards& g = {}, int jobs = 1) {
  SweepReport report;
  report.context = "theorem-b " + ctx.str() + " w=" + w.str() + " over " + f.str();
  auto t0 = std::chrono::steady_clock::now();
  BlockProfile p = block_profile(w, ctx);
  std::vector<Subspace<Fp>> points = detail::grassmannian_points(ctx, f, g);
  long long fibre_stride = power_capped(f.p, ctx.d * (ctx.n - ctx.d), g.max_fibre_points) + 1;

  detail::parallel_over(jobs, points.size(), report, [&](size_t vi, SweepReport& rep) {
    const Subspace<Fp>& v = points[vi];
    bool v_in = in_schubert(v, w, ctx);
    std::vector<PartialFlag<Fp>> candidates = detail::model_flag_candidates(v, w, p, g);
    auto quiver_pairs = quiver_level_pairs(p);
    long long xi = 0;
    for_each_cotangent_fibre_point(v, ctx, g, [&](const Matrix<Fp>& x) {
      long long ordinal = static_cast<long long>(vi) * fibre_stride + xi++;
      bool a = v_in && conormal_bound_violations(x, p).empty();
      bool b = false;
      for (const auto& flag : candidates) {
        bool ok = true;
        for (auto [upper, lower] : quiver_pairs)
          if (!flag.at_level(lower).contains(apply(x, flag.at_level(upper)))) {
            ok = false;
            break;
          }
        if (ok) {
          b = true;
          break;
        }
      }
      bool c = true;
      if (a) {
        try {
          lift_flag(ConormalPoint<Fp>{v, x}, w, ctx);
        } catch (const ContradictionError&) {
          c = false;
        }
      }
      rep.record(ordinal, a == b && c,
                 "V=" + v.str() + " x=" + x.str() + " equations=" + std::to_string(a) +
                     " flag_exists=" + std::to_string(b) + " lift_ok=" + std::to_string(c));
    });
  });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Set-theoretic fibre-product reconstruction: with S the passing set
// and M its operator image, S must equal {(V, x) cotangent : V in the
// Schubert variety, x in M}.
inline SweepReport verify_geneqn(const Permutation& w, const GrassContext& ctx, FieldDesc f,
                                 const Guards& g = {}, int jobs = 1) {
  SweepReport report;
  report.context = "geneqn " + ctx.str() + " w=" + w.str() + " over " + f.str();
  auto t0 = std::chrono::steady_clock::now();
  BlockProfile p = block_profile(w, ctx);
  std::vector<Subspace<Fp>> points = detail::grassmannian_points(ctx, f, g);
  long long fibre_stride = power_capped(f.p, ctx.d * (ctx.n - ctx.d), g.max_fibre_points) + 1;

  // pass 1: membership set S and operator-image set M
  std::set<std::pair<size_t, std::vector<long long>>> member_set;
  std::set<std::vector<long long>> image_set;
  for (size_t vi = 0; vi < points.size(); ++vi) {
    const Subspace<Fp>& v = points[vi];
    if (!in_schubert(v, w, ctx)) continue;
    for_each_cotangent_fibre_point(v, ctx, g, [&](const Matrix<Fp>& x) {
      if (conormal_bound_violations(x, p).empty()) {
        member_set.emplace(vi, detail::matrix_key(x));
        image_set.insert(detail::matrix_key(x));
      }
    });
  }

  // pass 2: compare against the reconstruction
  detail::parallel_over(jobs, points.size(), report, [&](size_t vi, SweepReport& rep) {
    const Subspace<Fp>& v = points[vi];
    bool v_in = in_schubert(v, w, ctx);
    long long xi = 0;
    for_each_cotangent_fibre_point(v, ctx, g, [&](const Matrix<Fp>& x) {
      long long ordinal = static_cast<long long>(vi) * fibre_stride + xi++;
      std::vector<long long> key = detail::matrix_key(x);
      bool in_s = member_set.count({vi, key}) > 0;
      bool reconstructed = v_in && image_set.count(key) > 0;
      rep.record(ordinal, in_s == reconstructed,
                 "V=" + v.str() + " x=" + x.str() + " member=" + std::to_string(in_s) +
                     " reconstructed=" + std::to_string(reconstructed));
    });
  });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Orbital equivalence: over every strictly upper x (type C: in sp),
// the orbital test must agree with the existence of a Schubert point V
// with (V, x) a passing cotangent point; witnesses are cross-checked.
inline SweepReport verify_orbital(const Permutation& w, const GrassContext& ctx, FieldDesc f,
                                  const Guards& g = {}, int jobs = 1) {
  SweepReport report;
  report.context = "orbital " + ctx.str() + " w=" + w.str() + " over " + f.str();
  auto t0 = std::chrono::steady_clock::now();
  BlockProfile p = block_profile(w, ctx);
  std::vector<Subspace<Fp>> points = detail::grassmannian_points(ctx, f, g);

  std::vector<Matrix<Fp>> uppers;
  for_each_strictly_upper(ctx, f, g, [&](const Matrix<Fp>& x) { uppers.push_back(x); });

  detail::parallel_over(jobs, uppers.size(), report, [&](size_t xi, SweepReport& rep) {
    const Matrix<Fp>& x = uppers[xi];
    bool a = orbital_equations_test(x, w, ctx);
    bool b = false;
    for (const Subspace<Fp>& v : points) {
      if (!is_cotangent_point(v, x, ctx)) continue;
      if (conormal_equations_test(ConormalPoint<Fp>{v, x}, w, ctx)) {
        b = true;
        break;
      }
    }
    bool witness_ok = true;
    if (a) {
      try {
        orbital_witness(x, w, ctx);
      } catch (const ContradictionError&) {
        witness_ok = false;
      }
    }
    rep.record(static_cast<long long>(xi), a == b && witness_ok,
               "x=" + x.str() + " orbital=" + std::to_string(a) +
                   " exists_V=" + std::to_string(b) + " witness_ok=" + std::to_string(witness_ok));
  });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// Exhaustive identity families:
//  - checkpoint evaluations of the corner rank against the direct count
//    (type A, n <= max_n_type_a, every minimal representative),
//  - the type C run/gap and checkpoint pairings (d <= max_d_type_c),
//  - the anti-diagonal corner-rank symmetry for every type C group
//    element (d <= max_d_type_c),
//  - quotient dimension = square-submatrix rank for strictly upper x
//    over F_2 (n <= max_n_rank).
SweepReport verify_identities(int max_n_type_a, int max_d_type_c, int max_n_rank);

}  // namespace ck
