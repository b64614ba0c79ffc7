#pragma once

#include <json.hpp>

#include "ck/blocks.hpp"
#include "ck/flag.hpp"
#include "ck/tableau.hpp"
#include "ck/uw.hpp"
#include "ck/verify.hpp"

namespace ck {

using nlohmann::json;

// Rationals travel as strings "a/b" (plain "a" for integers); prime
// field entries travel as integers.
inline json scalar_to_json(const Rat& x) { return x.str(); }
inline json scalar_to_json(const Fp& x) { return x.value(); }

template <class K>
K scalar_from_json(const json& j, FieldDesc f);

template <>
inline Rat scalar_from_json<Rat>(const json& j, FieldDesc) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw UsageError("expected a rational entry (integer or \"a/b\" string)");
}

template <>
inline Fp scalar_from_json<Fp>(const json& j, FieldDesc f) {
  if (!j.is_number_integer()) throw UsageError("expected an integer entry over a prime field");
  return make_scalar<Fp>(f, j.get<long long>());
}

template <class K>
json matrix_to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class K>
Matrix<K> matrix_from_json(const json& j, FieldDesc f) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Matrix<K> m(rows, cols, f);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j.at(i).size()) != cols) throw UsageError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json<K>(j.at(i).at(c), f);
  }
  return m;
}

template <class K>
json subspace_to_json(const Subspace<K>& v) {
  return json{{"n", v.ambient_dim()}, {"basis", matrix_to_json(v.basis())}};
}

template <class K>
Subspace<K> subspace_from_json(const json& j, FieldDesc f) {
  if (!j.contains("n") || !j.contains("basis")) throw UsageError("subspace needs {n, basis}");
  int n = j.at("n").get<int>();
  json b = j.at("basis");
  if (b.empty()) return zero_subspace<K>(n, f);
  Matrix<K> m = matrix_from_json<K>(b, f);
  if (m.cols() != n) throw UsageError("subspace basis width does not match n");
  return Subspace<K>::span(m);
}

inline json permutation_to_json(const Permutation& w) {
  return json{{"n", w.size()}, {"word", w.word()}};
}

inline Permutation permutation_from_json(const json& j) {
  if (!j.contains("word")) throw UsageError("permutation needs {n, word}");
  auto word = j.at("word").get<std::vector<int>>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(word.size()))
    throw UsageError("permutation word length does not match n");
  return Permutation(word);
}

inline json context_to_json(const GrassContext& ctx) {
  if (ctx.type_c) return json{{"type", "C"}, {"d", ctx.d}};
  return json{{"type", "A"}, {"n", ctx.n}, {"d", ctx.d}};
}

inline GrassContext context_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "A") return GrassContext::type_a(j.at("n").get<int>(), j.at("d").get<int>());
  if (type == "C") return GrassContext::symplectic(j.at("d").get<int>());
  throw UsageError("context type must be \"A\" or \"C\"");
}

inline json tableau_to_json(const StandardTableau& t) { return json{{"rows", t.rows}}; }

inline StandardTableau tableau_from_json(const json& j) {
  StandardTableau t;
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  t.validate();
  return t;
}

inline json profile_to_json(const BlockProfile& p, const FlagShape& shape,
                            const ConormalDirections& dirs) {
  json pairs = json::array();
  for (auto [a, b] : dirs.pairs) pairs.push_back(json::array({a, b}));
  return json{{"l", p.blocks},   {"tprime", p.run_begin}, {"t", p.checkpoint},
              {"r", p.run_sum},  {"c", p.gap_sum},        {"q", shape.q},
              {"uw_pairs", pairs}, {"uw_dim", dirs.dim()}};
}

template <class K>
json flag_to_json(const PartialFlag<K>& flag) {
  json spaces = json::array();
  for (const auto& s : flag.spaces) spaces.push_back(subspace_to_json(s));
  return json{{"q", flag.shape.q}, {"spaces", spaces}};
}

inline json report_to_json(const SweepReport& r) {
  json j{{"context", r.context},
         {"points", r.points},
         {"agreements", r.agreements},
         {"disagreements", r.disagreements},
         {"pass", r.pass()},
         {"wall_seconds", r.wall_seconds}};
  if (r.disagreements > 0) {
    j["counterexample"] = r.counterexample;
    j["counterexample_ordinal"] = r.counterexample_ordinal;
  }
  return j;
}

}  // namespace ck
