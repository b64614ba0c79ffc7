#include <doctest.h>

#include "ck/json_io.hpp"

using namespace ck;

TEST_CASE("scalar round trips") {
  FieldDesc q = FieldDesc::rationals();
  CHECK(scalar_to_json(Rat(3, 6)) == json("1/2"));
  CHECK(scalar_to_json(Rat(-4)) == json("-4"));
  CHECK(scalar_from_json<Rat>(json("7/3"), q) == Rat(7, 3));
  CHECK(scalar_from_json<Rat>(json(5), q) == Rat(5));
  CHECK_THROWS_AS(scalar_from_json<Rat>(json("x"), q), UsageError);

  FieldDesc f5 = FieldDesc::prime(5);
  CHECK(scalar_to_json(Fp(7, 5)) == json(2));
  CHECK(scalar_from_json<Fp>(json(-1), f5) == Fp(4, 5));
  CHECK_THROWS_AS(scalar_from_json<Fp>(json("1/2"), f5), UsageError);
}

TEST_CASE("matrix and subspace round trips") {
  FieldDesc q = FieldDesc::rationals();
  Matrix<Rat> m(2, 3, q);
  m.at(0, 0) = Rat(1, 2);
  m.at(1, 2) = Rat(-3);
  CHECK(matrix_from_json<Rat>(matrix_to_json(m), q) == m);

  Subspace<Rat> v = Subspace<Rat>::span(m);
  json jv = subspace_to_json(v);
  CHECK(jv.at("n") == 3);
  CHECK(subspace_from_json<Rat>(jv, q) == v);

  // a zero subspace keeps its ambient dimension
  Subspace<Rat> z = zero_subspace<Rat>(4, q);
  CHECK(subspace_from_json<Rat>(subspace_to_json(z), q) == z);

  FieldDesc f3 = FieldDesc::prime(3);
  Matrix<Fp> mf(2, 2, f3);
  mf.at(0, 1) = Fp(2, 3);
  CHECK(matrix_from_json<Fp>(matrix_to_json(mf), f3) == mf);

  CHECK_THROWS_AS(matrix_from_json<Rat>(json::parse("[[1],[1,2]]"), q), UsageError);
}

TEST_CASE("permutation, context and tableau round trips") {
  Permutation w({2, 4, 1, 3});
  CHECK(permutation_from_json(permutation_to_json(w)) == w);
  CHECK_THROWS_AS(permutation_from_json(json::parse(R"({"n":3,"word":[1,2]})")), UsageError);
  CHECK_THROWS_AS(permutation_from_json(json::parse(R"({"n":2,"word":[1,1]})")), UsageError);

  GrassContext a = GrassContext::type_a(5, 2);
  GrassContext c = GrassContext::symplectic(3);
  GrassContext a2 = context_from_json(context_to_json(a));
  GrassContext c2 = context_from_json(context_to_json(c));
  CHECK((a2.type_c == a.type_c && a2.n == a.n && a2.d == a.d));
  CHECK((c2.type_c == c.type_c && c2.n == c.n && c2.d == c.d));

  StandardTableau t;
  t.rows = {{1, 3}, {2, 4}};
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":[[2,1]]})")), UsageError);
}

TEST_CASE("profile and report serialization carry the documented keys") {
  GrassContext ctx = GrassContext::type_a(4, 2);
  Permutation w({2, 4, 1, 3});
  BlockProfile p = block_profile(w, ctx);
  json j = profile_to_json(p, flag_shape(p), conormal_directions(w, ctx));
  CHECK(j.at("l") == 2);
  CHECK(j.at("tprime") == json::parse("[1,3]"));
  CHECK(j.at("t") == json::parse("[0,2,4,4]"));
  CHECK(j.at("r") == json::parse("[0,1,2]"));
  CHECK(j.at("c") == json::parse("[0,1,2,2]"));
  CHECK(j.at("q") == json::parse("[0,1,2,3,4,4]"));
  CHECK(j.at("uw_pairs") == json::parse("[[1,4]]"));
  CHECK(j.at("uw_dim") == 1);

  SweepReport r;
  r.context = "demo";
  r.record(0, true, "");
  json jr = report_to_json(r);
  CHECK(jr.at("points") == 1);
  CHECK(jr.at("pass") == true);
  r.record(5, false, "bad");
  jr = report_to_json(r);
  CHECK(jr.at("pass") == false);
  CHECK(jr.at("counterexample") == "bad");
}
