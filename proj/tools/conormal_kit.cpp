// conormal-kit: block profiles, Schubert / conormal / orbital membership
// checks, constructive flag lifts, tableau tools, and exhaustive
// finite-field verification sweeps. JSON on stdout, diagnostics on
// stderr. Exit codes: 0 ok/true, 1 membership false (--strict) or a
// failed sweep, 2 usage error, 3 resource guard, 4 internal
// contradiction (a verified theorem failed at runtime).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ck/json_io.hpp"

using namespace ck;

namespace {

struct CommonOpts {
  long long p = 0;          // 0 = rationals
  std::string field = "";   // "Q" forces rationals
  std::string in_file;      // payload file; default stdin
  bool strict = false;
};

FieldDesc field_of(const CommonOpts& opts) {
  if (opts.field == "Q" || (opts.field.empty() && opts.p == 0)) return FieldDesc::rationals();
  if (!opts.field.empty() && opts.field != "Q")
    throw UsageError("--field accepts only Q; use --p for prime fields");
  return FieldDesc::prime(opts.p);
}

json read_payload(const CommonOpts& opts) {
  std::string text;
  if (!opts.in_file.empty()) {
    std::ifstream in(opts.in_file);
    if (!in) throw UsageError("cannot open input file: " + opts.in_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("payload is not valid JSON: ") + e.what());
  }
}

Guards guards_from_env() {
  Guards g;
  if (const char* env = std::getenv("CONORMAL_KIT_GUARD")) {
    char* end = nullptr;
    long long budget = std::strtoll(env, &end, 10);
    if (end == env || budget <= 0) throw UsageError("CONORMAL_KIT_GUARD must be a positive integer");
    g.max_subspace_points = budget;
    g.max_fibre_points = budget;
  }
  return g;
}

Permutation parse_word(const std::string& csv) {
  std::vector<int> word;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      word.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("cannot parse permutation entry: '" + item + "'");
    }
  }
  return Permutation(word);
}

GrassContext context_from_flags(const std::string& type, int n, int d) {
  if (type == "A") return GrassContext::type_a(n, d);
  if (type == "C") return GrassContext::symplectic(d);
  throw UsageError("--type must be A or C");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_profile(const std::string& type, int n, int d, const std::string& wcsv) {
  GrassContext ctx = context_from_flags(type, n, d);
  Permutation w = parse_word(wcsv);
  BlockProfile p = block_profile(w, ctx);
  json out = profile_to_json(p, flag_shape(p), conormal_directions(w, ctx));
  out["ok"] = true;
  emit(out);
  return 0;
}

template <class K>
int run_check_schubert(const json& payload, FieldDesc f, bool strict) {
  GrassContext ctx = context_from_json(payload.at("ctx"));
  Permutation w = permutation_from_json(payload.at("w"));
  Subspace<K> v = subspace_from_json<K>(payload.at("V"), f);
  auto violations = schubert_violations(v, w, ctx);
  json out{{"ok", true}, {"member", violations.empty()}};
  out["violations"] = json::array();
  for (const auto& viol : violations)
    out["violations"].push_back({{"j", viol.j}, {"have", viol.have}, {"need", viol.need}});
  emit(out);
  return (strict && !violations.empty()) ? 1 : 0;
}

template <class K>
int run_check_conormal(const json& payload, FieldDesc f, bool strict) {
  GrassContext ctx = context_from_json(payload.at("ctx"));
  Permutation w = permutation_from_json(payload.at("w"));
  Subspace<K> v = subspace_from_json<K>(payload.at("V"), f);
  Matrix<K> x = matrix_from_json<K>(payload.at("x"), f);
  json out{{"ok", true}};
  out["failed_inequalities"] = json::array();
  bool cotangent = is_cotangent_point(v, x, ctx);
  out["cotangent"] = cotangent;
  bool member = false;
  if (cotangent) {
    bool schubert_ok = in_schubert(v, w, ctx);
    out["schubert"] = schubert_ok;
    auto violations = conormal_bound_violations(x, block_profile(w, ctx));
    for (const auto& viol : violations)
      out["failed_inequalities"].push_back(
          {{"i", viol.i}, {"j", viol.j}, {"lhs", viol.lhs}, {"rhs", viol.rhs}});
    member = schubert_ok && violations.empty();
  }
  out["member"] = member;
  emit(out);
  return (strict && !member) ? 1 : 0;
}

template <class K>
int run_check_orbital(const json& payload, FieldDesc f, bool strict) {
  GrassContext ctx = context_from_json(payload.at("ctx"));
  Permutation w = permutation_from_json(payload.at("w"));
  Matrix<K> x = matrix_from_json<K>(payload.at("x"), f);
  bool member = orbital_equations_test(x, w, ctx);
  json out{{"ok", true}, {"member", member}};
  out["failed_inequalities"] = json::array();
  if (!(x * x).is_zero()) {
    out["square_zero"] = false;
  } else {
    out["square_zero"] = true;
    for (const auto& viol : conormal_bound_violations(x, block_profile(w, ctx)))
      out["failed_inequalities"].push_back(
          {{"i", viol.i}, {"j", viol.j}, {"lhs", viol.lhs}, {"rhs", viol.rhs}});
  }
  emit(out);
  return (strict && !member) ? 1 : 0;
}

template <class K>
int run_lift_flag(const json& payload, FieldDesc f) {
  GrassContext ctx = context_from_json(payload.at("ctx"));
  Permutation w = permutation_from_json(payload.at("w"));
  Subspace<K> v = subspace_from_json<K>(payload.at("V"), f);
  Matrix<K> x = matrix_from_json<K>(payload.at("x"), f);
  LiftedFlag<K> lifted = lift_flag(ConormalPoint<K>{v, x}, w, ctx);
  json out = flag_to_json(lifted.F);
  out["ok"] = true;
  emit(out);
  return 0;
}

int run_rsk(const std::string& wcsv) {
  StandardTableau t = rsk_insertion_tableau(parse_word(wcsv));
  json out = tableau_to_json(t);
  out["ok"] = true;
  emit(out);
  return 0;
}

int run_jdt(const json& payload, int i, int j) {
  StandardTableau t = tableau_from_json(payload);
  auto [w, v] = two_column_to_permutations(t);
  int k = static_cast<int>(t.rows.size());
  if (k == t.size()) throw UsageError("jdt windows need a tableau with a second column");
  BlockProfile p = block_profile(w, GrassContext::type_a(t.size(), k));
  if (!(0 <= j && j < i && i <= p.blocks))
    throw UsageError("need 0 <= j < i <= " + std::to_string(p.blocks));
  StandardTableau window = rectified_window(t, p.checkpoint[j], p.checkpoint[i]);
  json out = tableau_to_json(window);
  out["ok"] = true;
  out["window"] = {p.checkpoint[j], p.checkpoint[i]};
  emit(out);
  return 0;
}

int run_verify(const std::string& type, int n, int d, long long p, const std::string& wcsv,
               const std::string& suite, int jobs, int id_n, int id_d) {
  GrassContext ctx = context_from_flags(type, n, d);
  if (p == 0) p = ctx.type_c ? 3 : 2;  // characteristic 2 is avoided in type C
  FieldDesc f = FieldDesc::prime(p);
  Guards g = guards_from_env();

  std::vector<Permutation> reps;
  if (!wcsv.empty())
    reps.push_back(parse_word(wcsv));
  else
    reps = enumerate_minimal_reps(ctx);

  std::vector<SweepReport> reports;
  bool want_identities = suite == "identities" || suite == "all";
  if (suite != "identities") {
    for (const Permutation& w : reps) {
      if (suite == "theorem-b" || suite == "all") reports.push_back(verify_theorem_b(w, ctx, f, g, jobs));
      if (suite == "geneqn" || suite == "all") reports.push_back(verify_geneqn(w, ctx, f, g, jobs));
      if (suite == "orbital" || suite == "all") reports.push_back(verify_orbital(w, ctx, f, g, jobs));
    }
  }
  if (want_identities) reports.push_back(verify_identities(id_n, id_d, std::min(id_n, 5)));

  bool pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    arr.push_back(report_to_json(r));
  }
  emit(json{{"ok", true}, {"pass", pass}, {"reports", arr}});
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for Schubert, conormal and orbital varieties"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string type = "A", wcsv, suite = "all";
  int n = 0, d = 0, i = 0, j = 0, jobs = 1, id_n = 8, id_d = 5;
  long long p = 0;

  auto add_field_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", opts.p, "prime field modulus (0 for rationals)");
    cmd->add_option("--field", opts.field, "Q for the rationals");
    cmd->add_option("--in", opts.in_file, "payload file (default: stdin)");
  };

  CLI::App* profile = app.add_subcommand("profile", "block profile, flag shape and fibre directions of w");
  profile->add_option("--type", type, "A or C")->required();
  profile->add_option("--n", n, "ambient dimension (type A)");
  profile->add_option("--d", d, "subspace dimension")->required();
  profile->add_option("--w", wcsv, "one-line notation, comma separated")->required();

  CLI::App* check_schubert = app.add_subcommand("check-schubert", "Schubert membership of V");
  add_field_opts(check_schubert);
  check_schubert->add_flag("--strict", opts.strict, "exit 1 when not a member");

  CLI::App* check_conormal = app.add_subcommand("check-conormal", "conormal membership of (V, x)");
  add_field_opts(check_conormal);
  check_conormal->add_flag("--strict", opts.strict, "exit 1 when not a member");

  CLI::App* check_orbital = app.add_subcommand("check-orbital", "orbital membership of x");
  add_field_opts(check_orbital);
  check_orbital->add_flag("--strict", opts.strict, "exit 1 when not a member");

  CLI::App* lift = app.add_subcommand("lift-flag", "constructive flag lift of a conormal point");
  add_field_opts(lift);

  CLI::App* rsk = app.add_subcommand("rsk", "row-insertion tableau of a permutation");
  rsk->add_option("--w", wcsv, "one-line notation, comma separated")->required();

  CLI::App* jdt = app.add_subcommand("jdt", "rectified window of a two-column tableau");
  jdt->add_option("--i", i, "upper checkpoint index")->required();
  jdt->add_option("--j", j, "lower checkpoint index")->required();
  jdt->add_option("--in", opts.in_file, "payload file (default: stdin)");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive finite-field sweeps");
  verify->add_option("--type", type, "A or C")->required();
  verify->add_option("--n", n, "ambient dimension (type A); identities bound");
  verify->add_option("--d", d, "subspace dimension");
  verify->add_option("--p", p, "prime (default 2 for type A, 3 for type C)");
  verify->add_option("--w", wcsv, "restrict to one representative");
  verify->add_option("--suite", suite, "theorem-b | geneqn | orbital | identities | all");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--identities-n", id_n, "type A bound for the identities suite");
  verify->add_option("--identities-d", id_d, "type C bound for the identities suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(json{{"ok", false}, {"error", {{"kind", "usage"}, {"detail", e.what()}}}});
    return 2;
  }

  try {
    if (profile->parsed()) return run_profile(type, n, d, wcsv);
    if (rsk->parsed()) return run_rsk(wcsv);
    if (jdt->parsed()) return run_jdt(read_payload(opts), i, j);
    if (verify->parsed()) return run_verify(type, n, d, p, wcsv, suite, jobs, id_n, id_d);

    FieldDesc f = field_of(opts);
    json payload = read_payload(opts);
    if (check_schubert->parsed())
      return f.is_rational() ? run_check_schubert<Rat>(payload, f, opts.strict)
                             : run_check_schubert<Fp>(payload, f, opts.strict);
    if (check_conormal->parsed())
      return f.is_rational() ? run_check_conormal<Rat>(payload, f, opts.strict)
                             : run_check_conormal<Fp>(payload, f, opts.strict);
    if (check_orbital->parsed())
      return f.is_rational() ? run_check_orbital<Rat>(payload, f, opts.strict)
                             : run_check_orbital<Fp>(payload, f, opts.strict);
    if (lift->parsed())
      return f.is_rational() ? run_lift_flag<Rat>(payload, f) : run_lift_flag<Fp>(payload, f);
    throw UsageError("no subcommand selected");
  } catch (const ContradictionError& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    emit(json{{"ok", false}, {"error", {{"kind", "contradiction"}, {"detail", e.what()}}}});
    return 4;
  } catch (const ResourceError& e) {
    emit(json{{"ok", false}, {"error", {{"kind", "resource"}, {"detail", e.what()}}}});
    return 3;
  } catch (const UsageError& e) {
    emit(json{{"ok", false}, {"error", {{"kind", "usage"}, {"detail", e.what()}}}});
    return 2;
  } catch (const json::exception& e) {
    emit(json{{"ok", false}, {"error", {{"kind", "usage"}, {"detail", e.what()}}}});
    return 2;
  }
}
