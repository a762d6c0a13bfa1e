#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "incseq/ensembles.hpp"
#include "incseq/group_integrals.hpp"
#include "incseq/invariants.hpp"
#include "incseq/opuc.hpp"
#include "incseq/rsk.hpp"
#include "incseq/suites.hpp"
#include "incseq/symfunc.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace incseq;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2;

// Malformed input, with a JSON pointer to the offending value.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& path) {
  std::stringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw input_error(std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw input_error(where + ": expected an integer");
  return v.get<int>();
}

Letters as_letters(const json& doc, const std::string& key) {
  Letters W;
  if (!doc.contains(key)) return W;
  const json& a = doc.at(key);
  if (!a.is_array()) throw input_error("/" + key + ": expected an array of integers");
  for (size_t i = 0; i < a.size(); ++i) W.insert(as_int(a[i], "/" + key + "/" + std::to_string(i)));
  return W;
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw input_error(where + ": expected an integer or a rational string like \"-3/4\"");
}

json rows_json(const Bitableau& T) { return T.rows; }

json series_json(const Series& s) {
  json a = json::array();
  for (const Rational& c : s.coeffs()) a.push_back(c.str());
  return a;
}

// ---- table

int cmd_table(const std::string& sym_name, int n_max, int l_max, const std::string& format) {
  const auto sym = parse_symmetry(sym_name);
  if (!sym) {
    std::cerr << "unknown symmetry '" << sym_name << "' (use U, O, S, UU, u, rot)\n";
    return kUsage;
  }
  if (n_max < 0 || l_max < 0) {
    std::cerr << "--n and --l must be non-negative\n";
    return kUsage;
  }
  if (ensemble_size(*sym, n_max) > Rational(5000000)) {
    std::cerr << "resource guard: the " << sym_name << " ensemble at n=" << n_max << " has "
              << ensemble_size(*sym, n_max).str() << " members (limit 5000000)\n";
    return kUsage;
  }
  struct Row {
    int n, l;
    Rational brute, series;
  };
  std::vector<Row> rows;
  auto series_value = [&](int n, int l) {
    return *sym == Symmetry::rot ? f_rot_from_series(n, l) : f_from_series(*sym, n, l);
  };
  if (n_max == 0) {
    rows.push_back({0, l_max, f_count(*sym, 0, l_max), series_value(0, l_max)});
  } else {
    for (int n = 1; n <= n_max; ++n) {
      const std::vector<Rational> brute = f_count_table(*sym, n, l_max);
      for (int l = 1; l <= l_max; ++l) rows.push_back({n, l, brute[static_cast<size_t>(l)], series_value(n, l)});
    }
  }
  bool all = true;
  if (format == "json") {
    json out = json::array();
    for (const Row& r : rows) {
      all = all && r.brute == r.series;
      out.push_back({{"symmetry", sym_name}, {"n", r.n}, {"l", r.l}, {"f_bruteforce", r.brute.str()},
                     {"f_series", r.series.str()}, {"match", r.brute == r.series}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "symmetry,n,l,f_bruteforce,f_series,match\n";
    for (const Row& r : rows) {
      all = all && r.brute == r.series;
      std::cout << sym_name << ',' << r.n << ',' << r.l << ',' << r.brute.str() << ',' << r.series.str() << ','
                << (r.brute == r.series ? "true" : "false") << '\n';
    }
  }
  return all ? kOk : kViolation;
}

// ---- verify

int cmd_verify(const std::string& suite, Envelope env, int jobs, bool timing) {
  const SuiteRun run = run_suite(suite, env, jobs);
  json out;
  out["suite"] = run.suite;
  out["envelope"] = run.envelope;
  out["status"] = run.report.ok() ? "pass" : "fail";
  out["checks"] = run.report.checks.size();
  out["failures"] = run.report.failures();
  json cases = json::array();
  json first = nullptr;
  for (const Check& c : run.report.checks) {
    json j{{"case", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.pass && first.is_null()) first = j;
    cases.push_back(std::move(j));
  }
  out["first_counterexample"] = first;
  out["warnings"] = run.warnings;
  if (timing) out["wall_time_s"] = run.seconds;
  out["cases"] = std::move(cases);
  std::cout << out.dump(2) << "\n";
  for (const std::string& w : run.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << suite << ": " << run.report.checks.size() << " checks, " << run.report.failures() << " failures, "
            << run.seconds << " s\n";
  return run.report.ok() ? kOk : kViolation;
}

// ---- rsk

int cmd_rsk(const std::string& path) {
  const json doc = read_input(path);
  if (!doc.is_object()) throw input_error("/: expected an object with entries, W1, W2");
  WeightedMultiset M;
  if (doc.contains("entries")) {
    const json& e = doc.at("entries");
    if (!e.is_array()) throw input_error("/entries: expected an array of [i, j, multiplicity]");
    for (size_t k = 0; k < e.size(); ++k) {
      const std::string at = "/entries/" + std::to_string(k);
      if (!e[k].is_array() || (e[k].size() != 2 && e[k].size() != 3)) throw input_error(at + ": expected [i, j] or [i, j, multiplicity]");
      const int m = e[k].size() == 3 ? as_int(e[k][2], at + "/2") : 1;
      if (m < 1) throw input_error(at + "/2: multiplicity must be positive");
      M.add(as_int(e[k][0], at + "/0"), as_int(e[k][1], at + "/1"), m);
    }
  }
  const Letters W1 = as_letters(doc, "W1"), W2 = as_letters(doc, "W2");
  if (!is_compatible(M, W1, W2)) throw input_error("/entries: a pair (i, j) with i, j in different sectors repeats");
  const auto [P, Q] = knuth_correspondence(M, W1, W2);
  const Partition shape = P.shape();
  bool round_trip = false;
  try {
    round_trip = knuth_inverse(P, Q, W1, W2) == M;
  } catch (const domain_error&) {
  }
  json out;
  out["P"] = rows_json(P);
  out["Q"] = rows_json(Q);
  out["shape"] = shape;
  // Greene invariants are exhaustive over submultisets; skip them on large inputs.
  double subsets = 1;
  for (const auto& [c, m] : M.entries) subsets *= m + 1;
  if (subsets <= 1e5) {
    json inc = json::array(), dec = json::array();
    for (size_t k = 1; k <= shape.size(); ++k) inc.push_back(greene_increasing(M, W1, W2, static_cast<int>(k)));
    const int cols = shape.empty() ? 0 : shape.front();
    for (int k = 1; k <= cols; ++k) dec.push_back(greene_decreasing(M, W1, W2, k));
    out["greene"] = {{"increasing", inc}, {"decreasing", dec}, {"matches_shape", greene_check(M, W1, W2)}};
  } else {
    out["greene"] = nullptr;
    std::cerr << "warning: greene profile skipped (more than 10^5 submultisets)\n";
  }
  out["round_trip"] = round_trip;
  std::cout << out.dump(2) << "\n";
  return round_trip ? kOk : kViolation;
}

// ---- opuc

int cmd_opuc(int order, int L) {
  if (order < 0 || order > 24 || L < 0 || L > 10) {
    std::cerr << "resource guard: opuc needs 0 <= --order <= 24 and 0 <= --l <= 10\n";
    return kUsage;
  }
  const MomentSequence c = bessel_moments(order, auto_window(L, order));
  const OPUCData d = opuc_build(c, L);
  json out;
  out["weight"] = "exp(t(z+1/z))";
  out["order"] = order;
  json polys = json::array();
  for (int j = 0; j <= d.max_degree(); ++j) {
    json coeffs = json::array();
    for (const Series& s : d.pi[static_cast<size_t>(j)]) coeffs.push_back(series_json(s));
    polys.push_back({{"j", j}, {"coefficients", coeffs}, {"norm", series_json(d.N[static_cast<size_t>(j)])},
                     {"value_at_zero", series_json(d.at_zero(j))}});
  }
  out["polynomials"] = polys;
  const Report r = opuc_identities_check(d, c);
  out["identities"] = {{"checks", r.checks.size()}, {"failures", r.failures()}, {"status", r.ok() ? "pass" : "fail"}};
  std::cout << out.dump(2) << "\n";
  return r.ok() ? kOk : kViolation;
}

// ---- straighten

int cmd_straighten(const std::string& path, int l_flag) {
  const json doc = read_input(path);
  const json* terms = &doc;
  int l = l_flag;
  if (doc.is_object()) {
    if (!doc.contains("terms")) throw input_error("/terms: missing");
    terms = &doc.at("terms");
    if (doc.contains("l")) l = as_int(doc.at("l"), "/l");
  }
  if (l < 1) throw input_error("/l: give l >= 1 in the input or with --l");
  if (!terms->is_array()) throw input_error("/terms: expected an array of {perm, coeff}");
  int n = -1;
  GroupAlgebraElement e;
  for (size_t k = 0; k < terms->size(); ++k) {
    const std::string at = (doc.is_object() ? "/terms/" : "/") + std::to_string(k);
    const json& t = (*terms)[k];
    if (!t.is_object() || !t.contains("perm")) throw input_error(at + ": expected {\"perm\": [...], \"coeff\": ...}");
    const json& pj = t.at("perm");
    if (!pj.is_array()) throw input_error(at + "/perm: expected an array");
    Perm p;
    for (size_t i = 0; i < pj.size(); ++i) p.push_back(as_int(pj[i], at + "/perm/" + std::to_string(i)));
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(static_cast<int>(p.size()))) throw input_error(at + "/perm: not a permutation of 1..n");
    if (n < 0) {
      n = static_cast<int>(p.size());
      e = GroupAlgebraElement(n);
    } else if (static_cast<int>(p.size()) != n) {
      throw input_error(at + "/perm: all permutations must have the same length");
    }
    e.add(p, t.contains("coeff") ? as_rational(t.at("coeff"), at + "/coeff") : Rational(1));
  }
  const GroupAlgebraElement out = straighten_U(e, l);
  json res;
  res["l"] = l;
  json terms_out = json::array();
  bool reduced = true;
  for (const auto& [p, c] : out.terms()) {
    terms_out.push_back({{"perm", p}, {"coeff", c.str()}});
    reduced = reduced && lds(p) <= l;
  }
  res["terms"] = terms_out;
  json cert{{"reduced", reduced}};
  bool same = true;
  try {
    same = T_matrix(out, l) == T_matrix(e, l);
    cert["operator_equal"] = same;
  } catch (const resource_error&) {
    cert["operator_equal"] = nullptr;
    std::cerr << "warning: operator certificate skipped (l^n > 10^5)\n";
  }
  res["certificate"] = cert;
  std::cout << res.dump(2) << "\n";
  return reduced && same ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for increasing subsequences, group integrals and their algebra"};
  app.require_subcommand(1);

  std::string sym = "U", format = "csv";
  int tn = 4, tl = 4;
  auto* table = app.add_subcommand("table", "f_{nl} by brute force and by the series route");
  table->add_option("--sym", sym, "U, O, S, UU, u or rot");
  table->add_option("--n", tn, "largest n");
  table->add_option("--l", tl, "largest l");
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string suite;
  Envelope env;
  int jobs = 1;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run an identity suite and print a JSON report");
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", env.n, "size bound");
  verify->add_option("--l", env.l, "level bound");
  verify->add_option("--vars,--k", env.k, "number of variables");
  verify->add_option("--deg,--D", env.D, "total degree bound");
  verify->add_option("--order", env.order, "series order");
  verify->add_option("--cases", env.cases, "random cases");
  verify->add_option("--seed", env.seed, "seed for random instances");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--timing", timing, "include wall time in the report");

  std::string input;
  auto* rsk = app.add_subcommand("rsk", "generalized Knuth correspondence of a JSON multiset");
  rsk->add_option("--input,-i", input, "JSON file, - for stdin");

  int order = 8, ol = 3;
  auto* opuc = app.add_subcommand("opuc", "orthogonal polynomials of exp(t(z+1/z)) as JSON");
  opuc->add_option("--order", order, "t-order");
  opuc->add_option("--l", ol, "largest degree");

  int sl = 0;
  auto* straighten = app.add_subcommand("straighten", "straighten a group algebra element modulo ker T_l");
  straighten->add_option("--input,-i", input, "JSON file, - for stdin");
  straighten->add_option("--l", sl, "tensor dimension l (if not in the input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table) return cmd_table(sym, tn, tl, format);
    if (*verify) return cmd_verify(suite, env, jobs, timing);
    if (*rsk) return cmd_rsk(input);
    if (*opuc) return cmd_opuc(order, ol);
    if (*straighten) return cmd_straighten(input, sl);
  } catch (const input_error& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const resource_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
