#include "incseq/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "incseq/ensembles.hpp"
#include "incseq/group_integrals.hpp"
#include "incseq/invariants.hpp"
#include "incseq/opuc.hpp"
#include "incseq/pfaffian_checks.hpp"
#include "incseq/rsk.hpp"
#include "incseq/symfunc.hpp"

namespace incseq {

namespace {

std::string at(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

int pick(int v, int dflt) { return v < 0 ? dflt : v; }

void guard(bool ok, const std::string& what) {
  if (!ok) throw usage_error("envelope outside the resource guard: " + what);
}

const std::vector<Symmetry> kFive{Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u};

std::vector<SuiteTask> integrals_tasks(Envelope& e) {
  e.n = pick(e.n, 5);
  e.l = pick(e.l, 4);
  guard(e.n <= 7 && e.l <= 8, "integrals needs n <= 7, l <= 8");
  std::vector<SuiteTask> t;
  const int N = e.n, L = e.l;
  for (Symmetry s : kFive)
    for (int n = 0; n <= N; ++n)
      t.push_back({"f " + to_string(s) + " " + at({{"n", n}}), [s, n, L] {
                     Report r{"moments " + to_string(s) + " " + at({{"n", n}}), {}};
                     const std::vector<Rational> brute = f_count_table(s, n, L);
                     for (int l = 0; l <= L; ++l) {
                       const Rational series = f_from_series(s, n, l);
                       r.add("brute force = series at " + at({{"l", l}}), brute[static_cast<size_t>(l)] == series,
                             brute[static_cast<size_t>(l)].str() + " vs " + series.str());
                     }
                     return r;
                   }});
  for (Symmetry s : kFive)
    t.push_back({"P " + to_string(s), [s, L] {
                   Report r{"Poisson " + to_string(s), {}};
                   for (int l = 0; l <= L; ++l)
                     r.add("D-series formula = group integral at " + at({{"l", l}}),
                           P_series(s, l, 10) == P_series_integral(s, l, 10));
                   return r;
                 }});
  t.push_back({"convolutions", [N, L] {
                 Report r{"convolutions", {}};
                 for (int n = 0; n <= N; ++n)
                   for (int l = 0; l <= L; ++l)
                     r.add("UU and u from U at " + at({{"n", n}, {"l", l}}), convolution_identities_check(n, l));
                 if (N >= 3 && L >= 2) {
                   const Rational v = f_count(Symmetry::U, 3, 2);
                   r.add("U n=3 l=2 is 5 on both routes", v == Rational(5) && f_from_series(Symmetry::U, 3, 2) == v);
                 }
                 return r;
               }});
  return t;
}

std::vector<SuiteTask> diagonal_tasks(Envelope& e) {
  e.n = pick(e.n, 6);
  e.l = pick(e.l, 4);
  guard(e.n <= 7 && e.l <= 6, "diagonal needs n <= 7, l <= 6");
  std::vector<SuiteTask> t;
  const int N = e.n;
  for (ExtendedSymmetry s : {ExtendedSymmetry::O, ExtendedSymmetry::S, ExtendedSymmetry::u})
    for (int l = 0; l <= e.l; ++l)
      t.push_back({"ftilde " + to_string(s) + " " + at({{"l", l}}), [s, l, N] {
                     Report r{"diagonal " + to_string(s) + " " + at({{"l", l}}), {}};
                     const AlphaLayout L = AlphaLayout::make(N, N);
                     const MultiPoly G = ftilde_generating(s, l, L);
                     for (int n = 0; n <= N; ++n) {
                       const FtildeTable tab = ftilde_table(s, n, l);
                       for (int a = 0; a <= n; ++a)
                         for (int b = 0; a + b <= n; ++b) {
                           if (s != ExtendedSymmetry::u && b > 0) break;
                           const Rational brute = tab[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(l)];
                           // S weights its diagonal points by beta.
                           const Rational series = s == ExtendedSymmetry::S ? ftilde_from_series(G, L, n, 0, a)
                                                                            : ftilde_from_series(G, L, n, a, b);
                           r.add("coefficient = count at " + at({{"n", n}, {"m", a}, {"m2", b}}), brute == series,
                                 brute.str() + " vs " + series.str());
                         }
                     }
                     return r;
                   }});
  if (N >= 3 && e.l >= 2)
    t.push_back({"ftilde spot", [] {
                   Report r{"diagonal spot value", {}};
                   const AlphaLayout L = AlphaLayout::make(3, 3);
                   const Rational v = ftilde_from_series(ftilde_generating(ExtendedSymmetry::O, 2, L), L, 3, 1, 0);
                   r.add("O n=3 m=1 l=2 is 3", v == Rational(3) && ftilde_count(ExtendedSymmetry::O, 3, 1, 2) == v,
                         v.str());
                   return r;
                 }});
  const int lp = std::min(e.l, 4);
  t.push_back({"alpha routes", [lp] {
                 Report r = p_alpha_routes_check(lp, 6, 6);
                 return r;
               }});
  return t;
}

std::vector<SuiteTask> schur_tasks(Envelope& e) {
  e.l = pick(e.l, 3);
  e.k = pick(e.k, 4);
  e.D = pick(e.D, 8);
  e.order = pick(e.order, 3);  // degree bound in alpha and in beta
  guard(e.k >= 2 && e.k <= 8 && e.D <= 10 && e.l <= 5 && e.order <= 6, "schur needs 2 <= k <= 8, D <= 10, l <= 5");
  std::vector<SuiteTask> t;
  IdentityContext ctx;
  ctx.k = e.k;
  ctx.D = e.D;
  ctx.ab_bound = e.order;
  for (const std::string& tag : identity_tags())
    for (int l = 0; l <= e.l; ++l)
      t.push_back({tag + " " + at({{"l", l}}), [tag, l, ctx] {
                     if (ctx.D < 1) {
                       Report r{tag + " " + at({{"l", l}}), {}};
                       r.add("empty envelope", true, "degree 0: nothing to compare");
                       return r;
                     }
                     IdentityResult res = verify_identity(tag, l, ctx);
                     res.report.title = tag + " " + at({{"l", l}});
                     return res.report;
                   }});
  return t;
}

std::vector<SuiteTask> opuc_tasks(Envelope& e) {
  e.l = pick(e.l, 5);
  e.order = pick(e.order, 16);
  guard(e.l <= 8 && e.order <= 24, "opuc needs l <= 8, order <= 24");
  const int L = e.l, N = e.order;
  std::vector<SuiteTask> t;
  t.push_back({"identities", [L, N] {
                 const MomentSequence c = bessel_moments(N, auto_window(2 * L + 2, N));
                 Report r = opuc_identities_check(opuc_build(c, 2 * L + 2), c);
                 r.title = "opuc identities";
                 return r;
               }});
  t.push_back({"products", [L, N] { return verify_products(exp_tz(N, auto_window(2 * L + 2, N)), L, N); }});
  t.push_back({"d-series", [L, N] { return d_series_products_check(L, N); }});
  t.push_back({"half-line", [L, N] { return halfline_relations_check(bessel_moments(N, auto_window(2 * L + 2, N)), L); }});
  t.push_back({"alpha", [L, N] { return alpha_formula_check(exp_tz(N, auto_window(2 * L + 2, N)), L, N); }});
  t.push_back({"alpha-beta", [L, N] { return unitary_alpha_beta_check(exp_tz(N, auto_window(2 * L + 2, N)), L, N); }});
  return t;
}

std::vector<SuiteTask> rsk_tasks(Envelope& e) {
  e.n = pick(e.n, 3);
  e.cases = pick(e.cases, 5);  // total multiplicity bound of the exhaustive part
  e.k = pick(e.k, 3);          // letters per model sequence
  e.l = pick(e.l, 2);
  e.D = pick(e.D, 6);
  guard(e.n <= 4 && e.cases <= 6 && e.k <= 4 && e.D <= 8 && e.l <= 4, "rsk needs n <= 4, size <= 6, vars <= 4, D <= 8");
  std::vector<SuiteTask> t;
  const int n = e.n, size = e.cases, vars = e.k, l = e.l, D = e.D;
  t.push_back({"exhaustive", [n, size] {
                 RskSuiteResult r = rsk_exhaustive_suite(n, size);
                 r.report.add("compatible multisets visited", r.multisets > 0, std::to_string(r.multisets));
                 return r.report;
               }});
  t.push_back({"models", [vars, l, D] { return poisson_models_suite(vars, l, D); }});
  const int Dc = std::min(D, 5);
  for (const std::string& p : equidistribution_pairs())
    t.push_back({"equidistribution " + p, [p, l, Dc] {
                   Report r{"equidistribution " + p, {}};
                   for (const auto& [nq, nr] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}})
                     r.merge(equidistribution_check(p, nq, nr, l, Dc));
                   return r;
                 }});
  return t;
}

std::vector<SuiteTask> straighten_tasks(Envelope& e) {
  e.n = pick(e.n, 5);
  e.l = pick(e.l, 3);
  e.k = pick(e.k, 3);      // n bound for the involution families
  e.order = pick(e.order, 2);  // l bound for the involution families
  guard(e.n <= 6 && e.l <= 4 && e.k <= 3 && e.order <= 3, "straighten needs n <= 6, l <= 4, involution n <= 3, l <= 3");
  std::vector<SuiteTask> t;
  const int nU = e.n, lU = e.l;
  t.push_back({"U", [nU, lU] { return straightening_suite(nU, lU, 0, 0); }});
  for (int n = 1; n <= e.k; ++n)
    for (int l = 1; l <= e.order; ++l) t.push_back({"O/Sp " + at({{"n", n}, {"l", l}}), [n, l] { return orth_symp_check(n, l); }});
  if (nU >= 4 && lU >= 2)
    t.push_back({"spot", [] {
                   Report r{"straightening spot value", {}};
                   const BasisCertificate c = basis_U(4, 2);
                   r.add("n=4 l=2 basis has 14 elements of rank 14", c.basis.size() == 14 && c.rank == 14 && c.ok());
                   return r;
                 }});
  return t;
}

std::vector<SuiteTask> pfaffian_tasks(Envelope& e) {
  e.cases = pick(e.cases, 100);
  e.n = pick(e.n, 4);
  e.l = pick(e.l, 3);
  e.D = pick(e.D, 4);
  guard(e.cases <= 10000 && e.n <= 5 && e.l <= 4 && e.D <= 8, "pfaffian needs n <= 5, l <= 4, D <= 8");
  std::vector<SuiteTask> t;
  const int cases = e.cases, nmax = e.n, lmax = e.l, D = e.D;
  const std::uint64_t seed = e.seed;
  t.push_back({"de Bruijn", [=] {
                 Report r{"de Bruijn", {}};
                 for (int i = 0; i < cases; ++i) {
                   const int n = 1 + i % std::max(nmax, 1);
                   const int pts = 2 + (i / std::max(nmax, 1)) % 3;
                   const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(i);
                   const IdentitySides sides = de_bruijn_sides(random_de_bruijn_instance(s, n, pts));
                   r.add("instance " + at({{"case", i}, {"n", n}, {"points", pts}}), sides.equal(),
                         sides.lhs.str() + " vs " + sides.rhs.str());
                 }
                 return r;
               }});
  t.push_back({"Gordon", [=] {
                 Report r{"Gordon", {}};
                 for (int l = 1; l <= lmax; ++l)
                   for (int i = 0; i < 5; ++i) {
                     const GordonReport g = gordon_identity_check(random_odd_table(seed * 7919ULL + static_cast<std::uint64_t>(10 * l + i), 4 * l + 4), l);
                     r.add("even " + at({{"l", l}, {"case", i}}), g.even_ok);
                     r.add("odd " + at({{"l", l}, {"case", i}}), g.odd_ok);
                   }
                 return r;
               }});
  t.push_back({"alpha pfaffian", [D] {
                 Grading g;
                 g.set_bound(0, D);
                 g.assign(4, 1);
                 const Alphabet A({0, 1, 2, 3}, {}, g, D);
                 PfaffianRoute route = pfaffian_route_O(2, A, 4);
                 route.report.title = "alpha-weighted pfaffian " + at({{"l", 2}, {"D", D}});
                 return route.report;
               }});
  t.push_back({"pair lemma", [lmax] {
                 Report r{"pair-value lemma", {}};
                 for (int l = 1; l <= lmax; ++l) r.merge(pair_lemma_check(l, 7));
                 return r;
               }});
  return t;
}

std::vector<SuiteTask> szego_tasks(Envelope& e) {
  e.l = pick(e.l, 6);
  guard(e.l <= 10, "szego needs l <= 10");
  std::vector<SuiteTask> t;
  for (DKind k : {DKind::D, DKind::pp, DKind::pm, DKind::mp, DKind::mm})
    for (int l = 0; l <= e.l; ++l)
      t.push_back({to_string(k) + " " + at({{"l", l}}), [k, l] {
                     Report r{"Szego " + to_string(k) + " " + at({{"l", l}}), {}};
                     const SzegoReport s = formal_szego_check(k, l, 2 * l + 4);
                     r.add("agrees with the limit through degree 2l", s.agree,
                           "first difference at degree " + std::to_string(s.first_disagreement));
                     r.add("coefficientwise monotone", s.monotone);
                     return r;
                   }});
  return t;
}

std::vector<SuiteTask> tails_tasks(Envelope& e) {
  e.l = pick(e.l, 5);
  e.order = pick(e.order, 16);
  guard(e.l <= 8 && e.order <= 24, "tails needs l <= 8, order <= 24");
  const int L = e.l, N = e.order;
  return {{"tails", [L, N] { return szego_tail_check(L, N); }}};
}

std::vector<SuiteTask> rotation_tasks(Envelope& e) {
  e.n = pick(e.n, 2);
  e.l = pick(e.l, 4);
  guard(e.n <= 3 && e.l <= 6, "rotation needs n <= 3, l <= 6");
  std::vector<SuiteTask> t;
  const int N = e.n, Lmax = e.l;
  t.push_back({"counts", [N, Lmax] {
                 Report r{"rotation counts", {}};
                 for (int n = 0; n <= N; ++n)
                   for (int L = 0; L <= Lmax; ++L) {
                     const Rational a = f_rot_from_series(n, L), b = f_count(Symmetry::rot, n, L);
                     r.add("block determinant = count at " + at({{"n", n}, {"l", L}}), a == b, a.str() + " vs " + b.str());
                   }
                 return r;
               }});
  t.push_back({"vanishing", [Lmax] {
                 Report r{"rotation vanishing", {}};
                 for (int L = 0; L <= Lmax; ++L)
                   for (int n = L * L + 1; n <= L * L + 2; ++n)
                     r.add("zero beyond l^2 at " + at({{"n", n}, {"l", L}}), f_rot_from_series(n, L).is_zero());
                 return r;
               }});
  t.push_back({"lis law", [N, Lmax] {
                 Report r{"rotation lis law", {}};
                 for (int n = 0; n <= std::max(N, 3); ++n)
                   for (int L = 0; L <= Lmax; ++L)
                     r.add("count identity at " + at({{"n", n}, {"l", L}}), rotation_count_property(n, L));
                 return r;
               }});
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schur",    "opuc",  "rsk",      "straighten", "pfaffian",
                                              "integrals", "szego", "diagonal", "rotation", "tails"};
  return names;
}

std::vector<SuiteTask> suite_tasks(const std::string& suite, Envelope& env) {
  if (suite == "integrals") return integrals_tasks(env);
  if (suite == "diagonal") return diagonal_tasks(env);
  if (suite == "schur") return schur_tasks(env);
  if (suite == "opuc") return opuc_tasks(env);
  if (suite == "rsk") return rsk_tasks(env);
  if (suite == "straighten") return straighten_tasks(env);
  if (suite == "pfaffian") return pfaffian_tasks(env);
  if (suite == "szego") return szego_tasks(env);
  if (suite == "rotation") return rotation_tasks(env);
  if (suite == "tails") return tails_tasks(env);
  throw usage_error("unknown suite: " + suite);
}

Report run_tasks(const std::vector<SuiteTask>& tasks, int jobs) {
  std::vector<Report> out(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = tasks[i].run();
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  const size_t workers = std::clamp<size_t>(static_cast<size_t>(std::max(jobs, 1)), 1, std::max<size_t>(tasks.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Report total;
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!errors[i].empty()) {
      total.add(tasks[i].key + ": raised", false, errors[i]);
      continue;
    }
    if (out[i].title.empty()) out[i].title = tasks[i].key;
    total.merge(out[i]);
  }
  return total;
}

SuiteRun run_suite(const std::string& suite, Envelope env, int jobs) {
  SuiteRun run;
  run.suite = suite;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SuiteTask> tasks = suite_tasks(suite, env);
  run.report = run_tasks(tasks, jobs);
  run.report.title = suite;
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& [k, v] : std::initializer_list<std::pair<const char*, int>>{
           {"n", env.n}, {"l", env.l}, {"k", env.k}, {"D", env.D}, {"order", env.order}, {"cases", env.cases}})
    if (v >= 0) run.envelope[k] = v;
  run.envelope["seed"] = static_cast<long long>(env.seed);
  if (run.report.checks.empty()) run.warnings.push_back("empty envelope: no cases compared");
  if (env.D == 0) run.warnings.push_back("degree bound 0: comparisons are vacuous");
  return run;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> c = [] {
    std::vector<Criterion> v;
    Envelope e;
    v.push_back({1, "moment-count identity, n <= 5, l <= 4", "integrals", e, 120});
    v.push_back({2, "diagonal-points identity, n <= 6, l <= 4", "diagonal", e, 120});
    v.push_back({3, "Schur identity suite, l <= 3, k = 4, D <= 8", "schur", e, 300});
    v.push_back({4, "OPUC suite, order 16, l <= 5", "opuc", e, 120});
    v.push_back({5, "RSK suite", "rsk", e, 600});
    v.push_back({6, "straightening suite", "straighten", e, 300});
    v.push_back({7, "pfaffian suite", "pfaffian", e, 60});
    v.push_back({8, "formal Szego, l <= 6", "szego", e, 30});
    v.push_back({9, "rotation ensemble, n <= 2, l <= 4", "rotation", e, 60});
    return v;
  }();
  return c;
}

}  // namespace incseq
