#include <cstdio>
#include <cstring>
#include <string>

#include "CLI11.hpp"
#include "incseq/suites.hpp"

using namespace incseq;

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria, one PASS/FAIL line each"};
  int only = 0, jobs = 1;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--verbose,-v", verbose, "list every failing check");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const Criterion& c : acceptance_criteria()) {
    if (only && c.id != only) continue;
    SuiteRun run;
    std::string error;
    try {
      run = run_suite(c.suite, c.env, jobs);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool in_time = run.seconds <= c.budget_seconds;
    const bool pass = error.empty() && run.report.ok() && !run.report.checks.empty() && in_time;
    all = all && pass;
    std::printf("%s criterion %d: %s [%zu checks, %zu failed, %.2f s of %.0f s]", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), run.report.checks.size(), run.report.failures(), run.seconds, c.budget_seconds);
    if (!error.empty()) std::printf(" error: %s", error.c_str());
    if (!in_time) std::printf(" over the time budget");
    for (const Check& ch : run.report.checks)
      if (!ch.pass) {
        std::printf(" first failure: %s%s%s", ch.name.c_str(), ch.detail.empty() ? "" : " ", ch.detail.c_str());
        break;
      }
    std::printf("\n");
    if (verbose)
      for (const Check& ch : run.report.checks)
        if (!ch.pass) std::printf("    %s %s\n", ch.name.c_str(), ch.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
