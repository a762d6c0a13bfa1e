#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "incseq/report.hpp"

namespace incseq {

// Envelope of a suite run. Negative entries mean "use the suite default".
struct Envelope {
  int n = -1;      // size bound (n, vars or sequence length, per suite)
  int l = -1;      // level bound
  int k = -1;      // number of variables
  int D = -1;      // total degree bound
  int order = -1;  // t-order of series
  int cases = -1;  // random cases
  std::uint64_t seed = 7;
};

struct SuiteTask {
  std::string key;
  std::function<Report()> run;
};

struct SuiteRun {
  std::string suite;
  std::map<std::string, long long> envelope;  // effective values
  Report report;
  std::vector<std::string> warnings;
  double seconds = 0;
};

// schur, opuc, rsk, straighten, pfaffian, integrals, szego, diagonal, rotation,
// tails. The last two sit outside the eight core suites.
const std::vector<std::string>& suite_names();

// Tasks of a suite with the defaults filled in. Throws usage_error for an
// unknown suite or an envelope outside the resource guards.
std::vector<SuiteTask> suite_tasks(const std::string& suite, Envelope& env);

// Runs the tasks on up to `jobs` threads; results are merged in task order.
Report run_tasks(const std::vector<SuiteTask>& tasks, int jobs);

SuiteRun run_suite(const std::string& suite, Envelope env, int jobs = 1);

// The nine acceptance criteria at their stated envelopes.
struct Criterion {
  int id;
  std::string title;
  std::string suite;
  Envelope env;
  double budget_seconds;
};
const std::vector<Criterion>& acceptance_criteria();

}  // namespace incseq
