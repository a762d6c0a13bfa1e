#pragma once

#include <string>
#include <vector>

namespace incseq {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A named list of pass/fail checks produced by the verification routines.
struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other) {
    for (const Check& c : other.checks) checks.push_back({other.title + ": " + c.name, c.pass, c.detail});
  }
  size_t failures() const {
    size_t n = 0;
    for (const Check& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
  bool ok() const { return failures() == 0; }
};

}  // namespace incseq
