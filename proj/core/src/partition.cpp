#include "incseq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace incseq {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition normalized(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("normalized: negative part");
  return parts;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
int length(const Partition& p) { return static_cast<int>(p.size()); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int cnt = 0;
    for (int v : p)
      if (v >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

int odd_parts(const Partition& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int v) { return v % 2 != 0; }));
}

Partition plus_part(const Partition& p) {
  Partition r;
  for (size_t i = 0; i < p.size(); i += 2) r.push_back(p[i]);
  return r;
}

Partition minus_part(const Partition& p) {
  Partition r;
  for (size_t i = 1; i < p.size(); i += 2) r.push_back(p[i]);
  return r;
}

Partition doubled(const Partition& p) {
  Partition r(p);
  for (auto& v : r) v *= 2;
  return r;
}

Partition squared(const Partition& p) {
  Partition r;
  for (int v : p) {
    r.push_back(v);
    r.push_back(v);
  }
  return r;
}

namespace {

// Beads beta_i = lambda_i + N - i for i = 1..N.
std::vector<int> beads(const Partition& p, int N) {
  std::vector<int> b;
  for (int i = 1; i <= N; ++i) b.push_back((i <= length(p) ? p[static_cast<size_t>(i - 1)] : 0) + N - i);
  return b;
}

Partition from_beads(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int N = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 1; i <= N; ++i) parts.push_back(b[static_cast<size_t>(i - 1)] - (N - i));
  return normalized(parts);
}

// Partition read off a runner from its (descending) bead levels.
Partition runner_partition(std::vector<int> levels) {
  std::sort(levels.begin(), levels.end(), std::greater<>());
  const int n = static_cast<int>(levels.size());
  std::vector<int> parts;
  for (int j = 1; j <= n; ++j) parts.push_back(levels[static_cast<size_t>(j - 1)] - (n - j));
  return normalized(parts);
}

int even_bead_count(int len) { return len % 2 ? len + 1 : len; }

}  // namespace

TwoCoreQuotient two_core_quotient(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("two_core_quotient: not a partition");
  const int N = even_bead_count(length(p));
  std::vector<int> lv[2];
  for (int b : beads(p, N)) lv[b % 2].push_back(b / 2);
  TwoCoreQuotient r;
  r.q0 = runner_partition(lv[0]);
  r.q1 = runner_partition(lv[1]);
  std::vector<int> core_beads;
  for (int rr = 0; rr < 2; ++rr)
    for (int k = 0; k < static_cast<int>(lv[rr].size()); ++k) core_beads.push_back(2 * k + rr);
  r.core = from_beads(core_beads);
  return r;
}

Partition from_core_quotient(const TwoCoreQuotient& cq) {
  int N = even_bead_count(length(cq.core)) + 2 * (std::max(length(cq.q0), length(cq.q1)) + 1);
  std::vector<int> count(2, 0);
  for (int b : beads(cq.core, N)) ++count[static_cast<size_t>(b % 2)];
  std::vector<int> out;
  for (int rr = 0; rr < 2; ++rr) {
    const Partition& q = rr == 0 ? cq.q0 : cq.q1;
    const int n = count[static_cast<size_t>(rr)];
    if (length(q) > n) throw std::invalid_argument("from_core_quotient: runner too short");
    for (int j = 1; j <= n; ++j) {
      int part = j <= length(q) ? q[static_cast<size_t>(j - 1)] : 0;
      out.push_back(2 * (part + n - j) + rr);
    }
  }
  return from_beads(out);
}

bool has_empty_two_core(const Partition& p) { return two_core_quotient(p).core.empty(); }

PartitionTools partition_tools(const Partition& p) {
  PartitionTools t;
  t.conjugate = conjugate(p);
  t.f = odd_parts(p);
  t.f_conjugate = odd_parts(t.conjugate);
  t.core_quotient = two_core_quotient(p);
  t.plus = plus_part(p);
  t.minus = minus_part(p);
  t.doubled = doubled(p);
  t.squared = squared(p);
  return t;
}

namespace {
void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Rational syt_count(const Partition& p) {
  Partition c = conjugate(p);
  Rational hooks(1);
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= Rational(p[i] - j - 1 + c[static_cast<size_t>(j)] - static_cast<int>(i) - 1 + 1);
  return factorial(weight(p)) / hooks;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace incseq
