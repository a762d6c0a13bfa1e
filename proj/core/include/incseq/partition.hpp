#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incseq/rational.hpp"

namespace incseq {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
Partition normalized(std::vector<int> parts);  // sorts and drops zeros
int weight(const Partition& p);
int length(const Partition& p);
Partition conjugate(const Partition& p);
int odd_parts(const Partition& p);  // f(lambda)

Partition plus_part(const Partition& p);   // (l1, l3, l5, ...)
Partition minus_part(const Partition& p);  // (l2, l4, ...)
Partition doubled(const Partition& p);     // 2 lambda
Partition squared(const Partition& p);     // each part repeated twice

// Two-runner abacus with an even number of beads; runner r holds the bead
// positions congruent to r mod 2.
struct TwoCoreQuotient {
  Partition core;
  Partition q0;
  Partition q1;
};
TwoCoreQuotient two_core_quotient(const Partition& p);
Partition from_core_quotient(const TwoCoreQuotient& cq);
bool has_empty_two_core(const Partition& p);

struct PartitionTools {
  Partition conjugate;
  int f = 0;
  int f_conjugate = 0;
  TwoCoreQuotient core_quotient;
  Partition plus;
  Partition minus;
  Partition doubled;
  Partition squared;
};
PartitionTools partition_tools(const Partition& p);

std::vector<Partition> partitions_of(int n);
// All partitions with weight <= n, by weight then reverse lexicographic order.
std::vector<Partition> partitions_up_to(int n);
// Number of standard Young tableaux, by the hook length formula.
Rational syt_count(const Partition& p);

std::string to_string(const Partition& p);

}  // namespace incseq
