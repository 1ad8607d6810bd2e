#pragma once

#include <vector>

#include "rankability/digraph.hpp"

namespace rankability {

struct SearchOptions {
  int max_n = 12;
  double time_budget_seconds = 0.0;  // 0 disables the deadline
  bool collect_minimizers = false;
  int threads = 1;
};

// k is the minimum number of single-edge edits (additions plus removals)
// turning the graph into the dominance graph of some vertex ordering; p is
// the number of orderings attaining that minimum.
struct KPResult {
  long long k = 0;
  long long p = 0;
  std::vector<VertexOrdering> minimizers;  // sorted; filled only on request
};

// Edits needed to make g the dominance graph of the given ordering: one per
// missing forward edge plus one per present backward edge.
long long ordering_cost(const Digraph& g, const VertexOrdering& order);

// Reference implementation enumerating all n! orderings; n <= 9.
KPResult compute_kp_bruteforce(const Digraph& g, bool collect_minimizers = false);

// Branch-and-bound over ranking prefixes. Exact: same k and p as the
// brute-force route.
KPResult compute_kp(const Digraph& g, const SearchOptions& opts = {});

// 1 - k*p / (k_max * p_max) with k_max = n(n-1)/2 and p_max = n!.
double edge_rankability_from(int n, const KPResult& kp);
double edge_rankability(const Digraph& g, const SearchOptions& opts = {});

// Closed form for the n-cycle, n >= 3.
double edge_rankability_cycle(int n);

}  // namespace rankability
