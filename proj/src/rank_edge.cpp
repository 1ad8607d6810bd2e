#include "rankability/rank_edge.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <numeric>
#include <thread>

#include "rankability/error.hpp"

namespace rankability {

namespace {

double factorial_as_double(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// Per-vertex subset sums so extending a ranking prefix costs O(1).
// cost_above_mask[v][mask] counts edits charged when v is ranked above every
// vertex in mask; unresolved_mask[v][mask] counts pairs {v, w} that are a
// draw or a contradiction and so cost at least one edit either way up.
struct PairTables {
  int n = 0;
  long long total_unresolved = 0;
  std::vector<long long> cost_above_mask;
  std::vector<long long> unresolved_mask;

  explicit PairTables(const Digraph& g) : n(g.n()) {
    std::vector<int> cost_above(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> unresolved(static_cast<std::size_t>(n) * n, 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        if (v == w) continue;
        cost_above[static_cast<std::size_t>(v) * n + w] =
            (g.edge(v, w) ? 0 : 1) + (g.edge(w, v) ? 1 : 0);
        unresolved[static_cast<std::size_t>(v) * n + w] = g.edge(v, w) == g.edge(w, v) ? 1 : 0;
      }
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        total_unresolved += unresolved[static_cast<std::size_t>(v) * n + w];

    std::size_t full = std::size_t{1} << n;
    cost_above_mask.assign(static_cast<std::size_t>(n) << n, 0);
    unresolved_mask.assign(static_cast<std::size_t>(n) << n, 0);
    for (int v = 0; v < n; ++v) {
      long long* cm = &cost_above_mask[static_cast<std::size_t>(v) << n];
      long long* um = &unresolved_mask[static_cast<std::size_t>(v) << n];
      for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t low = mask & (~mask + 1);
        int w = std::countr_zero(mask);
        cm[mask] = cm[mask ^ low] + cost_above[static_cast<std::size_t>(v) * n + w];
        um[mask] = um[mask ^ low] + unresolved[static_cast<std::size_t>(v) * n + w];
      }
    }
  }

  long long cost_above(int v, std::size_t mask) const {
    return cost_above_mask[(static_cast<std::size_t>(v) << n) | mask];
  }
  long long unresolved(int v, std::size_t mask) const {
    return unresolved_mask[(static_cast<std::size_t>(v) << n) | mask];
  }
};

// One worker per first-position vertex; workers share only the incumbent
// and the abort flag, so merging their results is deterministic.
struct Worker {
  const PairTables* tables = nullptr;
  std::atomic<long long>* incumbent = nullptr;
  std::atomic<bool>* aborted = nullptr;
  std::chrono::steady_clock::time_point deadline{};
  bool has_deadline = false;
  bool collect = false;

  long long best = LLONG_MAX;
  long long count = 0;
  std::vector<VertexOrdering> minimizers;
  VertexOrdering order;
  std::uint64_t visited = 0;

  void run(int v0) {
    int n = tables->n;
    order.assign(n, 0);
    std::size_t full = (std::size_t{1} << n) - 1;
    std::size_t rest = full & ~(std::size_t{1} << v0);
    long long committed = tables->cost_above(v0, rest);
    long long pending = tables->total_unresolved - tables->unresolved(v0, rest);
    if (committed + pending > incumbent->load(std::memory_order_relaxed)) return;
    order[0] = v0;
    dfs(rest, committed, pending, 1);
  }

  void dfs(std::size_t unused, long long committed, long long pending, int depth) {
    if (depth == tables->n) {
      long long cur = incumbent->load(std::memory_order_relaxed);
      while (committed < cur &&
             !incumbent->compare_exchange_weak(cur, committed, std::memory_order_relaxed)) {
      }
      if (committed < best) {
        best = committed;
        count = 1;
        if (collect) {
          minimizers.clear();
          minimizers.push_back(order);
        }
      } else if (committed == best) {
        ++count;
        if (collect) minimizers.push_back(order);
      }
      return;
    }
    if ((++visited & 0x3ff) == 0 && has_deadline &&
        std::chrono::steady_clock::now() > deadline)
      aborted->store(true, std::memory_order_relaxed);
    if (aborted->load(std::memory_order_relaxed)) return;

    long long inc = incumbent->load(std::memory_order_relaxed);
    std::size_t remaining = unused;
    while (remaining) {
      int v = std::countr_zero(remaining);
      remaining &= remaining - 1;
      std::size_t rest = unused & ~(std::size_t{1} << v);
      long long next_committed = committed + tables->cost_above(v, rest);
      long long next_pending = pending - tables->unresolved(v, rest);
      // Strict comparison: prefixes tying the incumbent must survive so that
      // every minimizer is counted.
      if (next_committed + next_pending > inc) continue;
      order[depth] = v;
      dfs(rest, next_committed, next_pending, depth + 1);
      inc = incumbent->load(std::memory_order_relaxed);
    }
  }
};

}  // namespace

long long ordering_cost(const Digraph& g, const VertexOrdering& order) {
  int n = g.n();
  if (!is_vertex_ordering(order, n))
    throw Error(Errc::length_mismatch,
                "ordering is not a permutation of " + std::to_string(n) + " vertices");
  long long cost = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      int above = order[p], below = order[q];
      cost += (g.edge(above, below) ? 0 : 1) + (g.edge(below, above) ? 1 : 0);
    }
  return cost;
}

KPResult compute_kp_bruteforce(const Digraph& g, bool collect_minimizers) {
  int n = g.n();
  if (n > 9)
    throw Error(Errc::too_large,
                "brute force enumerates n! orderings, refusing n = " + std::to_string(n));
  VertexOrdering order(n);
  std::iota(order.begin(), order.end(), 0);
  KPResult out;
  out.k = LLONG_MAX;
  do {
    long long cost = ordering_cost(g, order);
    if (cost < out.k) {
      out.k = cost;
      out.p = 1;
      if (collect_minimizers) {
        out.minimizers.clear();
        out.minimizers.push_back(order);
      }
    } else if (cost == out.k) {
      ++out.p;
      if (collect_minimizers) out.minimizers.push_back(order);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

KPResult compute_kp(const Digraph& g, const SearchOptions& opts) {
  if (opts.max_n < 2) throw Error(Errc::bad_config, "max_n must be at least 2");
  if (opts.threads < 1) throw Error(Errc::bad_config, "threads must be at least 1");
  if (opts.time_budget_seconds < 0.0)
    throw Error(Errc::bad_config, "time budget must be nonnegative");
  int n = g.n();
  if (n > opts.max_n)
    throw Error(Errc::too_large, "graph has " + std::to_string(n) + " vertices, limit " +
                                     std::to_string(opts.max_n));

  PairTables tables(g);

  // Two cheap feasible orderings tighten pruning from the start; the search
  // still visits them, so counts are unaffected.
  VertexOrdering identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  long long seed_cost = ordering_cost(g, identity);
  VertexOrdering by_degree = identity;
  std::vector<int> deg = g.out_degrees();
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  seed_cost = std::min(seed_cost, ordering_cost(g, by_degree));

  std::atomic<long long> incumbent{seed_cost};
  std::atomic<bool> aborted{false};
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.time_budget_seconds));

  std::vector<Worker> workers(n);
  for (int v = 0; v < n; ++v) {
    workers[v].tables = &tables;
    workers[v].incumbent = &incumbent;
    workers[v].aborted = &aborted;
    workers[v].deadline = deadline;
    workers[v].has_deadline = opts.time_budget_seconds > 0.0;
    workers[v].collect = opts.collect_minimizers;
  }

  int threads = std::min(opts.threads, n);
  if (threads <= 1) {
    for (int v = 0; v < n; ++v) workers[v].run(v);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int v; (v = next.fetch_add(1)) < n;) workers[v].run(v);
      });
    for (auto& th : pool) th.join();
  }

  if (aborted.load())
    throw Error(Errc::timeout, "k and p search exceeded the time budget");

  KPResult out;
  out.k = incumbent.load();
  for (const Worker& w : workers) {
    if (w.best != out.k) continue;
    out.p += w.count;
    if (opts.collect_minimizers)
      out.minimizers.insert(out.minimizers.end(), w.minimizers.begin(), w.minimizers.end());
  }
  return out;
}

double edge_rankability_from(int n, const KPResult& kp) {
  if (n < 2) throw Error(Errc::too_small, "need at least 2 vertices");
  double k_max = static_cast<double>(n) * (n - 1) / 2.0;
  double p_max = factorial_as_double(n);
  return 1.0 - (static_cast<double>(kp.k) * static_cast<double>(kp.p)) / (k_max * p_max);
}

double edge_rankability(const Digraph& g, const SearchOptions& opts) {
  return edge_rankability_from(g.n(), compute_kp(g, opts));
}

double edge_rankability_cycle(int n) {
  if (n < 3) throw Error(Errc::too_small, "cycle needs at least 3 vertices");
  double numerator = 2.0 + static_cast<double>(n - 1) * static_cast<double>(n - 2);
  return 1.0 - numerator / (factorial_as_double(n) * static_cast<double>(n - 1));
}

}  // namespace rankability
