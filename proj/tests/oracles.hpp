#pragma once

// Reference implementations for tests, deliberately written with different
// (naive) algorithms than the library so that mistakes do not correlate:
// exhaustive edge-subset scans, edge-deletion bridge detection, and
// factorial-time isomorphism.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "forcibly/graph.hpp"

namespace testoracle {

using forcibly::Edge;
using forcibly::Graph;

inline std::vector<Edge> pair_table(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// Per-vertex degrees of the mask-encoded graph (bit k <=> pair_table[k]).
inline std::vector<int> mask_degrees(int n, std::uint64_t mask, const std::vector<Edge>& pairs) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  while (mask) {
    const int k = __builtin_ctzll(mask);
    mask &= mask - 1;
    ++deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)];
    ++deg[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].second)];
  }
  return deg;
}

inline Graph mask_graph(int n, std::uint64_t mask, const std::vector<Edge>& pairs) {
  Graph g(n);
  while (mask) {
    const int k = __builtin_ctzll(mask);
    mask &= mask - 1;
    g.add_edge(pairs[static_cast<std::size_t>(k)].first, pairs[static_cast<std::size_t>(k)].second);
  }
  return g;
}

// Counts of labeled graphs per positional degree vector, restricted to
// non-increasing vectors (the only ones the enumerator is asked about).
// One pass over all 2^{C(n,2)} graphs; n <= 7.
inline std::map<std::vector<int>, std::uint64_t> positional_histogram(int n) {
  const auto pairs = pair_table(n);
  std::map<std::vector<int>, std::uint64_t> hist;
  const std::uint64_t total = 1ull << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto deg = mask_degrees(n, mask, pairs);
    if (std::is_sorted(deg.begin(), deg.end(), std::greater<int>())) ++hist[deg];
  }
  return hist;
}

// Labeled-graph count for one positional degree vector (saves the histogram
// memory when only a few sequences are needed at n = 7).
inline std::uint64_t positional_count(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  const auto pairs = pair_table(n);
  const std::uint64_t total = 1ull << pairs.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (mask_degrees(n, mask, pairs) == degrees) ++count;
  return count;
}

// Union-find component count, independent of the library's BFS.
inline int component_count_uf(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int>& p = parent;
  auto find = [&](int v) {
    while (p[static_cast<std::size_t>(v)] != v) {
      p[static_cast<std::size_t>(v)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
      v = p[static_cast<std::size_t>(v)];
    }
    return v;
  };
  int comps = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a != b) {
      p[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

// An edge is a bridge iff deleting it increases the component count.
inline std::vector<Edge> bridges_by_deletion(const Graph& g) {
  std::vector<Edge> bridges;
  const int base = component_count_uf(g);
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (component_count_uf(h) > base) bridges.emplace_back(u, v);
  }
  return bridges;
}

// Brute-force isomorphism: try every vertex permutation.
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Number of isomorphism classes among realizations with positional degrees
// `degrees` (sorted non-increasing): mask scan plus pairwise brute dedup.
// Every unlabeled realization admits a degree-sorted labeling, so scanning
// positional graphs visits every class.
inline std::uint64_t noniso_count_brute(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  const auto pairs = pair_table(n);
  const std::uint64_t total = 1ull << pairs.size();
  std::vector<Graph> reps;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask_degrees(n, mask, pairs) != degrees) continue;
    Graph g = mask_graph(n, mask, pairs);
    bool fresh = true;
    for (const auto& rep : reps)
      if (isomorphic_brute(rep, g)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(g));
  }
  return reps.size();
}

}  // namespace testoracle
