#include "forcibly/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

#include "forcibly/degree_sequence.hpp"

namespace forcibly {

namespace {

void check_limit(const DegreeSequence& d, int vertex_limit) {
  const int hard = kMaxEnumerationVertices;
  const int limit = std::min(vertex_limit, hard);
  if (static_cast<int>(d.size()) > limit)
    throw std::runtime_error("enumeration limited to " + std::to_string(limit) +
                             " vertices, sequence has " + std::to_string(d.size()));
}

// Backtracking enumerator: repeatedly satisfy the vertex with the largest
// residual degree (lowest index on ties), choosing its neighbors among the
// later-usable vertices in index order. Each completed assignment is pruned
// with the graphicality test on the residual sequence, which keeps the tree
// close to the set of actual realizations.
struct LabeledSearch {
  const int n;
  std::vector<int> residual;
  std::vector<std::uint32_t> adj;         // bitmask adjacency, n <= 16
  std::vector<Edge> edges;
  const std::function<bool(const Graph&)>& visit;
  bool cancelled = false;
  std::uint64_t emitted = 0;

  LabeledSearch(const DegreeSequence& d, const std::function<bool(const Graph&)>& v)
      : n(static_cast<int>(d.size())),
        residual(d.degrees().begin(), d.degrees().end()),
        adj(d.size(), 0),
        visit(v) {}

  bool residual_graphic() const {
    return is_graphic(DegreeSequence(residual));
  }

  void emit() {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    ++emitted;
    if (!visit(g)) cancelled = true;
  }

  void recurse() {
    int pivot = -1;
    for (int v = 0; v < n; ++v)
      if (residual[v] > 0 && (pivot == -1 || residual[v] > residual[pivot])) pivot = v;
    if (pivot == -1) {
      emit();
      return;
    }
    const int need = residual[pivot];
    residual[pivot] = 0;
    std::vector<int> candidates;
    for (int w = 0; w < n; ++w)
      if (w != pivot && residual[w] > 0 && !((adj[pivot] >> w) & 1)) candidates.push_back(w);
    if (static_cast<int>(candidates.size()) >= need) choose(candidates, 0, need, pivot);
    residual[pivot] = need;
  }

  void choose(const std::vector<int>& candidates, std::size_t from, int need, int pivot) {
    if (need == 0) {
      if (residual_graphic()) recurse();
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
      const int w = candidates[i];
      adj[pivot] |= 1u << w;
      adj[w] |= 1u << pivot;
      --residual[w];
      edges.push_back(make_edge(pivot, w));
      choose(candidates, i + 1, need - 1, pivot);
      edges.pop_back();
      ++residual[w];
      adj[pivot] &= ~(1u << w);
      adj[w] &= ~(1u << pivot);
      if (cancelled) return;
    }
  }
};

// 128-bit helper for the canonical key: bits of the adjacency matrix in
// colex pair order (0,1),(0,2),(1,2),(0,3),... . Assigning vertices to
// positions left to right reveals the bit string as a growing prefix, which
// is what makes prefix pruning sound.
struct Key {
  unsigned __int128 bits = 0;
  int length = 0;  // number of bits fixed so far

  static int total_bits(int n) { return n * (n - 1) / 2; }

  void push(bool bit) {
    bits = (bits << 1) | static_cast<unsigned>(bit);
    ++length;
  }

  // Lexicographic comparison of this prefix against the first `length` bits
  // of a complete key of `total` bits: <0 smaller, 0 equal, >0 larger.
  int compare_prefix(const Key& full, int total) const {
    unsigned __int128 other = full.bits >> (total - length);
    if (bits < other) return -1;
    if (bits > other) return 1;
    return 0;
  }
};

struct CanonicalSearch {
  const Graph& g;
  const int n;
  const int total;
  std::vector<int> posdeg;       // required degree at each position
  std::vector<int> perm;         // position -> vertex
  std::vector<char> used;
  Key best;
  bool have_best = false;

  explicit CanonicalSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()), total(Key::total_bits(graph.vertex_count())) {
    auto d = degree_sequence(g);
    posdeg.assign(d.degrees().begin(), d.degrees().end());
    perm.assign(static_cast<std::size_t>(n), -1);
    used.assign(static_cast<std::size_t>(n), 0);
  }

  void run() {
    Key k;
    place(0, k);
    assert(have_best);
  }

  void place(int pos, Key prefix) {
    if (pos == n) {
      if (!have_best || prefix.bits < best.bits) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || g.degree(v) != posdeg[static_cast<std::size_t>(pos)])
        continue;
      Key next = prefix;
      for (int q = 0; q < pos; ++q) next.push(g.has_edge(perm[static_cast<std::size_t>(q)], v));
      if (have_best && next.compare_prefix(best, total) > 0) continue;
      used[static_cast<std::size_t>(v)] = 1;
      perm[static_cast<std::size_t>(pos)] = v;
      place(pos + 1, next);
      used[static_cast<std::size_t>(v)] = 0;
    }
  }
};

}  // namespace

std::array<std::uint64_t, 2> canonical_adjacency_key(const Graph& g) {
  if (g.vertex_count() > kMaxEnumerationVertices)
    throw std::runtime_error("canonical key limited to " +
                             std::to_string(kMaxEnumerationVertices) + " vertices");
  CanonicalSearch search(g);
  search.run();
  unsigned __int128 bits = search.best.bits;
  return {static_cast<std::uint64_t>(bits >> 64),
          static_cast<std::uint64_t>(bits & ~std::uint64_t{0})};
}

RealizationStream::RealizationStream(DegreeSequence seq, EnumerationMode mode, int vertex_limit)
    : seq_(std::move(seq)), mode_(mode) {
  check_limit(seq_, vertex_limit);
}

bool RealizationStream::for_each(const std::function<bool(const Graph&)>& visit) {
  if (!is_graphic(seq_)) return true;  // empty stream
  if (mode_ == EnumerationMode::labeled) {
    LabeledSearch search(seq_, visit);
    search.recurse();
    count_ += search.emitted;
    return !search.cancelled;
  }
  std::set<std::array<std::uint64_t, 2>> seen;
  std::uint64_t emitted = 0;
  bool exhausted = true;
  // Named so it outlives the search, which holds the callback by reference.
  const std::function<bool(const Graph&)> dedup = [&](const Graph& g) {
    if (!seen.insert(canonical_adjacency_key(g)).second) return true;
    ++emitted;
    if (!visit(g)) {
      exhausted = false;
      return false;
    }
    return true;
  };
  LabeledSearch search(seq_, dedup);
  search.recurse();
  count_ += emitted;
  return exhausted;
}

RealizationStream enumerate_labeled(const DegreeSequence& d, int vertex_limit) {
  return RealizationStream(d, EnumerationMode::labeled, vertex_limit);
}

RealizationStream enumerate_nonisomorphic(const DegreeSequence& d, int vertex_limit) {
  return RealizationStream(d, EnumerationMode::nonisomorphic, vertex_limit);
}

std::uint64_t count_realizations(const DegreeSequence& d, EnumerationMode mode,
                                 int vertex_limit) {
  RealizationStream stream(d, mode, vertex_limit);
  stream.for_each([](const Graph&) { return true; });
  return stream.count();
}

const char* to_string(ForciblyOutcome o) {
  switch (o) {
    case ForciblyOutcome::holds: return "holds";
    case ForciblyOutcome::refuted: return "refuted";
    case ForciblyOutcome::not_graphic: return "not-graphic";
  }
  return "not-graphic";
}

ForciblyCheck check_forcibly(const DegreeSequence& d,
                             const std::function<bool(const Graph&)>& property,
                             int vertex_limit) {
  ForciblyCheck result;
  if (!is_graphic(d)) {
    result.outcome = ForciblyOutcome::not_graphic;
    result.reason = "not-graphic";
    return result;
  }
  // The labeled stream visits a representative of every isomorphism class, so
  // exhausting it decides the verdict for isomorphism-invariant predicates
  // without paying for canonical forms.
  RealizationStream stream(d, EnumerationMode::labeled, vertex_limit);
  std::optional<Graph> witness;
  stream.for_each([&](const Graph& g) {
    if (!property(g)) {
      witness = g;
      return false;
    }
    return true;
  });
  result.checked = stream.count();
  if (witness) {
    result.outcome = ForciblyOutcome::refuted;
    result.counterexample = std::move(witness);
    result.reason = "counterexample";
  } else {
    result.outcome = ForciblyOutcome::holds;
  }
  return result;
}

namespace {

ForciblyCheck oracle_for_class(const DegreeSequence& d, StructuralClass cls,
                               EdgeCountClass expected_sum, int vertex_limit) {
  if (!is_graphic(d)) return {ForciblyOutcome::not_graphic, std::nullopt, "not-graphic", 0};
  if (class_by_edge_count(d) != expected_sum) {
    ForciblyCheck result;
    result.outcome = ForciblyOutcome::refuted;
    result.reason = "sum-mismatch";
    result.counterexample = havel_hakimi_realize(d);
    return result;
  }
  return check_forcibly(
      d, [cls](const Graph& g) { return structural_class(g) == cls; }, vertex_limit);
}

}  // namespace

ForciblyCheck oracle_forcibly_tree(const DegreeSequence& d, int vertex_limit) {
  return oracle_for_class(d, StructuralClass::tree, EdgeCountClass::tree_candidate, vertex_limit);
}

ForciblyCheck oracle_forcibly_unicyclic(const DegreeSequence& d, int vertex_limit) {
  return oracle_for_class(d, StructuralClass::unicyclic, EdgeCountClass::unicyclic_candidate,
                          vertex_limit);
}

ForciblyCheck oracle_forcibly_bicyclic(const DegreeSequence& d, int vertex_limit) {
  return oracle_for_class(d, StructuralClass::bicyclic, EdgeCountClass::bicyclic_candidate,
                          vertex_limit);
}

}  // namespace forcibly
