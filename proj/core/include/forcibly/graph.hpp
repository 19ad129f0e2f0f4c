#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "forcibly/degree_sequence.hpp"

namespace forcibly {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Sentinel for quantities with no finite value: distance across components,
// girth or diameter of a forest / disconnected graph.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Simple undirected graph on vertices 0..n-1. Adjacency lists stay sorted.
// Loops and parallel edges are rejected at the mutation boundary, so every
// reachable state is a simple graph.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;

  int add_vertex();               // returns the new vertex id
  void add_edge(int u, int v);    // throws on loop, duplicate, or bad id
  void remove_edge(int u, int v); // throws when the edge is absent

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const;
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

DegreeSequence degree_sequence(const Graph& g);

bool is_connected(const Graph& g);  // vacuously true for n <= 1
int component_count(const Graph& g);
std::vector<int> component_ids(const Graph& g);  // vertex -> component index

// Length of a shortest u-v path; kInfinity across components.
int distance(const Graph& g, int u, int v);
// Max finite distance; kInfinity when disconnected, 0 for n <= 1.
int diameter(const Graph& g);
// Length of a shortest cycle; kInfinity for forests.
int girth(const Graph& g);
// Vertices of one shortest cycle, in cycle order; empty for forests.
std::vector<int> girth_cycle(const Graph& g);

std::vector<int> pendant_vertices(const Graph& g);  // degree-1 vertices, ascending

// Edges lying on at least one cycle, i.e. the non-bridges.
std::vector<Edge> cycle_edges(const Graph& g);

// Components of the graph after deleting every cycle edge: the trees hanging
// off the cyclic part (plus whole tree components). Partitions the vertices.
struct PeripheralForest {
  std::vector<int> component_of;             // vertex -> index into components
  std::vector<std::vector<int>> components;  // sorted vertex lists
};
PeripheralForest peripheral_forest(const Graph& g);

// Vertices of the maximal subgraph with minimum degree >= 2 (sorted); empty
// for forests.
std::vector<int> two_core_vertices(const Graph& g);

bool is_tree(const Graph& g);         // connected, m = n-1
bool is_star(const Graph& g);         // tree of diameter <= 2 (K1, K2 included)
bool is_double_star(const Graph& g);  // tree of diameter exactly 3

enum class StructuralClass { tree, forest, unicyclic, bicyclic, other };
const char* to_string(StructuralClass c);

// tree: connected with m = n-1; forest: acyclic, not connected; unicyclic:
// connected with m = n; bicyclic: connected with m = n+1; everything else is
// `other` (including disconnected graphs containing cycles).
StructuralClass structural_class(const Graph& g);

// --- deterministic constructors ------------------------------------------
// All constructors label vertices in a fixed documented order, so repeated
// builds are identical graphs.

Graph make_path(int length);              // `length` edges, length+1 vertices 0..length
Graph make_cycle(int length);             // vertices 0..length-1 in cycle order; length >= 3
Graph make_star(int n);                   // n >= 1 vertices, center 0
Graph make_double_star(int a, int b);     // centers 0 (degree a) and 1 (degree b); a, b >= 2
Graph make_complete_bipartite(int s, int t);

// Two disjoint cycles C_r, C_s joined by a path with t edges; r, s >= 3, t >= 1.
Graph make_sandglass(int r, int s, int t);
// Two cycles C_r, C_s sharing exactly one vertex (the hub, vertex 0); r, s >= 3.
Graph make_bowtie(int r, int s);
// Two branch vertices (0 and 1) joined by three internally disjoint paths of
// lengths r <= s <= t, with r >= 1 and s >= 2.
Graph make_theta(int r, int s, int t);

// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// --- bicyclic core ---------------------------------------------------------

enum class CoreKind { sandglass, bowtie, theta };
const char* to_string(CoreKind k);

// The 2-core of a bicyclic graph, classified. Vertex ids are the originals.
//   sandglass: cycles[0] (length r) and cycles[1] (length s), r <= s, each
//              listed from its attachment vertex; path runs from the
//              cycles[0] attachment to the cycles[1] attachment (t edges).
//   bowtie:    cycles[0], cycles[1] (r <= s) both listed from the shared hub.
//   theta:     paths[0..2] of lengths r <= s <= t, each listed from the same
//              branch vertex u = paths[k].front() to v = paths[k].back().
struct BicyclicCore {
  CoreKind kind;
  int r = 0, s = 0, t = 0;  // t is meaningless for bowtie
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<std::vector<int>> paths;
};

// Peels to the 2-core and classifies it. Throws std::invalid_argument unless
// structural_class(g) == bicyclic.
BicyclicCore bicyclic_core(const Graph& g);

// --- edge-list text format ---------------------------------------------------
// First line: vertex count. One "u v" line per edge with u < v, sorted.

std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);  // throws std::invalid_argument

}  // namespace forcibly
