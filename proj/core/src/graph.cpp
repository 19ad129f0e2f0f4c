#include "forcibly/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace forcibly {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range (n=" +
                                std::to_string(vertex_count()) + ")");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v)
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " already present");
  a.insert(it, v);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v)
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " not present");
  a.erase(it);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int v = 0; v < vertex_count(); ++v)
    for (int w : adj_[static_cast<std::size_t>(v)])
      if (v < w) out.emplace_back(v, w);
  return out;
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return DegreeSequence(std::move(d));
}

std::vector<int> component_ids(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (id[static_cast<std::size_t>(root)] != -1) continue;
    id[static_cast<std::size_t>(root)] = next;
    queue.assign(1, root);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g.neighbors(v))
        if (id[static_cast<std::size_t>(w)] == -1) {
          id[static_cast<std::size_t>(w)] = next;
          queue.push_back(w);
        }
    }
    ++next;
  }
  return id;
}

int component_count(const Graph& g) {
  auto ids = component_ids(g);
  return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

namespace {

// BFS distances from `root`; optionally records parents.
std::vector<int> bfs(const Graph& g, int root, std::vector<int>* parent = nullptr) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfinity);
  if (parent) parent->assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(root)] = 0;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[static_cast<std::size_t>(w)] == kInfinity) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        if (parent) (*parent)[static_cast<std::size_t>(w)] = v;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

int distance(const Graph& g, int u, int v) {
  // check_vertex via degree(); bfs itself assumes valid ids
  g.degree(u);
  g.degree(v);
  return bfs(g, u)[static_cast<std::size_t>(v)];
}

int diameter(const Graph& g) {
  if (g.vertex_count() <= 1) return 0;
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs(g, v);
    for (int d : dist) {
      if (d == kInfinity) return kInfinity;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

// Shortest cycle: min over roots of (dist[u] + dist[w] + 1) across non-tree
// edges u-w seen in the BFS from that root. Per-root values can overshoot,
// but the global minimum is exact. Returns {length, root, u, w}.
struct GirthScan {
  int length = kInfinity;
  int root = -1, u = -1, w = -1;
};

GirthScan girth_scan(const Graph& g) {
  GirthScan best;
  std::vector<int> parent;
  for (int root = 0; root < g.vertex_count(); ++root) {
    auto dist = bfs(g, root, &parent);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (dist[static_cast<std::size_t>(v)] == kInfinity) continue;
      for (int w : g.neighbors(v)) {
        if (w == parent[static_cast<std::size_t>(v)] || v == parent[static_cast<std::size_t>(w)])
          continue;
        if (dist[static_cast<std::size_t>(w)] == kInfinity) continue;
        int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
        if (len < best.length) best = {len, root, v, w};
      }
    }
  }
  return best;
}

}  // namespace

int girth(const Graph& g) { return girth_scan(g).length; }

std::vector<int> girth_cycle(const Graph& g) {
  auto scan = girth_scan(g);
  if (scan.length == kInfinity) return {};
  std::vector<int> parent;
  auto dist = bfs(g, scan.root, &parent);
  (void)dist;
  auto climb = [&](int v) {
    std::vector<int> path{v};
    while (path.back() != scan.root) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    return path;  // v, ..., root
  };
  std::vector<int> up = climb(scan.u);
  std::vector<int> down = climb(scan.w);
  // root..u followed by w..(just below root): at the global minimum the two
  // branches share only the root, so this is a simple cycle.
  std::vector<int> cycle(up.rbegin(), up.rend());
  cycle.insert(cycle.end(), down.begin(), down.end() - 1);
  assert(static_cast<int>(cycle.size()) == scan.length);
  assert(std::set<int>(cycle.begin(), cycle.end()).size() == cycle.size());
  return cycle;
}

std::vector<int> pendant_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

namespace {

// Iterative bridge finding (lowpoint DFS). Simple graph: the parent edge is
// unique, so skipping `parent` by vertex id is sound.
std::vector<Edge> bridge_edges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> bridges;
  int timer = 0;
  struct Frame {
    int v, parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        int v = f.v, p = f.parent;
        stack.pop_back();
        if (p != -1) {
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)])
            bridges.push_back(make_edge(p, v));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace

std::vector<Edge> cycle_edges(const Graph& g) {
  auto bridges = bridge_edges(g);
  std::vector<Edge> out;
  for (auto e : g.edges())
    if (!std::binary_search(bridges.begin(), bridges.end(), e)) out.push_back(e);
  return out;
}

PeripheralForest peripheral_forest(const Graph& g) {
  auto cyc = cycle_edges(g);
  std::set<Edge> skip(cyc.begin(), cyc.end());
  Graph forest(g.vertex_count());
  for (auto [u, v] : g.edges())
    if (!skip.count({u, v})) forest.add_edge(u, v);
  PeripheralForest out;
  out.component_of = component_ids(forest);
  int count = out.component_of.empty()
                  ? 0
                  : 1 + *std::max_element(out.component_of.begin(), out.component_of.end());
  out.components.resize(static_cast<std::size_t>(count));
  for (int v = 0; v < g.vertex_count(); ++v)
    out.components[static_cast<std::size_t>(out.component_of[static_cast<std::size_t>(v)])]
        .push_back(v);
  return out;
}

std::vector<int> two_core_vertices(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> dead(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (dead[static_cast<std::size_t>(v)]) continue;
    dead[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (dead[static_cast<std::size_t>(w)]) continue;
      if (--deg[static_cast<std::size_t>(w)] <= 1) queue.push_back(w);
    }
  }
  std::vector<int> core;
  for (int v = 0; v < n; ++v)
    if (!dead[static_cast<std::size_t>(v)]) core.push_back(v);
  return core;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_star(const Graph& g) { return is_tree(g) && diameter(g) <= 2; }

bool is_double_star(const Graph& g) { return is_tree(g) && diameter(g) == 3; }

const char* to_string(StructuralClass c) {
  switch (c) {
    case StructuralClass::tree: return "tree";
    case StructuralClass::forest: return "forest";
    case StructuralClass::unicyclic: return "unicyclic";
    case StructuralClass::bicyclic: return "bicyclic";
    case StructuralClass::other: return "other";
  }
  return "other";
}

StructuralClass structural_class(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 0) return StructuralClass::forest;
  const int comps = component_count(g);
  if (comps == 1) {
    if (m == n - 1) return StructuralClass::tree;
    if (m == n) return StructuralClass::unicyclic;
    if (m == n + 1) return StructuralClass::bicyclic;
    return StructuralClass::other;
  }
  if (m == n - comps) return StructuralClass::forest;  // acyclic
  return StructuralClass::other;
}

Graph make_path(int length) {
  if (length < 0) throw std::invalid_argument("path length must be non-negative");
  Graph g(length + 1);
  for (int i = 0; i < length; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  Graph g(length);
  for (int i = 0; i < length; ++i) g.add_edge(i, (i + 1) % length);
  return g;
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least one vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph make_double_star(int a, int b) {
  if (a < 2 || b < 2) throw std::invalid_argument("double star needs both center degrees >= 2");
  Graph g(a + b);
  g.add_edge(0, 1);
  for (int i = 0; i < a - 1; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < b - 1; ++i) g.add_edge(1, a + 1 + i);
  return g;
}

Graph make_complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("both sides need at least one vertex");
  Graph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
  return g;
}

Graph make_sandglass(int r, int s, int t) {
  if (r < 3 || s < 3) throw std::invalid_argument("sandglass cycles need length >= 3");
  if (t < 1) throw std::invalid_argument("sandglass path needs length >= 1");
  Graph g(r + s + t - 1);
  for (int i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
  for (int i = 0; i < s; ++i) g.add_edge(r + i, r + (i + 1) % s);
  int prev = 0;  // path from vertex 0 (first cycle) to vertex r (second cycle)
  for (int i = 0; i < t - 1; ++i) {
    g.add_edge(prev, r + s + i);
    prev = r + s + i;
  }
  g.add_edge(prev, r);
  return g;
}

Graph make_bowtie(int r, int s) {
  if (r < 3 || s < 3) throw std::invalid_argument("bowtie cycles need length >= 3");
  Graph g(r + s - 1);
  for (int i = 0; i < r; ++i) g.add_edge(i, (i + 1) % r);
  int prev = 0;  // second cycle through the hub 0 and vertices r..r+s-2
  for (int i = 0; i < s - 1; ++i) {
    g.add_edge(prev, r + i);
    prev = r + i;
  }
  g.add_edge(prev, 0);
  return g;
}

Graph make_theta(int r, int s, int t) {
  if (r < 1 || r > s || s > t) throw std::invalid_argument("theta needs 1 <= r <= s <= t");
  if (s < 2) throw std::invalid_argument("theta needs at most one length-1 path");
  Graph g(r + s + t - 1);
  int next = 2;
  for (int len : {r, s, t}) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
  return g;
}

const char* to_string(CoreKind k) {
  switch (k) {
    case CoreKind::sandglass: return "sandglass";
    case CoreKind::bowtie: return "bowtie";
    case CoreKind::theta: return "theta";
  }
  return "theta";
}

BicyclicCore bicyclic_core(const Graph& g) {
  if (structural_class(g) != StructuralClass::bicyclic)
    throw std::invalid_argument("bicyclic_core: graph is not bicyclic");

  auto core = two_core_vertices(g);
  std::vector<char> in_core(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : core) in_core[static_cast<std::size_t>(v)] = 1;
  auto core_deg = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += in_core[static_cast<std::size_t>(w)];
    return d;
  };

  std::vector<int> specials;
  for (int v : core)
    if (core_deg(v) >= 3) specials.push_back(v);

  // Walk maximal chains of core-degree-2 vertices between special vertices.
  std::set<Edge> used;
  std::vector<std::vector<int>> chains;
  for (int v : specials) {
    for (int w : g.neighbors(v)) {
      if (!in_core[static_cast<std::size_t>(w)] || used.count(make_edge(v, w))) continue;
      used.insert(make_edge(v, w));
      std::vector<int> chain{v, w};
      int prev = v, cur = w;
      while (core_deg(cur) == 2) {
        int next = -1;
        for (int x : g.neighbors(cur))
          if (in_core[static_cast<std::size_t>(x)] && x != prev) next = x;
        assert(next != -1);
        used.insert(make_edge(cur, next));
        chain.push_back(next);
        prev = cur;
        cur = next;
      }
      chains.push_back(std::move(chain));
    }
  }

  BicyclicCore out{};
  auto as_cycle = [](std::vector<int> chain) {
    chain.pop_back();  // drop the repeated start vertex
    return chain;
  };

  if (specials.size() == 1) {
    if (core_deg(specials[0]) != 4 || chains.size() != 2)
      throw std::logic_error("bicyclic_core: unexpected hub structure");
    out.kind = CoreKind::bowtie;
    out.cycles = {as_cycle(chains[0]), as_cycle(chains[1])};
    if (out.cycles[0].size() > out.cycles[1].size()) std::swap(out.cycles[0], out.cycles[1]);
    out.r = static_cast<int>(out.cycles[0].size());
    out.s = static_cast<int>(out.cycles[1].size());
    return out;
  }

  if (specials.size() != 2 || chains.size() != 3)
    throw std::logic_error("bicyclic_core: unexpected branch structure");

  std::vector<std::vector<int>> cycles, paths;
  for (auto& c : chains)
    (c.front() == c.back() ? cycles : paths).push_back(std::move(c));

  if (cycles.empty()) {
    if (paths.size() != 3) throw std::logic_error("bicyclic_core: unexpected theta structure");
    out.kind = CoreKind::theta;
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    out.paths = std::move(paths);
    out.r = static_cast<int>(out.paths[0].size()) - 1;
    out.s = static_cast<int>(out.paths[1].size()) - 1;
    out.t = static_cast<int>(out.paths[2].size()) - 1;
    return out;
  }

  if (cycles.size() != 2 || paths.size() != 1)
    throw std::logic_error("bicyclic_core: unexpected sandglass structure");
  out.kind = CoreKind::sandglass;
  out.cycles = {as_cycle(cycles[0]), as_cycle(cycles[1])};
  out.path = std::move(paths[0]);
  if (out.cycles[0].size() > out.cycles[1].size()) std::swap(out.cycles[0], out.cycles[1]);
  if (out.path.front() != out.cycles[0].front())
    std::reverse(out.path.begin(), out.path.end());
  assert(out.path.front() == out.cycles[0].front());
  assert(out.path.back() == out.cycles[1].front());
  out.r = static_cast<int>(out.cycles[0].size());
  out.s = static_cast<int>(out.cycles[1].size());
  out.t = static_cast<int>(out.path.size()) - 1;
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out += '\n';
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n;
  if (!(in >> n) || n < 0) throw std::invalid_argument("edge list must start with a vertex count");
  Graph g(static_cast<int>(n));
  long long u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list has a dangling endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) {
    std::string tail;
    in.clear();
    in >> tail;
    throw std::invalid_argument("unexpected token in edge list: '" + tail + "'");
  }
  return g;
}

}  // namespace forcibly
