#include "forcibly/witness.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "forcibly/switching.hpp"

namespace forcibly {

std::optional<Graph> pendant_disconnect(const Graph& g) {
  auto pendants = pendant_vertices(g);
  for (std::size_t i = 0; i < pendants.size(); ++i) {
    const int u = pendants[i];
    auto dist = [&](int a, int b) { return distance(g, a, b); };
    for (std::size_t j = i + 1; j < pendants.size(); ++j) {
      const int v = pendants[j];
      const int d = dist(u, v);
      if (d == kInfinity || d <= 3) continue;
      const int us = g.neighbors(u)[0];  // the unique support of a pendant
      const int vs = g.neighbors(v)[0];
      SwitchMove move{{make_edge(u, us), make_edge(v, vs)}, {make_edge(u, v), make_edge(us, vs)}};
      Graph out = apply_switch(g, move);
      assert(!is_connected(out));
      return out;
    }
  }
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& name, const char* what) {
  if (!ok) throw std::invalid_argument("gadget " + name + ": " + what);
}

void add_pendants(Graph& g, int at, int count) {
  for (int i = 0; i < count; ++i) g.add_edge(at, g.add_vertex());
}

void add_k2(Graph& g) {
  int a = g.add_vertex();
  int b = g.add_vertex();
  g.add_edge(a, b);
}

// Theta(1,2,L) + K2 with pendants: r-3 at one branch vertex, s-3 at the other,
// t-2 at the first interior vertex of the length-2 path.
Graph theta_with_pendants(int base_t, const GadgetParams& p, const std::string& name) {
  require(p.r >= p.s && p.s >= 3, name, "needs r >= s >= 3");
  require(p.t >= 2 && p.t <= p.s, name, "needs 2 <= t <= s");
  Graph g = make_theta(1, 2, base_t);
  add_pendants(g, 0, p.r - 3);
  add_pendants(g, 1, p.s - 3);
  add_pendants(g, 2, p.t - 2);  // vertex 2 is the interior of the length-2 path
  add_k2(g);
  return g;
}

// (Theta(2,2,L) + uv) + K2 with pendants: r-4, s-4 at the degree-4 vertices,
// t-2 at the interior of the first length-2 path.
Graph braced_theta_with_pendants(int base_t, const GadgetParams& p, const std::string& name) {
  require(p.r >= p.s && p.s >= 4, name, "needs r >= s >= 4");
  require(p.t >= 2 && p.t <= p.s, name, "needs 2 <= t <= s");
  Graph g = make_theta(2, 2, base_t);
  g.add_edge(0, 1);
  add_pendants(g, 0, p.r - 4);
  add_pendants(g, 1, p.s - 4);
  add_pendants(g, 2, p.t - 2);
  add_k2(g);
  return g;
}

// Star on `size` vertices plus K2, with three edges among the star's leaves.
Graph star_with_leaf_edges(int size, const std::vector<Edge>& leaf_edges) {
  Graph g = make_star(size);
  for (auto [u, v] : leaf_edges) g.add_edge(u, v);
  add_k2(g);
  return g;
}

}  // namespace

Graph build_gadget(const std::string& name, const GadgetParams& p) {
  if (name == "G1-uni") {
    require(p.n == p.r + p.s + p.t - 2, name, "needs n = r+s+t-2");
    return theta_with_pendants(2, p, name);
  }
  if (name == "G2-uni") {
    require(p.n >= 7, name, "needs n >= 7");
    Graph g = make_bowtie(3, 3);
    add_pendants(g, 0, p.n - 7);  // vertex 0 is the degree-4 hub
    add_k2(g);
    return g;
  }
  if (name == "G3-uni") {
    require(p.n == p.r + p.s + p.t - 1, name, "needs n = r+s+t-1");
    return theta_with_pendants(3, p, name);
  }
  if (name == "B-star-1") {
    require(p.n >= 7, name, "needs n >= 7");
    return star_with_leaf_edges(p.n - 2, {{1, 2}, {2, 3}, {3, 4}});
  }
  if (name == "B-star-2") {
    require(p.n >= 8, name, "needs n >= 8");
    return star_with_leaf_edges(p.n - 2, {{1, 2}, {2, 3}, {4, 5}});
  }
  if (name == "B-star-3") {
    require(p.n >= 8, name, "needs n >= 8");
    Graph g = make_star(p.n - 3);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    int c = g.add_vertex();
    g.add_edge(c, g.add_vertex());
    g.add_edge(c, g.add_vertex());
    return g;
  }
  if (name == "B-theta-1") {
    require(p.n == p.r + p.s + p.t - 3, name, "needs n = r+s+t-3");
    return braced_theta_with_pendants(2, p, name);
  }
  if (name == "B-theta-2") {
    require(p.n == p.r + p.s + p.t - 2, name, "needs n = r+s+t-2");
    return braced_theta_with_pendants(3, p, name);
  }
  throw std::invalid_argument("unknown gadget '" + name + "'");
}

const std::vector<std::string>& gadget_names() {
  static const std::vector<std::string> names{
      "G1-uni", "G2-uni", "G3-uni", "B-star-1", "B-star-2", "B-star-3", "B-theta-1", "B-theta-2",
  };
  return names;
}

namespace {

bool all_ones_from(const std::vector<int>& d, std::size_t from) {
  for (std::size_t i = from; i < d.size(); ++i)
    if (d[i] != 1) return false;
  return true;
}

bool twos_at(const std::vector<int>& d, std::size_t from, std::size_t count) {
  if (from + count > d.size()) return false;
  for (std::size_t i = from; i < from + count; ++i)
    if (d[i] != 2) return false;
  return true;
}

// Pattern test per gadget; binds parameters when the shape fits.
std::optional<GadgetParams> match_pattern(const std::string& name, const DegreeSequence& seq) {
  const auto& d = seq.degrees();
  const auto n = static_cast<int>(d.size());
  GadgetParams p;
  p.n = n;
  auto head3 = [&] {
    p.r = d[0];
    p.s = d[1];
    p.t = d[2];
  };
  if (name == "G1-uni") {
    if (n >= 6 && d[1] >= 3 && d[3] == 2 && all_ones_from(d, 4) &&
        static_cast<long long>(d[0]) + d[1] + d[2] == n + 2) {
      head3();
      return p;
    }
  } else if (name == "G2-uni") {
    if (n >= 7 && d[0] == n - 3 && twos_at(d, 1, 4) && all_ones_from(d, 5)) return p;
  } else if (name == "G3-uni") {
    if (n >= 7 && d[1] >= 3 && twos_at(d, 3, 2) && all_ones_from(d, 5) &&
        static_cast<long long>(d[0]) + d[1] + d[2] == n + 1) {
      head3();
      return p;
    }
  } else if (name == "B-star-1") {
    if (n >= 7 && d[0] == n - 3 && d[1] == 3 && d[2] == 3 && twos_at(d, 3, 2) &&
        all_ones_from(d, 5))
      return p;
  } else if (name == "B-star-2") {
    if (n >= 8 && d[0] == n - 3 && d[1] == 3 && twos_at(d, 2, 4) && all_ones_from(d, 6)) return p;
  } else if (name == "B-star-3") {
    if (n >= 8 && d[0] == n - 4 && d[1] == 3 && d[2] == 3 && twos_at(d, 3, 3) &&
        all_ones_from(d, 6))
      return p;
  } else if (name == "B-theta-1") {
    if (n >= 7 && d[1] >= 4 && twos_at(d, 3, 2) && all_ones_from(d, 5) &&
        static_cast<long long>(d[0]) + d[1] + d[2] == n + 3) {
      head3();
      return p;
    }
  } else if (name == "B-theta-2") {
    if (n >= 8 && d[1] >= 4 && twos_at(d, 3, 3) && all_ones_from(d, 6) &&
        static_cast<long long>(d[0]) + d[1] + d[2] == n + 2) {
      head3();
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<std::string, Graph>> match_gadget(const DegreeSequence& d) {
  if (d.size() < 4) return std::nullopt;
  for (const auto& name : gadget_names()) {
    auto params = match_pattern(name, d);
    if (!params) continue;
    Graph g = build_gadget(name, *params);
    if (degree_sequence(g) != d)
      throw std::logic_error("gadget " + name + " degree mismatch for " + d.render());
    return std::make_pair(name, std::move(g));
  }
  return std::nullopt;
}

const char* to_string(WitnessOutcome o) {
  switch (o) {
    case WitnessOutcome::found: return "found";
    case WitnessOutcome::none: return "none";
    case WitnessOutcome::undecided: return "undecided";
  }
  return "undecided";
}

WitnessResult disconnected_witness(const DegreeSequence& d, int vertex_limit) {
  if (!is_graphic(d))
    throw std::invalid_argument("sequence is not graphic: " + d.render());

  WitnessResult result;
  auto finish = [&](Graph g, std::string method) {
    assert(degree_sequence(g) == d);
    assert(!is_connected(g));
    result.outcome = WitnessOutcome::found;
    result.components = component_count(g);
    result.graph = std::move(g);
    result.method = std::move(method);
    return result;
  };

  if (auto hit = match_gadget(d)) return finish(std::move(hit->second), "gadget:" + hit->first);

  // Switch strategies start from the greedy realization; when that is already
  // disconnected the enumeration stage below finds a witness immediately.
  Graph greedy = havel_hakimi_realize(d);
  if (is_connected(greedy)) {
    if (auto switched = pendant_disconnect(greedy))
      return finish(std::move(*switched), "pendant-switch");
    const int gr = girth(greedy);
    if (gr >= 6 && gr != kInfinity) {
      Graph switched = long_cycle_disconnect(greedy, girth_cycle(greedy));
      if (!is_connected(switched)) return finish(std::move(switched), "long-cycle-switch");
    }
  }

  const int limit = std::min(vertex_limit, kMaxEnumerationVertices);
  if (static_cast<int>(d.size()) > limit) {
    result.outcome = WitnessOutcome::undecided;
    return result;
  }
  std::optional<Graph> found;
  enumerate_labeled(d, limit).for_each([&](const Graph& g) {
    if (!is_connected(g) && g.vertex_count() > 1) {
      found = g;
      return false;
    }
    return true;
  });
  if (found) return finish(std::move(*found), "enumeration");
  result.outcome = WitnessOutcome::none;
  return result;
}

}  // namespace forcibly
