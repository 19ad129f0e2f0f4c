#include "forcibly/switching.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace forcibly {

namespace {

std::string edge_name(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

std::vector<Edge> normalized(const std::vector<Edge>& edges, const char* which) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument(std::string(which) + " edge " + edge_name({u, v}) +
                                  " is a loop");
    out.push_back(make_edge(u, v));
  }
  std::sort(out.begin(), out.end());
  auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end())
    throw std::invalid_argument(std::string(which) + " edge " + edge_name(*dup) +
                                " listed twice");
  return out;
}

}  // namespace

Graph apply_switch(const Graph& g, const SwitchMove& move) {
  auto removed = normalized(move.removed, "removed");
  auto added = normalized(move.added, "added");
  if (removed.size() != added.size())
    throw std::invalid_argument("switch must remove and add the same number of edges");
  if (removed.size() < 2)
    throw std::invalid_argument("switch must exchange at least two edges");

  std::vector<Edge> overlap;
  std::set_intersection(removed.begin(), removed.end(), added.begin(), added.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::invalid_argument("edge " + edge_name(overlap.front()) +
                                " appears in both removed and added sets");

  std::map<int, int> delta;
  for (auto [u, v] : removed) {
    --delta[u];
    --delta[v];
  }
  for (auto [u, v] : added) {
    ++delta[u];
    ++delta[v];
  }
  for (auto [v, d] : delta)
    if (d != 0)
      throw std::invalid_argument("switch changes the degree of vertex " + std::to_string(v));

  for (auto e : removed)
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("removed edge " + edge_name(e) + " not present");
  for (auto e : added)
    if (g.has_edge(e.first, e.second))
      throw std::invalid_argument("added edge " + edge_name(e) + " already present");

  Graph out = g;
  for (auto [u, v] : removed) out.remove_edge(u, v);
  for (auto [u, v] : added) out.add_edge(u, v);
  assert(degree_sequence(out) == degree_sequence(g));
  return out;
}

namespace {

void require_kind(const BicyclicCore& core, CoreKind kind, const char* op) {
  if (core.kind != kind)
    throw std::invalid_argument(std::string(op) + ": core is a " + to_string(core.kind) +
                                ", expected " + to_string(kind));
}

}  // namespace

Graph sandglass_to_theta(const Graph& g, const BicyclicCore& core) {
  require_kind(core, CoreKind::sandglass, "sandglass_to_theta");
  // Each cycle is listed from its attachment, so entries 1 and 2 exist
  // (cycles have length >= 3) and the edge between them avoids the path.
  const auto& a = core.cycles[0];
  const auto& b = core.cycles[1];
  SwitchMove move{{make_edge(a[1], a[2]), make_edge(b[1], b[2])},
                  {make_edge(a[1], b[1]), make_edge(a[2], b[2])}};
  return apply_switch(g, move);
}

Graph bowtie_normalize(const Graph& g, const BicyclicCore& core) {
  require_kind(core, CoreKind::bowtie, "bowtie_normalize");
  // Cross the two cycles one step away from the hub: the hub keeps degree 4,
  // and the hub-side corners close a triangle with the crossing edge.
  const auto& a = core.cycles[0];
  const auto& b = core.cycles[1];
  SwitchMove move{{make_edge(a[1], a[2]), make_edge(b[1], b[2])},
                  {make_edge(a[1], b[1]), make_edge(b[2], a[2])}};
  return apply_switch(g, move);
}

namespace {

// One normalization round on a theta core with path lengths r <= s <= t.
// Returns the rewritten graph, or nullopt when the core is already Theta(1,2,*)
// or no rewrite applies.
std::optional<Graph> theta_round(const Graph& g, const BicyclicCore& core) {
  const int r = core.r, s = core.s, t = core.t;
  if (r == 1 && s == 2) return std::nullopt;  // normal form
  const auto& pr = core.paths[0];
  const auto& ps = core.paths[1];
  const auto& pt = core.paths[2];
  const int u = pr.front(), v = pr.back();
  if (r >= 2) {
    // Fuse the two shortest paths into a direct u-v edge plus one long path:
    // (r,s,t) -> (1, r+s-1, t).
    SwitchMove move{{make_edge(u, pr[1]), make_edge(ps[ps.size() - 2], v)},
                    {make_edge(u, v), make_edge(pr[1], ps[ps.size() - 2])}};
    return apply_switch(g, move);
  }
  if (s >= 3 && t >= 3) {
    // r == 1: shorten the middle path to 2 by splicing its surplus into the
    // longest path: (1,s,t) -> (1, 2, s+t-2).
    SwitchMove move{{make_edge(ps[1], ps[2]), make_edge(pt[pt.size() - 2], v)},
                    {make_edge(ps[1], v), make_edge(ps[2], pt[pt.size() - 2])}};
    return apply_switch(g, move);
  }
  (void)t;
  return std::nullopt;
}

}  // namespace

Graph theta_normalize(const Graph& g, const BicyclicCore& core) {
  require_kind(core, CoreKind::theta, "theta_normalize");
  Graph current = g;
  BicyclicCore c = core;
  // Each round strictly lowers (r, s), so this terminates; two rounds suffice
  // from any start.
  for (;;) {
    auto next = theta_round(current, c);
    if (!next) return current;
    current = std::move(*next);
    c = bicyclic_core(current);
    if (c.kind != CoreKind::theta)
      throw std::logic_error("theta_normalize: rewrite left a non-theta core");
  }
}

std::optional<Graph> girth_reduce_to_3(const Graph& g) {
  if (structural_class(g) != StructuralClass::unicyclic) return std::nullopt;
  if (g.vertex_count() < 6) return std::nullopt;
  const int k = girth(g);
  if (k < 4 || k > 5) return std::nullopt;

  std::vector<int> cycle = girth_cycle(g);  // the unique cycle
  // Rotate so an attachment vertex (one with a neighbor off the cycle) leads.
  std::set<int> on_cycle(cycle.begin(), cycle.end());
  std::size_t pivot = cycle.size();
  int y = -1;
  for (std::size_t i = 0; i < cycle.size() && pivot == cycle.size(); ++i)
    for (int w : g.neighbors(cycle[i]))
      if (!on_cycle.count(w)) {
        pivot = i;
        y = w;
        break;
      }
  if (pivot == cycle.size()) return std::nullopt;  // bare cycle
  std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(pivot), cycle.end());

  // Pull the attachment across the cycle: the new edge closes a triangle
  // cycle[0], cycle[1], cycle[2], and y re-attaches at cycle[3].
  SwitchMove move{{make_edge(cycle[0], y), make_edge(cycle[2], cycle[3])},
                  {make_edge(cycle[0], cycle[2]), make_edge(cycle[3], y)}};
  Graph out = apply_switch(g, move);
  assert(girth(out) == 3);
  return out;
}

Graph long_cycle_disconnect(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 6)
    throw std::invalid_argument("long_cycle_disconnect needs a cycle of length >= 6");
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != k)
    throw std::invalid_argument("cycle repeats a vertex");
  for (std::size_t i = 0; i < k; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k]))
      throw std::invalid_argument("cycle edge " +
                                  edge_name(make_edge(cycle[i], cycle[(i + 1) % k])) +
                                  " not present");

  // Exchanging these two cycle edges splits the cycle into a triangle
  // cycle[0..2]... actually cycle[1..3] plus the complementary cycle.
  SwitchMove move{{make_edge(cycle[0], cycle[1]), make_edge(cycle[3], cycle[4])},
                  {make_edge(cycle[0], cycle[4]), make_edge(cycle[1], cycle[3])}};
  return apply_switch(g, move);
}

}  // namespace forcibly
