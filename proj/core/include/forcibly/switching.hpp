#pragma once

#include <optional>
#include <vector>

#include "forcibly/graph.hpp"

namespace forcibly {

// An edge exchange: delete `removed`, insert `added`. Equal set sizes keep
// every vertex degree unchanged; apply_switch verifies that.
struct SwitchMove {
  std::vector<Edge> removed;
  std::vector<Edge> added;

  SwitchMove inverse() const { return {added, removed}; }
};

// Applies the move to a copy. Throws std::invalid_argument naming the
// offending edge when a removed edge is absent, an added edge is already
// present (or a loop), the sets overlap or differ in size, fewer than two
// edges move, or any vertex would change degree.
Graph apply_switch(const Graph& g, const SwitchMove& move);

// --- degree-preserving rewrites between bicyclic cores ----------------------
// Each takes the graph plus its detected core and returns the rewritten graph
// (a copy). Pendant trees hanging off core vertices ride along untouched.

// Sandglass with cycles C_r, C_s and a connecting path of length t: one edge
// from each cycle is exchanged so the two cycles fuse into a theta with path
// lengths (3, r+s-3, t) in some order. Requires kind == sandglass.
Graph sandglass_to_theta(const Graph& g, const BicyclicCore& core);

// Bowtie B(r,s): the two cycles are rewired into B(3, r+s-3), shrinking one
// cycle to a triangle. B(3,3) maps to itself. Requires kind == bowtie.
Graph bowtie_normalize(const Graph& g, const BicyclicCore& core);

// Theta with path lengths r <= s <= t: repeatedly applies an edge exchange
// that shortens the profile until it reaches (1, 2, r+s+t-3); at most two
// rounds are ever needed. Requires kind == theta; a theta that is already
// (1, 2, *) is returned unchanged.
Graph theta_normalize(const Graph& g, const BicyclicCore& core);

// Connected unicyclic graph with girth 4 or 5, n >= 6, and at least one
// vertex hanging off the cycle: exchanges two edges so the girth drops to 3.
// Returns nullopt when a precondition fails.
std::optional<Graph> girth_reduce_to_3(const Graph& g);

// Exchanges two edges of the given cycle (length >= 6, passed as a vertex
// list) so it pinches into two shorter cycles; on a bare cycle the result is
// disconnected. Degree sequence is always preserved; connectivity of the
// result is the caller's to inspect when the cycle has attachments. Throws
// std::invalid_argument when `cycle` is not a cycle of g or is shorter
// than 6.
Graph long_cycle_disconnect(const Graph& g, const std::vector<int>& cycle);

}  // namespace forcibly
