#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forcibly/enumeration.hpp"
#include "forcibly/graph.hpp"

namespace forcibly {

// Two pendant vertices at distance > 3: exchanging their support edges for an
// edge between the pendants splits off an isolated K2 and leaves the rest
// connected (two components total for connected input). Scans pendant pairs
// in ascending id order; nullopt when no pair qualifies.
std::optional<Graph> pendant_disconnect(const Graph& g);

struct GadgetParams {
  int r = 0, s = 0, t = 0;
  int n = 0;
};

// Catalog of disconnected graphs with prescribed degree sequences. Pendants
// are attached in ascending vertex id order so builds are reproducible.
//
//   name       construction                               degree sequence
//   G1-uni     Theta(1,2,2) + K2, pendants (r-3,s-3,t-2)  (r,s,t,2,1^{n-4}),   r+s+t = n+2
//   G2-uni     B(3,3) + K2, n-7 pendants at the hub       (n-3,2^4,1^{n-5}),   n >= 7
//   G3-uni     Theta(1,2,3) + K2, pendants (r-3,s-3,t-2)  (r,s,t,2^2,1^{n-5}), r+s+t = n+1
//   B-star-1   K_{1,n-3} + K2, 3 leaf edges in a path     (n-3,3^2,2^2,1^{n-5}), n >= 7
//   B-star-2   K_{1,n-3} + K2, leaf edges P3 and P2       (n-3,3,2^4,1^{n-6}), n >= 8
//   B-star-3   K_{1,n-4} + K_{1,2}, 3 leaf edges path     (n-4,3^2,2^3,1^{n-6}), n >= 8
//   B-theta-1  (Theta(2,2,2)+uv) + K2, (r-4,s-4,t-2)      (r,s,t,2^2,1^{n-5}), r+s+t = n+3
//   B-theta-2  (Theta(2,2,3)+uv) + K2, (r-4,s-4,t-2)      (r,s,t,2^3,1^{n-6}), r+s+t = n+2
//
// Throws std::invalid_argument on an unknown name or violated constraint.
Graph build_gadget(const std::string& name, const GadgetParams& params);

const std::vector<std::string>& gadget_names();

// Matches d against the catalog patterns in order; returns the gadget name
// and the built graph when one fits.
std::optional<std::pair<std::string, Graph>> match_gadget(const DegreeSequence& d);

enum class WitnessOutcome { found, none, undecided };
const char* to_string(WitnessOutcome o);

struct WitnessResult {
  WitnessOutcome outcome = WitnessOutcome::undecided;
  std::optional<Graph> graph;  // disconnected, degree sequence = d
  std::string method;          // "gadget:<name>", "pendant-switch", "long-cycle-switch", "enumeration"
  int components = 0;
};

// Searches for a disconnected realization of graphic d, trying in order: the
// gadget catalog, pendant / long-cycle switches on the greedy realization,
// exhaustive enumeration. `none` is returned only after enumeration proves
// every realization connected; above the vertex limit with no constructive
// hit the result is `undecided`. Throws std::invalid_argument when d is not
// graphic.
WitnessResult disconnected_witness(const DegreeSequence& d,
                                   int vertex_limit = kDefaultEnumerationLimit);

}  // namespace forcibly
