#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "forcibly/graph.hpp"

namespace forcibly {

// Enumeration walks all realizations, so the vertex count is capped. The hard
// cap comes from the 128-bit canonical adjacency key (C(16,2) = 120 bits).
inline constexpr int kDefaultEnumerationLimit = 10;
inline constexpr int kMaxEnumerationVertices = 16;

enum class EnumerationMode { labeled, nonisomorphic };

// Internal-iteration stream over the realizations of a sequence.
//   labeled:       every simple graph where vertex i has degree d_i, once.
//   nonisomorphic: one representative per isomorphism class.
// Construction validates the vertex limit (throws std::runtime_error naming
// it); a non-graphic sequence yields an empty stream.
class RealizationStream {
public:
  RealizationStream(DegreeSequence seq, EnumerationMode mode,
                    int vertex_limit = kDefaultEnumerationLimit);

  // Calls visit for each realization until exhaustion or visit returns false.
  // Returns true iff the stream was exhausted. Single pass: a second call
  // starts over (count keeps accumulating emissions).
  bool for_each(const std::function<bool(const Graph&)>& visit);

  std::uint64_t count() const { return count_; }
  const DegreeSequence& sequence() const { return seq_; }
  EnumerationMode mode() const { return mode_; }

private:
  DegreeSequence seq_;
  EnumerationMode mode_;
  std::uint64_t count_ = 0;
};

RealizationStream enumerate_labeled(const DegreeSequence& d,
                                    int vertex_limit = kDefaultEnumerationLimit);
RealizationStream enumerate_nonisomorphic(const DegreeSequence& d,
                                          int vertex_limit = kDefaultEnumerationLimit);

std::uint64_t count_realizations(const DegreeSequence& d, EnumerationMode mode,
                                 int vertex_limit = kDefaultEnumerationLimit);

// Smallest adjacency bit string over all degree-respecting relabelings,
// packed into two 64-bit words. For graphs of equal vertex count, equal keys
// <=> isomorphic. Requires n <= kMaxEnumerationVertices.
std::array<std::uint64_t, 2> canonical_adjacency_key(const Graph& g);

enum class ForciblyOutcome { holds, refuted, not_graphic };
const char* to_string(ForciblyOutcome o);

struct ForciblyCheck {
  ForciblyOutcome outcome = ForciblyOutcome::not_graphic;
  std::optional<Graph> counterexample;  // present iff refuted
  std::string reason;                   // "", "counterexample", "sum-mismatch", "not-graphic"
  std::uint64_t checked = 0;            // realizations examined
};

// Brute-force test that every realization of d satisfies the predicate.
// Short-circuits on the first violation and returns it. The predicate must be
// isomorphism-invariant (the stream visits one labeling order; the verdict is
// only labeling-independent for invariant predicates).
ForciblyCheck check_forcibly(const DegreeSequence& d,
                             const std::function<bool(const Graph&)>& property,
                             int vertex_limit = kDefaultEnumerationLimit);

// check_forcibly with the structural-class predicates. A sum that already
// rules the class out refutes immediately with reason "sum-mismatch" (every
// realization has the wrong edge count); the counterexample is one greedy
// realization.
ForciblyCheck oracle_forcibly_tree(const DegreeSequence& d,
                                   int vertex_limit = kDefaultEnumerationLimit);
ForciblyCheck oracle_forcibly_unicyclic(const DegreeSequence& d,
                                        int vertex_limit = kDefaultEnumerationLimit);
ForciblyCheck oracle_forcibly_bicyclic(const DegreeSequence& d,
                                       int vertex_limit = kDefaultEnumerationLimit);

}  // namespace forcibly
