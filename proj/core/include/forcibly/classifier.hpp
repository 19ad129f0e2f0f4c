#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forcibly/degree_sequence.hpp"
#include "forcibly/enumeration.hpp"

namespace forcibly {

// Closed-form families of forcibly tree / unicyclic / bicyclic sequences.
// A sequence can satisfy several patterns; attribution is first match in the
// declared order (T-star, T-double-star; U1..U3; B1..B5), which is stable.
enum class Family {
  none,
  t_star,
  t_double_star,
  u1,
  u2,
  u3,
  b1,
  b2,
  b3,
  b4,
  b5,
};
const char* to_string(Family f);

struct ForciblyVerdict {
  bool decision = false;
  Family family = Family::none;
  // (r,s,t) for U3/B5, (a,b,0) for T-double-star; absent otherwise.
  std::optional<std::array<int, 3>> params;
  int n = 0;
  std::string reason;  // empty when decision is true
};

// Constant-time membership tests. A positive verdict names the family;
// a negative one carries one of: "not graphic", "sum mismatch", "too small",
// "no family matched".
ForciblyVerdict classify_forcibly_tree(const DegreeSequence& d);
ForciblyVerdict classify_forcibly_unicyclic(const DegreeSequence& d);
ForciblyVerdict classify_forcibly_bicyclic(const DegreeSequence& d);

// Dispatches on class_by_edge_count; sums outside the three classes yield a
// negative verdict with reason "sum matches no class" (after graphicality).
ForciblyVerdict classify_auto(const DegreeSequence& d);

// Every family the sequence satisfies, in attribution order. The decision is
// their OR; the verdict's family is the front. Useful for documenting
// overlaps between clauses.
std::vector<Family> matching_families(const DegreeSequence& d);

// --- classifier vs. brute force ---------------------------------------------

struct CrossCheckResult {
  bool agree = false;
  EdgeCountClass edge_class = EdgeCountClass::other;
  ForciblyVerdict classifier;
  ForciblyCheck oracle;
};

// Runs the classifier for the sum-selected class against the enumeration
// oracle; agree <=> classifier decision matches "every realization in class".
CrossCheckResult cross_check(const DegreeSequence& d,
                             int vertex_limit = kDefaultEnumerationLimit);

enum class SweepClass { tree, unicyclic, bicyclic };
const char* to_string(SweepClass c);
int sweep_min_n(SweepClass c);                       // 2 / 3 / 4
long long sweep_target_sum(SweepClass c, int n);     // 2n-2 / 2n / 2n+2

// All non-increasing sequences of the given length, entries in [0, max_entry],
// fixed sum, visited in decreasing lexicographic order.
void for_each_degree_sequence(int n, long long sum, int max_entry,
                              const std::function<void(const DegreeSequence&)>& visit);

struct SweepTally {
  int n = 0;
  std::uint64_t sequences = 0;
  std::uint64_t graphic = 0;
  std::uint64_t positives = 0;
  std::uint64_t agreements = 0;
  std::uint64_t discrepancies = 0;
};

struct SweepPositive {
  DegreeSequence seq;
  ForciblyVerdict verdict;
};

struct SweepDiscrepancy {
  DegreeSequence seq;
  CrossCheckResult result;
};

struct SweepResult {
  std::vector<SweepTally> per_n;
  std::vector<SweepPositive> positives;        // sweep order
  std::vector<SweepDiscrepancy> discrepancies; // sweep order
};

// Cross-checks every sequence with the class sum for sweep_min_n <= n <= max_n.
// Work fans out over `workers` threads per n; results are reduced in sequence
// order, so the outcome is identical for any worker count. on_tally (optional)
// fires once per completed n.
SweepResult cross_check_sweep(SweepClass cls, int max_n, int workers = 1,
                              int vertex_limit = kDefaultEnumerationLimit,
                              const std::function<void(const SweepTally&)>& on_tally = {});

}  // namespace forcibly
