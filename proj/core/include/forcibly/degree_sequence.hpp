#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace forcibly {

class Graph;

// Non-increasing multiset of vertex degrees. Input order is irrelevant:
// construction sorts, so two sequences compare equal iff the multisets do.
class DegreeSequence {
public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int operator[](std::size_t i) const { return degrees_[i]; }
  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  long long sum() const { return sum_; }

  // Exponent notation with bases in decreasing order: (5,2,2,2,2,2,1) -> "5,2^5,1".
  std::string render() const;

  bool operator==(const DegreeSequence& other) const { return degrees_ == other.degrees_; }
  std::strong_ordering operator<=>(const DegreeSequence& other) const {
    return degrees_ <=> other.degrees_;
  }

private:
  std::vector<int> degrees_;
  long long sum_ = 0;
};

// Parses "d" or "d^c" tokens (d >= 0, c >= 1) separated by commas and/or
// whitespace; empty fields between separators are skipped. Inverse of
// DegreeSequence::render. Throws std::invalid_argument naming the bad token.
DegreeSequence parse_sequence(std::string_view text);

// Erdos-Gallai test: even sum and, for every k in 1..n,
//   sum_{i<=k} d_i  <=  k(k-1) + sum_{i>k} min(d_i, k).
// The empty sequence is graphic (realized by the empty graph).
bool is_graphic(const DegreeSequence& d);

enum class EdgeCountClass { tree_candidate, unicyclic_candidate, bicyclic_candidate, other };
const char* to_string(EdgeCountClass c);

// Classifies by edge count alone (n >= 1): sum 2n-2 -> tree_candidate,
// 2n -> unicyclic_candidate, 2n+2 -> bicyclic_candidate. The empty sequence
// is `other` by convention.
EdgeCountClass class_by_edge_count(const DegreeSequence& d);

// Deterministic greedy realization: repeatedly satisfy the vertex with the
// largest residual degree by connecting it to the highest-residual remaining
// vertices, all ties broken by lowest vertex index. Vertex i of the result
// has degree d_i. Throws std::invalid_argument when d is not graphic.
Graph havel_hakimi_realize(const DegreeSequence& d);

}  // namespace forcibly
