#include "forcibly/degree_sequence.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "forcibly/graph.hpp"

namespace forcibly {

namespace {

// Guards against pathological inputs like "2^2000000000".
constexpr long long kMaxSequenceLength = 10'000'000;

[[noreturn]] void bad_token(std::string_view token, const char* why) {
  throw std::invalid_argument("bad sequence token '" + std::string(token) + "': " + why);
}

long long parse_number(std::string_view token, std::string_view digits, const char* what) {
  if (digits.empty()) bad_token(token, "missing digits");
  if (digits.front() == '-') bad_token(token, "negative values are not allowed");
  long long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec == std::errc::result_out_of_range) bad_token(token, "value out of range");
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    bad_token(token, what);
  return value;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_) {
    if (d < 0) throw std::invalid_argument("degree entries must be non-negative");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
  sum_ = std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::string DegreeSequence::render() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size();) {
    std::size_t j = i;
    while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(degrees_[i]);
    if (j - i >= 2) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  std::vector<int> degrees;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    i = j;

    std::size_t caret = token.find('^');
    long long degree, repeat = 1;
    if (caret == std::string_view::npos) {
      degree = parse_number(token, token, "expected a non-negative integer");
    } else {
      if (token.find('^', caret + 1) != std::string_view::npos)
        bad_token(token, "expected 'degree^count'");
      degree = parse_number(token, token.substr(0, caret), "expected 'degree^count'");
      repeat = parse_number(token, token.substr(caret + 1), "expected 'degree^count'");
      if (repeat < 1) bad_token(token, "count must be at least 1");
    }
    if (degree > kMaxSequenceLength) bad_token(token, "value out of range");
    if (static_cast<long long>(degrees.size()) + repeat > kMaxSequenceLength)
      throw std::invalid_argument("sequence too long");
    degrees.insert(degrees.end(), static_cast<std::size_t>(repeat), static_cast<int>(degree));
  }
  return DegreeSequence(std::move(degrees));
}

bool is_graphic(const DegreeSequence& seq) {
  const auto& d = seq.degrees();
  const auto n = static_cast<long long>(d.size());
  if (n == 0) return true;
  if (seq.sum() % 2 != 0) return false;
  if (d.front() > n - 1) return false;

  std::vector<long long> prefix(d.size() + 1, 0);
  for (std::size_t i = 0; i < d.size(); ++i) prefix[i + 1] = prefix[i] + d[i];

  // m(k) = number of entries >= k; the sequence is sorted non-increasing, so
  // the threshold only moves left as k grows and one backwards pointer works.
  // Past index k, entries >= k contribute k each and smaller ones themselves.
  long long m = n;
  for (long long k = 1; k <= n; ++k) {
    while (m > 0 && d[static_cast<std::size_t>(m - 1)] < k) --m;
    long long cut = std::max(m, k);
    long long tail = std::max(0LL, m - k) * k +
                     (prefix[static_cast<std::size_t>(n)] - prefix[static_cast<std::size_t>(cut)]);
    if (prefix[static_cast<std::size_t>(k)] > k * (k - 1) + tail) return false;
  }
  return true;
}

const char* to_string(EdgeCountClass c) {
  switch (c) {
    case EdgeCountClass::tree_candidate: return "tree";
    case EdgeCountClass::unicyclic_candidate: return "unicyclic";
    case EdgeCountClass::bicyclic_candidate: return "bicyclic";
    case EdgeCountClass::other: return "other";
  }
  return "other";
}

EdgeCountClass class_by_edge_count(const DegreeSequence& d) {
  const auto n = static_cast<long long>(d.size());
  if (n == 0) return EdgeCountClass::other;
  if (d.sum() == 2 * n - 2) return EdgeCountClass::tree_candidate;
  if (d.sum() == 2 * n) return EdgeCountClass::unicyclic_candidate;
  if (d.sum() == 2 * n + 2) return EdgeCountClass::bicyclic_candidate;
  return EdgeCountClass::other;
}

Graph havel_hakimi_realize(const DegreeSequence& d) {
  if (!is_graphic(d))
    throw std::invalid_argument("sequence is not graphic: " + d.render());
  const int n = static_cast<int>(d.size());
  Graph g(n);
  std::vector<int> residual(d.degrees().begin(), d.degrees().end());

  for (;;) {
    int pivot = -1;
    for (int v = 0; v < n; ++v)
      if (residual[v] > 0 && (pivot == -1 || residual[v] > residual[pivot])) pivot = v;
    if (pivot == -1) break;

    // Candidates sorted by residual descending, index ascending. A vertex with
    // positive residual is never already adjacent to the pivot: every earlier
    // pivot ended at residual zero, and only pivots collect edges actively.
    std::vector<int> order;
    order.reserve(n - 1);
    for (int v = 0; v < n; ++v)
      if (v != pivot && residual[v] > 0) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });

    const int need = residual[pivot];
    assert(static_cast<int>(order.size()) >= need);
    residual[pivot] = 0;
    for (int i = 0; i < need; ++i) {
      assert(!g.has_edge(pivot, order[i]));
      g.add_edge(pivot, order[i]);
      --residual[order[i]];
    }
  }
  return g;
}

}  // namespace forcibly
