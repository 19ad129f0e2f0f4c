#include "forcibly/classifier.hpp"

#include <atomic>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace forcibly {

namespace {

bool all_ones_from(const std::vector<int>& d, std::size_t from) {
  for (std::size_t i = from; i < d.size(); ++i)
    if (d[i] != 1) return false;
  return true;
}

bool run_of_twos(const std::vector<int>& d, std::size_t from, std::size_t count) {
  if (from + count > d.size()) return false;
  for (std::size_t i = from; i < from + count; ++i)
    if (d[i] != 2) return false;
  return true;
}

// Family matchers assume a graphic sequence with the right sum; they only
// test the shape. Keeping them tiny keeps the family definitions readable.

bool match_t_star(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 1 && d[0] == n - 1 && all_ones_from(d, 1);
}

bool match_t_double_star(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 4 && d[1] >= 2 && static_cast<long long>(d[0]) + d[1] == n && all_ones_from(d, 2);
}

bool match_u1(const std::vector<int>& d) {
  static const std::vector<int> a{2, 2, 2, 2, 2};
  static const std::vector<int> b{3, 2, 2, 2, 2, 1};
  return d == a || d == b;
}

bool match_u2(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 4 && d[0] == n - 2 && run_of_twos(d, 1, 3) && all_ones_from(d, 4);
}

bool match_u3(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 3 && d[2] >= 2 && all_ones_from(d, 3) &&
         static_cast<long long>(d[0]) + d[1] + d[2] == n + 3;
}

bool match_b1(const std::vector<int>& d) {
  static const std::vector<std::vector<int>> literals{
      {3, 3, 2, 2, 2, 2},    {3, 3, 3, 2, 2, 1},       {3, 3, 3, 2, 2, 2, 1},
      {4, 2, 2, 2, 2, 2, 2}, {4, 3, 2, 2, 2, 2, 1},    {5, 2, 2, 2, 2, 2, 2, 1},
  };
  for (const auto& lit : literals)
    if (d == lit) return true;
  return false;
}

bool match_b2(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 5 && d[0] == n - 1 && run_of_twos(d, 1, 4) && all_ones_from(d, 5);
}

bool match_b3(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 6 && d[0] == n - 2 && run_of_twos(d, 1, 5) && all_ones_from(d, 6);
}

bool match_b4(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 5 && d[0] == n - 2 && d[1] == 3 && run_of_twos(d, 2, 3) && all_ones_from(d, 5);
}

bool match_b5(const std::vector<int>& d) {
  const auto n = static_cast<long long>(d.size());
  return n >= 4 && d[1] >= 3 && d[2] >= 2 && d[3] == 2 && all_ones_from(d, 4) &&
         static_cast<long long>(d[0]) + d[1] + d[2] == n + 4;
}

struct FamilyEntry {
  Family family;
  bool (*match)(const std::vector<int>&);
  // params recorded as (d0,d1,d2) triples where the clause binds them
  bool has_params;
};

constexpr int kTreeFamilies = 2;
const FamilyEntry kFamilies[] = {
    {Family::t_star, match_t_star, false},
    {Family::t_double_star, match_t_double_star, true},
    {Family::u1, match_u1, false},
    {Family::u2, match_u2, false},
    {Family::u3, match_u3, true},
    {Family::b1, match_b1, false},
    {Family::b2, match_b2, false},
    {Family::b3, match_b3, false},
    {Family::b4, match_b4, false},
    {Family::b5, match_b5, true},
};

ForciblyVerdict classify_in(const DegreeSequence& d, long long target_sum, int min_n,
                            std::size_t first_family, std::size_t family_count) {
  ForciblyVerdict v;
  v.n = static_cast<int>(d.size());
  if (!is_graphic(d)) {
    v.reason = "not graphic";
    return v;
  }
  if (d.sum() != target_sum) {
    v.reason = "sum mismatch";
    return v;
  }
  if (v.n < min_n) {
    v.reason = "too small";
    return v;
  }
  for (std::size_t i = first_family; i < first_family + family_count; ++i) {
    if (!kFamilies[i].match(d.degrees())) continue;
    v.decision = true;
    v.family = kFamilies[i].family;
    if (kFamilies[i].has_params) {
      if (v.family == Family::t_double_star)
        v.params = std::array<int, 3>{d[0], d[1], 0};
      else
        v.params = std::array<int, 3>{d[0], d[1], d[2]};
    }
    assert(d.sum() == target_sum);
    return v;
  }
  v.reason = "no family matched";
  return v;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::none: return "none";
    case Family::t_star: return "T-star";
    case Family::t_double_star: return "T-double-star";
    case Family::u1: return "U1";
    case Family::u2: return "U2";
    case Family::u3: return "U3";
    case Family::b1: return "B1";
    case Family::b2: return "B2";
    case Family::b3: return "B3";
    case Family::b4: return "B4";
    case Family::b5: return "B5";
  }
  return "none";
}

ForciblyVerdict classify_forcibly_tree(const DegreeSequence& d) {
  const auto n = static_cast<long long>(d.size());
  return classify_in(d, 2 * n - 2, 1, 0, kTreeFamilies);
}

ForciblyVerdict classify_forcibly_unicyclic(const DegreeSequence& d) {
  const auto n = static_cast<long long>(d.size());
  return classify_in(d, 2 * n, 3, 2, 3);
}

ForciblyVerdict classify_forcibly_bicyclic(const DegreeSequence& d) {
  const auto n = static_cast<long long>(d.size());
  return classify_in(d, 2 * n + 2, 4, 5, 5);
}

ForciblyVerdict classify_auto(const DegreeSequence& d) {
  switch (class_by_edge_count(d)) {
    case EdgeCountClass::tree_candidate: return classify_forcibly_tree(d);
    case EdgeCountClass::unicyclic_candidate: return classify_forcibly_unicyclic(d);
    case EdgeCountClass::bicyclic_candidate: return classify_forcibly_bicyclic(d);
    case EdgeCountClass::other: break;
  }
  ForciblyVerdict v;
  v.n = static_cast<int>(d.size());
  v.reason = is_graphic(d) ? "sum matches no class" : "not graphic";
  return v;
}

std::vector<Family> matching_families(const DegreeSequence& d) {
  std::vector<Family> out;
  if (!is_graphic(d)) return out;
  const auto n = static_cast<long long>(d.size());
  const long long sum = d.sum();
  std::size_t first = 0, count = 0;
  if (sum == 2 * n - 2 && n >= 1) first = 0, count = kTreeFamilies;
  else if (sum == 2 * n && n >= 3) first = 2, count = 3;
  else if (sum == 2 * n + 2 && n >= 4) first = 5, count = 5;
  for (std::size_t i = first; i < first + count; ++i)
    if (kFamilies[i].match(d.degrees())) out.push_back(kFamilies[i].family);
  return out;
}

CrossCheckResult cross_check(const DegreeSequence& d, int vertex_limit) {
  CrossCheckResult r;
  r.edge_class = class_by_edge_count(d);
  switch (r.edge_class) {
    case EdgeCountClass::tree_candidate:
      r.classifier = classify_forcibly_tree(d);
      r.oracle = oracle_forcibly_tree(d, vertex_limit);
      break;
    case EdgeCountClass::unicyclic_candidate:
      r.classifier = classify_forcibly_unicyclic(d);
      r.oracle = oracle_forcibly_unicyclic(d, vertex_limit);
      break;
    case EdgeCountClass::bicyclic_candidate:
      r.classifier = classify_forcibly_bicyclic(d);
      r.oracle = oracle_forcibly_bicyclic(d, vertex_limit);
      break;
    case EdgeCountClass::other:
      r.classifier = classify_auto(d);
      if (is_graphic(d)) {
        r.oracle.outcome = ForciblyOutcome::refuted;
        r.oracle.reason = "sum-mismatch";
        r.oracle.counterexample = havel_hakimi_realize(d);
      } else {
        r.oracle = {ForciblyOutcome::not_graphic, std::nullopt, "not-graphic", 0};
      }
      break;
  }
  r.agree = r.classifier.decision == (r.oracle.outcome == ForciblyOutcome::holds);
  return r;
}

const char* to_string(SweepClass c) {
  switch (c) {
    case SweepClass::tree: return "tree";
    case SweepClass::unicyclic: return "unicyclic";
    case SweepClass::bicyclic: return "bicyclic";
  }
  return "tree";
}

int sweep_min_n(SweepClass c) {
  switch (c) {
    case SweepClass::tree: return 2;
    case SweepClass::unicyclic: return 3;
    case SweepClass::bicyclic: return 4;
  }
  return 2;
}

long long sweep_target_sum(SweepClass c, int n) {
  switch (c) {
    case SweepClass::tree: return 2LL * n - 2;
    case SweepClass::unicyclic: return 2LL * n;
    case SweepClass::bicyclic: return 2LL * n + 2;
  }
  return 0;
}

namespace {

void gen_sequences(std::vector<int>& cur, std::size_t pos, int prev_max, long long rem,
                   const std::function<void(const DegreeSequence&)>& visit) {
  const auto n = cur.size();
  if (pos == n) {
    assert(rem == 0);
    visit(DegreeSequence(cur));
    return;
  }
  const long long slots_after = static_cast<long long>(n - pos - 1);
  for (long long v = std::min<long long>(prev_max, rem); v >= 0; --v) {
    if (rem - v > v * slots_after) break;  // smaller v cannot absorb the rest either
    cur[pos] = static_cast<int>(v);
    gen_sequences(cur, pos + 1, static_cast<int>(v), rem - v, visit);
  }
}

}  // namespace

void for_each_degree_sequence(int n, long long sum, int max_entry,
                              const std::function<void(const DegreeSequence&)>& visit) {
  if (n < 0 || sum < 0) return;
  if (n == 0) {
    if (sum == 0) visit(DegreeSequence{});
    return;
  }
  std::vector<int> cur(static_cast<std::size_t>(n));
  gen_sequences(cur, 0, max_entry, sum, visit);
}

SweepResult cross_check_sweep(SweepClass cls, int max_n, int workers, int vertex_limit,
                              const std::function<void(const SweepTally&)>& on_tally) {
  const int hard_limit = std::min(vertex_limit, kMaxEnumerationVertices);
  if (max_n > hard_limit)
    throw std::runtime_error("sweep of n=" + std::to_string(max_n) +
                             " exceeds the enumeration limit of " + std::to_string(hard_limit));
  SweepResult result;
  for (int n = sweep_min_n(cls); n <= max_n; ++n) {
    std::vector<DegreeSequence> seqs;
    for_each_degree_sequence(n, sweep_target_sum(cls, n), n - 1,
                             [&](const DegreeSequence& d) { seqs.push_back(d); });

    std::vector<CrossCheckResult> checked(seqs.size());
    if (workers <= 1 || seqs.size() <= 1) {
      for (std::size_t i = 0; i < seqs.size(); ++i) checked[i] = cross_check(seqs[i], vertex_limit);
    } else {
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= seqs.size()) return;
          checked[i] = cross_check(seqs[i], vertex_limit);
        }
      };
      std::vector<std::thread> pool;
      const int spawn = std::min<int>(workers, static_cast<int>(seqs.size()));
      pool.reserve(static_cast<std::size_t>(spawn));
      for (int w = 0; w < spawn; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    SweepTally tally;
    tally.n = n;
    tally.sequences = seqs.size();
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      const auto& r = checked[i];
      if (r.oracle.outcome != ForciblyOutcome::not_graphic) ++tally.graphic;
      if (r.classifier.decision) {
        ++tally.positives;
        result.positives.push_back({seqs[i], r.classifier});
      }
      if (r.agree) {
        ++tally.agreements;
      } else {
        ++tally.discrepancies;
        result.discrepancies.push_back({seqs[i], r});
      }
    }
    result.per_n.push_back(tally);
    if (on_tally) on_tally(tally);
  }
  return result;
}

}  // namespace forcibly
