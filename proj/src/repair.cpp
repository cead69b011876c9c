#include "alignrepair/repair.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "alignrepair/error.hpp"

namespace alignrepair {

const char* to_string(RemovalCause cause) noexcept {
  return cause == RemovalCause::filtered ? "filtered" : "greedy";
}

namespace {

bool contains(const MappingSet& s, MappingIndex m) {
  return std::binary_search(s.begin(), s.end(), m);
}

}  // namespace

FilterResult filter_conflicts(std::span<const MappingSet> conflicts, const Alignment& alignment,
                              double epsilon) {
  if (!(epsilon >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "confidence interval must be non-negative");
  }
  auto conf = [&](MappingIndex m) { return alignment[m].confidence; };

  std::vector<double> highest(conflicts.size(), 0.0);
  for (std::size_t i = 0; i < conflicts.size(); ++i) {
    for (auto m : conflicts[i]) highest[i] = std::max(highest[i], conf(m));
  }
  std::vector<std::size_t> order(conflicts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return highest[a] > highest[b]; });

  FilterResult out;
  std::vector<bool> dropped(alignment.size(), false);
  auto resolved = [&](const MappingSet& s) {
    return std::any_of(s.begin(), s.end(), [&](MappingIndex m) { return dropped[m]; });
  };
  for (auto i : order) {
    const auto& s = conflicts[i];
    if (s.size() < 2 || resolved(s)) continue;
    // Lowest and second lowest confidence; equal lowest values keep the
    // canonically first mapping as the lowest.
    MappingIndex lowest = s[0];
    for (auto m : s) {
      if (conf(m) < conf(lowest)) lowest = m;
    }
    double second = 2.0;
    for (auto m : s) {
      if (m != lowest) second = std::min(second, conf(m));
    }
    double c1 = conf(lowest);
    if (c1 + epsilon < second - epsilon) {
      dropped[lowest] = true;
      out.removed.push_back(lowest);
    }
  }
  for (const auto& s : conflicts) {
    if (!resolved(s)) out.remaining.push_back(s);
  }
  return out;
}

std::vector<MappingSet> remove_mapping(std::span<const MappingSet> cluster, MappingIndex m) {
  std::vector<MappingSet> out;
  for (const auto& s : cluster) {
    if (!contains(s, m)) out.push_back(s);
  }
  return out;
}

std::vector<MappingIndex> worst_candidates(std::span<const MappingSet> cluster,
                                           const Alignment& alignment) {
  std::map<MappingIndex, std::size_t> count;
  for (const auto& s : cluster) {
    for (auto m : s) ++count[m];
  }
  std::size_t max_count = 0;
  for (auto [m, c] : count) max_count = std::max(max_count, c);
  double min_conf = 2.0;
  for (auto [m, c] : count) {
    if (c == max_count) min_conf = std::min(min_conf, alignment[m].confidence);
  }
  std::vector<MappingIndex> out;
  for (auto [m, c] : count) {
    if (c == max_count && alignment[m].confidence == min_conf) out.push_back(m);
  }
  return out;
}

std::size_t resolved_conflicts(std::span<const MappingSet> cluster, MappingIndex m,
                               const Alignment& alignment, int depth) {
  auto residual = remove_mapping(cluster, m);
  std::size_t here = cluster.size() - residual.size();
  if (depth <= 0 || residual.empty()) return here;
  std::size_t best = 0;
  for (auto next : worst_candidates(residual, alignment)) {
    best = std::max(best, resolved_conflicts(residual, next, alignment, depth - 1));
  }
  return here + best;
}

namespace {

struct Choice {
  MappingIndex mapping;
  bool tie;
};

Choice choose_worst(std::span<const MappingSet> cluster, const Alignment& alignment,
                    int search_depth) {
  if (cluster.empty()) throw Error(ErrorKind::empty_cluster, "no conflict set to resolve");
  auto candidates = worst_candidates(cluster, alignment);
  if (candidates.size() == 1) return {candidates.front(), false};
  MappingIndex best = candidates.front();
  std::size_t best_resolved = 0;
  for (auto m : candidates) {
    auto r = resolved_conflicts(cluster, m, alignment, search_depth);
    if (r > best_resolved) {
      best = m;
      best_resolved = r;
    }
  }
  return {best, true};
}

/// Sequential clusters, ordered by their lexicographically first set.
void split_into(std::vector<std::vector<MappingSet>>& pool, std::vector<MappingSet> sets) {
  ConflictList as_list;
  as_list.reserve(sets.size());
  for (auto& s : sets) as_list.push_back({std::move(s), {}});
  for (auto& cluster : disjoint_conflict_clusters(as_list)) pool.push_back(mapping_sets(cluster.sets));
}

}  // namespace

MappingIndex worst_mapping(std::span<const MappingSet> cluster, const Alignment& alignment,
                           int search_depth) {
  return choose_worst(cluster, alignment, search_depth).mapping;
}

RepairResult repair(const ConflictList& conflicts, const Alignment& alignment,
                    const RepairConfig& config) {
  if (config.search_depth < 0) {
    throw Error(ErrorKind::invalid_argument, "search depth must be non-negative");
  }
  RepairResult result;
  result.stats.input_mappings = alignment.size();
  result.stats.input_conflicts = conflicts.size();

  auto sets = mapping_sets(conflicts);
  for (const auto& s : sets) {
    if (s.empty() || s.back() >= alignment.size()) {
      throw Error(ErrorKind::invalid_argument, "conflict set does not fit the alignment");
    }
  }

  if (config.epsilon >= 0.0) {
    auto filtered = filter_conflicts(sets, alignment, config.epsilon);
    for (auto m : filtered.removed) result.removed.push_back({m, RemovalCause::filtered});
    result.stats.filtered_conflicts = sets.size() - filtered.remaining.size();
    sets = std::move(filtered.remaining);
  }

  // Pending clusters; always work on the one whose first set sorts lowest.
  std::vector<std::vector<MappingSet>> pool;
  if (config.use_clusters) {
    split_into(pool, std::move(sets));
  } else if (!sets.empty()) {
    pool.push_back(std::move(sets));
  }
  result.stats.initial_clusters = pool.size();

  while (!pool.empty()) {
    auto it = std::min_element(pool.begin(), pool.end(),
                               [](const auto& a, const auto& b) { return a.front() < b.front(); });
    auto cluster = std::move(*it);
    pool.erase(it);
    ++result.stats.clusters_processed;

    auto choice = choose_worst(cluster, alignment, config.search_depth);
    if (choice.tie) ++result.stats.lookahead_ties;
    result.removed.push_back({choice.mapping, RemovalCause::greedy});
    auto residue = remove_mapping(cluster, choice.mapping);
    if (residue.empty()) continue;
    if (config.use_clusters) {
      split_into(pool, std::move(residue));
    } else {
      pool.push_back(std::move(residue));
    }
  }

  std::vector<MappingIndex> removed;
  for (const auto& r : result.removed) removed.push_back(r.mapping);
  result.kept = alignment.without(removed);
  result.resolved_conflicts = conflicts.size();
  return result;
}

}  // namespace alignrepair
