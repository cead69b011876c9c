#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alignrepair/alignment.hpp"
#include "alignrepair/conflicts.hpp"

namespace alignrepair {

struct RepairConfig {
  /// Confidence interval for the initial filter; negative disables it.
  double epsilon = -1.0;
  /// Extra simulated removals used to break ties between worst candidates.
  int search_depth = 2;
  /// Split conflicts into independent clusters before and during repair.
  bool use_clusters = true;
};

enum class RemovalCause { filtered, greedy };

const char* to_string(RemovalCause cause) noexcept;

struct Removal {
  MappingIndex mapping;
  RemovalCause cause;
};

struct RepairStats {
  std::size_t input_mappings = 0;
  std::size_t input_conflicts = 0;
  std::size_t filtered_conflicts = 0;
  std::size_t initial_clusters = 0;
  std::size_t clusters_processed = 0;
  std::size_t lookahead_ties = 0;
};

struct RepairResult {
  Alignment kept;
  std::vector<Removal> removed;  // in removal order
  std::size_t resolved_conflicts = 0;
  RepairStats stats;
};

struct FilterResult {
  std::vector<MappingSet> remaining;
  std::vector<MappingIndex> removed;
};

/// Visits sets by descending maximum confidence and drops a set's lowest
/// confidence mapping when c1 + epsilon < c2 - epsilon. Sets that contain a
/// dropped mapping are resolved. Throws Error(invalid_argument) for negative
/// epsilon.
FilterResult filter_conflicts(std::span<const MappingSet> conflicts, const Alignment& alignment,
                              double epsilon);

/// Conflict sets that do not contain `m`.
std::vector<MappingSet> remove_mapping(std::span<const MappingSet> cluster, MappingIndex m);

/// Mappings with maximal occurrence count and, among those, minimal
/// confidence. Ascending.
std::vector<MappingIndex> worst_candidates(std::span<const MappingSet> cluster,
                                           const Alignment& alignment);

/// Number of sets resolved by removing `m`, plus the best follow-up over
/// `depth` further removals drawn from the residual worst candidates.
std::size_t resolved_conflicts(std::span<const MappingSet> cluster, MappingIndex m,
                               const Alignment& alignment, int depth);

/// The mapping the greedy step removes from `cluster`. Throws
/// Error(empty_cluster).
MappingIndex worst_mapping(std::span<const MappingSet> cluster, const Alignment& alignment,
                           int search_depth);

RepairResult repair(const ConflictList& conflicts, const Alignment& alignment,
                    const RepairConfig& config = {});

}  // namespace alignrepair
