#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "alignrepair/alignment.hpp"
#include "alignrepair/merged_graph.hpp"
#include "alignrepair/modularization.hpp"

namespace alignrepair {

/// Sorted ascending, no duplicates.
using MappingSet = std::vector<MappingIndex>;

/// The class made incoherent and the disjoint pair it falls under.
struct Witness {
  std::string incoherent_class;
  std::string disjoint_first;
  std::string disjoint_second;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// A minimal set of mappings that makes `witness` incoherent.
struct ConflictSet {
  MappingSet mappings;
  Witness witness;
};

/// Antichain of conflict sets, sorted lexicographically by mapping content.
using ConflictList = std::vector<ConflictSet>;

/// Maximal group of conflict sets connected through shared mappings.
struct Cluster {
  std::vector<ConflictSet> sets;
};

struct ConflictOptions {
  /// Upper bound on path-set combinations examined per witness.
  std::size_t max_candidates_per_witness = 1'000'000;
};

/// Enumerates every minimal conflict set of the alignment the fragments were
/// extracted from. Throws Error(enumeration_cap) when a witness exceeds the
/// configured number of candidate combinations.
ConflictList find_conflict_sets(const CoreFragments& fragments, const Alignment& alignment,
                                const ConflictOptions& options = {});

/// Partition into share-a-mapping connected components, ordered by their
/// first conflict set.
std::vector<Cluster> disjoint_conflict_clusters(const ConflictList& conflicts);

struct IncoherenceCount {
  std::size_t count = 0;
  std::vector<std::string> classes;  // sorted by id
};

IncoherenceCount count_incoherent_classes(const MergedGraph& view);

std::vector<MappingSet> mapping_sets(std::span<const ConflictSet> sets);

}  // namespace alignrepair
