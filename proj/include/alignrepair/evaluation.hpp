#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alignrepair/alignment.hpp"
#include "alignrepair/conflicts.hpp"
#include "alignrepair/ontology.hpp"

namespace alignrepair {

struct EvalReport {
  double precision = 1.0;
  double recall = 1.0;
  double f_measure = 1.0;
  std::optional<std::size_t> incoherent_count;
  std::optional<std::size_t> removed_count;
};

/// Every class of either ontology subsumed by both members of a disjoint pair
/// in the full merged graph. Sorted by id.
std::vector<std::string> exhaustive_incoherence(const Ontology& first, const Ontology& second,
                                                const Alignment& alignment);

/// Minimum-cardinality set hitting every conflict set; ties go to the smaller
/// total confidence, then to canonical order. Throws Error(hitting_set_cap)
/// when more than `max_mappings` distinct mappings are involved.
MappingSet brute_force_min_hitting_set(std::span<const MappingSet> conflicts,
                                       const Alignment& alignment, std::size_t max_mappings = 24);

/// Mapping identity ignores confidence. Empty produced gives precision 1,
/// empty reference gives recall 1.
EvalReport precision_recall_fmeasure(const Alignment& produced, const Alignment& reference);

}  // namespace alignrepair
