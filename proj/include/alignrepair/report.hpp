#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "alignrepair/conflicts.hpp"
#include "alignrepair/evaluation.hpp"
#include "alignrepair/modularization.hpp"
#include "alignrepair/repair.hpp"

namespace alignrepair {

inline constexpr int report_schema_version = 1;

/// 100 * part / total rounded to one decimal; 0 when total is 0.
double percentage(std::size_t part, std::size_t total);

struct FragmentStats {
  std::size_t total_classes = 0;
  std::size_t core_classes = 0;
  std::size_t core_first = 0;
  std::size_t core_second = 0;
  std::size_t checkset = 0;
  std::size_t base_checkset = 0;
  std::size_t reduced_edges = 0;
};

FragmentStats fragment_stats(const CoreFragments& fragments);

struct ConflictStats {
  std::size_t conflict_sets = 0;
  std::size_t clusters = 0;
  std::size_t largest_cluster = 0;
  std::size_t mappings_in_conflicts = 0;
  std::map<std::size_t, std::size_t> size_histogram;  // set size -> count
};

ConflictStats conflict_stats(const ConflictList& conflicts);

struct PhaseTimings {
  double fragments_ms = 0;
  double conflicts_ms = 0;
  double repair_ms = 0;
  double verify_ms = 0;
};

struct RunReport {
  std::size_t classes_first = 0;
  std::size_t classes_second = 0;
  std::size_t input_mappings = 0;
  FragmentStats fragments;
  ConflictStats conflicts;
  RepairConfig config;
  RepairStats repair;
  std::size_t removed = 0;
  std::size_t removed_filtered = 0;
  std::size_t kept = 0;
  std::size_t incoherent_before = 0;
  std::size_t incoherent_after = 0;
  std::optional<PhaseTimings> timings;
};

nlohmann::ordered_json to_json(const FragmentStats& stats);
nlohmann::ordered_json to_json(const ConflictStats& stats);
nlohmann::ordered_json to_json(const RunReport& report);
nlohmann::ordered_json to_json(const EvalReport& report);

}  // namespace alignrepair
