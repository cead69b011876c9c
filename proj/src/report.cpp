#include "alignrepair/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace alignrepair {

double percentage(std::size_t part, std::size_t total) {
  if (total == 0) return 0.0;
  return std::round(1000.0 * static_cast<double>(part) / static_cast<double>(total)) / 10.0;
}

FragmentStats fragment_stats(const CoreFragments& fragments) {
  FragmentStats s;
  s.total_classes = fragments.total_classes();
  s.core_classes = fragments.size();
  s.core_first = fragments.core_count(Side::first);
  s.core_second = fragments.core_count(Side::second);
  s.checkset = fragments.checkset().classes.size();
  s.base_checkset = fragments.base_checkset().classes.size();
  s.reduced_edges = fragments.reduced_edges().size();
  return s;
}

ConflictStats conflict_stats(const ConflictList& conflicts) {
  ConflictStats s;
  s.conflict_sets = conflicts.size();
  auto clusters = disjoint_conflict_clusters(conflicts);
  s.clusters = clusters.size();
  for (const auto& c : clusters) s.largest_cluster = std::max(s.largest_cluster, c.sets.size());
  std::set<MappingIndex> involved;
  for (const auto& c : conflicts) {
    involved.insert(c.mappings.begin(), c.mappings.end());
    ++s.size_histogram[c.mappings.size()];
  }
  s.mappings_in_conflicts = involved.size();
  return s;
}

nlohmann::ordered_json to_json(const FragmentStats& s) {
  nlohmann::ordered_json j;
  j["total_classes"] = s.total_classes;
  j["core_classes"] = s.core_classes;
  j["core_percent"] = percentage(s.core_classes, s.total_classes);
  j["core_first"] = s.core_first;
  j["core_second"] = s.core_second;
  j["checkset"] = s.checkset;
  j["checkset_percent"] = percentage(s.checkset, s.total_classes);
  j["base_checkset"] = s.base_checkset;
  j["reduced_edges"] = s.reduced_edges;
  return j;
}

nlohmann::ordered_json to_json(const ConflictStats& s) {
  nlohmann::ordered_json j;
  j["conflict_sets"] = s.conflict_sets;
  j["clusters"] = s.clusters;
  j["largest_cluster"] = s.largest_cluster;
  j["mappings_in_conflicts"] = s.mappings_in_conflicts;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (auto [size, count] : s.size_histogram) hist[std::to_string(size)] = count;
  j["size_histogram"] = hist;
  return j;
}

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["input"] = {{"classes_first", r.classes_first},
                {"classes_second", r.classes_second},
                {"mappings", r.input_mappings}};
  j["fragments"] = to_json(r.fragments);
  j["conflicts"] = to_json(r.conflicts);
  j["config"] = {{"epsilon", r.config.epsilon},
                 {"search_depth", r.config.search_depth},
                 {"use_clusters", r.config.use_clusters}};
  j["repair"] = {{"removed", r.removed},
                 {"removed_filtered", r.removed_filtered},
                 {"removed_greedy", r.removed - r.removed_filtered},
                 {"kept", r.kept},
                 {"filtered_conflicts", r.repair.filtered_conflicts},
                 {"initial_clusters", r.repair.initial_clusters},
                 {"clusters_processed", r.repair.clusters_processed},
                 {"lookahead_ties", r.repair.lookahead_ties}};
  j["incoherent"] = {{"before", r.incoherent_before}, {"after", r.incoherent_after}};
  if (r.timings) {
    j["timings_ms"] = {{"fragments", r.timings->fragments_ms},
                       {"conflicts", r.timings->conflicts_ms},
                       {"repair", r.timings->repair_ms},
                       {"verify", r.timings->verify_ms}};
  }
  return j;
}

nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = report_schema_version;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f_measure"] = r.f_measure;
  j["incoherent_count"] = r.incoherent_count ? nlohmann::ordered_json(*r.incoherent_count) : nullptr;
  j["removed_count"] = r.removed_count ? nlohmann::ordered_json(*r.removed_count) : nullptr;
  return j;
}

}  // namespace alignrepair
