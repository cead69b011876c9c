#include "alignrepair/evaluation.hpp"

#include <algorithm>
#include <cstdint>

#include "alignrepair/error.hpp"
#include "alignrepair/merged_graph.hpp"

namespace alignrepair {

std::vector<std::string> exhaustive_incoherence(const Ontology& first, const Ontology& second,
                                                const Alignment& alignment) {
  return count_incoherent_classes(MergedGraph(first, second, alignment)).classes;
}

MappingSet brute_force_min_hitting_set(std::span<const MappingSet> conflicts,
                                       const Alignment& alignment, std::size_t max_mappings) {
  MappingSet universe;
  for (const auto& s : conflicts) universe.insert(universe.end(), s.begin(), s.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > max_mappings || universe.size() >= 64) {
    throw Error(ErrorKind::hitting_set_cap,
                std::to_string(universe.size()) + " distinct mappings exceed the hitting-set cap of " +
                    std::to_string(max_mappings));
  }
  if (conflicts.empty()) return {};

  const auto n = universe.size();
  std::vector<std::uint64_t> masks;
  for (const auto& s : conflicts) {
    std::uint64_t mask = 0;
    for (auto m : s) {
      auto pos = std::lower_bound(universe.begin(), universe.end(), m) - universe.begin();
      mask |= std::uint64_t{1} << pos;
    }
    masks.push_back(mask);
  }
  auto hits_all = [&](std::uint64_t chosen) {
    return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & chosen) != 0; });
  };
  auto members = [&](std::uint64_t chosen) {
    MappingSet out;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen >> i & 1) out.push_back(universe[i]);
    }
    return out;
  };
  auto weight = [&](const MappingSet& s) {
    double w = 0;
    for (auto m : s) w += alignment[m].confidence;
    return w;
  };

  for (std::size_t k = 1; k <= n; ++k) {
    bool found = false;
    MappingSet best;
    double best_weight = 0;
    // Gosper's hack over all k-subsets of the universe.
    std::uint64_t chosen = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (chosen < limit) {
      if (hits_all(chosen)) {
        auto s = members(chosen);
        double w = weight(s);
        if (!found || w < best_weight || (w == best_weight && s < best)) {
          found = true;
          best = std::move(s);
          best_weight = w;
        }
      }
      std::uint64_t low = chosen & (~chosen + 1);
      std::uint64_t ripple = chosen + low;
      chosen = (((ripple ^ chosen) >> 2) / low) | ripple;
    }
    if (found) return best;
  }
  return universe;
}

EvalReport precision_recall_fmeasure(const Alignment& produced, const Alignment& reference) {
  std::size_t correct = 0;
  for (const auto& m : produced) {
    if (reference.contains(m)) ++correct;
  }
  EvalReport r;
  r.precision = produced.empty() ? 1.0 : static_cast<double>(correct) / produced.size();
  r.recall = reference.empty() ? 1.0 : static_cast<double>(correct) / reference.size();
  r.f_measure = r.precision + r.recall > 0
                    ? 2 * r.precision * r.recall / (r.precision + r.recall)
                    : 0.0;
  return r;
}

}  // namespace alignrepair
