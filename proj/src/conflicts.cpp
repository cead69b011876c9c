#include "alignrepair/conflicts.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "alignrepair/error.hpp"

namespace alignrepair {

namespace {

using Local = CoreFragments::Local;

struct SetHash {
  std::size_t operator()(const MappingSet& s) const noexcept {
    return boost::hash_range(s.begin(), s.end());
  }
};

bool is_subset(const MappingSet& small, const MappingSet& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

MappingSet with(const MappingSet& s, MappingIndex m) {
  MappingSet out;
  out.reserve(s.size() + 1);
  auto pos = std::lower_bound(s.begin(), s.end(), m);
  if (pos != s.end() && *pos == m) return s;
  out.insert(out.end(), s.begin(), pos);
  out.push_back(m);
  out.insert(out.end(), pos, s.end());
  return out;
}

MappingSet united(const MappingSet& a, const MappingSet& b) {
  MappingSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Minimal mapping sets under which each core class is reachable from one
/// start class. Label-correcting search over antichains: a label is kept only
/// while no subset of it reaches the same node.
class ReachLabels {
 public:
  explicit ReachLabels(const CoreFragments& f) : f_(f), labels_(f.size()) {}

  void run(Local start) {
    for (auto v : touched_) labels_[v].clear();
    touched_.clear();
    std::deque<std::pair<Local, MappingSet>> queue;
    insert(start, {});
    queue.emplace_back(start, MappingSet{});
    while (!queue.empty()) {
      auto [v, s] = std::move(queue.front());
      queue.pop_front();
      const auto& here = labels_[v];
      if (std::find(here.begin(), here.end(), s) == here.end()) continue;  // superseded
      for (auto p : f_.reduced_parents(v)) {
        if (insert(p, s)) queue.emplace_back(p, s);
      }
      for (const auto& e : f_.mapping_edges(v)) {
        auto next = with(s, e.mapping);
        if (insert(e.to, next)) queue.emplace_back(e.to, std::move(next));
      }
    }
  }

  const std::vector<MappingSet>& at(Local v) const { return labels_[v]; }

 private:
  bool insert(Local v, const MappingSet& s) {
    auto& here = labels_[v];
    for (const auto& existing : here) {
      if (is_subset(existing, s)) return false;
    }
    if (here.empty()) touched_.push_back(v);
    std::erase_if(here, [&](const MappingSet& existing) { return is_subset(s, existing); });
    here.push_back(s);
    return true;
  }

  const CoreFragments& f_;
  std::vector<std::vector<MappingSet>> labels_;
  std::vector<Local> touched_;
};

}  // namespace

ConflictList find_conflict_sets(const CoreFragments& fragments, const Alignment& alignment,
                                const ConflictOptions& options) {
  if (alignment.size() != fragments.mapping_count()) {
    throw Error(ErrorKind::invalid_argument, "alignment does not match the fragments");
  }
  std::unordered_map<MappingSet, Witness, SetHash> candidates;
  if (fragments.disjoint_pairs().empty() || alignment.empty()) return {};

  // Every core class is a start: besides the checkset and the disjointness
  // endpoints this covers mapped classes sitting on a cycle, whose
  // subsumers differ between alignment subsets.
  ReachLabels labels(fragments);
  for (Local start = 0; start < fragments.size(); ++start) {
    labels.run(start);
    for (auto [b, c] : fragments.disjoint_pairs()) {
      const auto& to_b = labels.at(b);
      const auto& to_c = labels.at(c);
      if (to_b.empty() || to_c.empty()) continue;
      if (to_b.size() * to_c.size() > options.max_candidates_per_witness) {
        throw Error(ErrorKind::enumeration_cap,
                    "conflict enumeration for class '" + fragments.class_at(start).id + "' exceeds " +
                        std::to_string(options.max_candidates_per_witness) + " candidates");
      }
      for (const auto& pb : to_b) {
        for (const auto& pc : to_c) {
          auto u = united(pb, pc);
          if (u.empty()) {
            throw Error(ErrorKind::incoherent_input, "class '" + fragments.class_at(start).id +
                                                         "' is incoherent without any mapping");
          }
          candidates.try_emplace(std::move(u), Witness{fragments.class_at(start).id,
                                                       fragments.class_at(b).id,
                                                       fragments.class_at(c).id});
        }
      }
    }
  }

  // Keep the inclusion-minimal candidates. Smaller sets first, so a candidate
  // only has to be compared with already accepted sets through shared members.
  std::vector<const std::pair<const MappingSet, Witness>*> order;
  order.reserve(candidates.size());
  for (const auto& entry : candidates) order.push_back(&entry);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });
  ConflictList out;
  std::vector<std::vector<std::size_t>> containing(alignment.size());
  for (const auto* entry : order) {
    const auto& s = entry->first;
    bool dominated = false;
    for (auto m : s) {
      for (auto id : containing[m]) {
        if (is_subset(out[id].mappings, s)) {
          dominated = true;
          break;
        }
      }
      if (dominated) break;
    }
    if (dominated) continue;
    for (auto m : s) containing[m].push_back(out.size());
    out.push_back({s, entry->second});
  }
  std::sort(out.begin(), out.end(),
            [](const ConflictSet& a, const ConflictSet& b) { return a.mappings < b.mappings; });
  return out;
}

std::vector<Cluster> disjoint_conflict_clusters(const ConflictList& conflicts) {
  const auto n = conflicts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::unordered_map<MappingIndex, std::size_t> first_owner;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto m : conflicts[i].mappings) {
      auto [it, fresh] = first_owner.try_emplace(m, i);
      if (!fresh) {
        auto a = root(it->second), b = root(i);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<Cluster> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = root(i);
    auto [it, fresh] = slot.try_emplace(r, out.size());
    if (fresh) out.emplace_back();
    out[it->second].sets.push_back(conflicts[i]);
  }
  return out;
}

IncoherenceCount count_incoherent_classes(const MergedGraph& view) {
  IncoherenceCount out;
  const auto& pairs = view.disjoint_pairs();
  for (MergedGraph::NodeId v = 0; v < view.node_count(); ++v) {
    for (auto [b, c] : pairs) {
      if (view.entails(v, b) && view.entails(v, c)) {
        out.classes.push_back(view.class_at(v).id);
        break;
      }
    }
  }
  out.count = out.classes.size();
  return out;
}

std::vector<MappingSet> mapping_sets(std::span<const ConflictSet> sets) {
  std::vector<MappingSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.mappings);
  return out;
}

}  // namespace alignrepair
