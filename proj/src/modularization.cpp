#include "alignrepair/modularization.hpp"

#include <algorithm>

#include "alignrepair/error.hpp"

namespace alignrepair {

Checkset compute_checkset(const MergedGraph& view) {
  const auto count = view.component_count();
  std::vector<bool> multi(count, false), multi_below(count, false);
  for (auto c : view.bottom_up_order()) {
    multi[c] = view.covers(c).size() >= 2;
    for (auto child : view.component_children(c)) {
      if (multi[child] || multi_below[child]) {
        multi_below[c] = true;
        break;
      }
    }
  }
  Checkset out;
  for (MergedGraph::NodeId n = 0; n < view.node_count(); ++n) {
    auto c = view.component_of(n);
    if (multi[c] && !multi_below[c]) out.classes.push_back(view.class_at(n).id);
  }
  return out;  // node order is id order
}

std::optional<CoreFragments::Local> CoreFragments::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CoreFragments::Local CoreFragments::local(std::string_view id) const {
  auto l = find(id);
  if (!l) throw Error(ErrorKind::unknown_class, "'" + std::string(id) + "' is not a core class");
  return *l;
}

std::size_t CoreFragments::core_count(Side side) const {
  return static_cast<std::size_t>(std::count_if(
      classes_.begin(), classes_.end(), [side](const ClassId& c) { return c.side == side; }));
}

CoreFragments extract_core_fragments(const Ontology& first, const Ontology& second,
                                     const Alignment& alignment) {
  const MergedGraph full(first, second, alignment);
  const MergedGraph bare(first, second, Alignment{});
  using NodeId = MergedGraph::NodeId;
  const auto n = full.node_count();

  CoreFragments f;
  f.checkset_ = compute_checkset(full);
  f.base_checkset_ = compute_checkset(bare);
  f.mapping_count_ = alignment.size();
  f.total_classes_ = n;

  std::vector<bool> core(n, false);
  for (auto [a, b] : full.disjoint_pairs()) core[a] = core[b] = true;
  for (const auto& m : alignment) core[full.node(m.source)] = core[full.node(m.target)] = true;
  for (const auto& id : f.checkset_.classes) core[full.node(id)] = true;
  for (const auto& id : f.base_checkset_.classes) core[full.node(id)] = true;

  std::vector<CoreFragments::Local> local_of(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (!core[v]) continue;
    local_of[v] = static_cast<CoreFragments::Local>(f.classes_.size());
    f.index_.emplace(full.class_at(v).id, local_of[v]);
    f.classes_.push_back(full.class_at(v));
  }
  const auto k = f.classes_.size();
  f.reduced_parents_.assign(k, {});
  f.mapping_out_.assign(k, {});

  // From each core class, walk ontology edges through non-core classes; every
  // core class met ends one mapping-free segment and becomes a reduced edge.
  std::vector<std::uint32_t> stamp(n, 0), depth(n, 0);
  std::uint32_t round = 0;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (!core[start]) continue;
    ++round;
    stack.assign(1, start);
    stamp[start] = round;
    depth[start] = 0;
    std::vector<std::pair<CoreFragments::Local, bool>> found;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& e : full.out_edges(v)) {
        if (e.is_mapping() || stamp[e.to] == round) continue;
        stamp[e.to] = round;
        depth[e.to] = depth[v] + 1;
        if (core[e.to]) {
          found.emplace_back(local_of[e.to], depth[e.to] > 1);
        } else {
          stack.push_back(e.to);
        }
      }
    }
    std::sort(found.begin(), found.end());
    auto from = local_of[start];
    for (auto [to, abbreviated] : found) {
      f.reduced_edges_.push_back({from, to, abbreviated});
      f.reduced_parents_[from].push_back(to);
    }
  }

  for (MappingIndex i = 0; i < alignment.size(); ++i) {
    const auto& m = alignment[i];
    auto s = local_of[full.node(m.source)];
    auto t = local_of[full.node(m.target)];
    if (m.relation != Relation::source_subsumes) f.mapping_out_[s].push_back({s, t, i});
    if (m.relation != Relation::source_subsumed) f.mapping_out_[t].push_back({t, s, i});
  }
  for (auto [a, b] : full.disjoint_pairs()) f.disjoint_pairs_.emplace_back(local_of[a], local_of[b]);
  return f;
}

namespace {

std::vector<bool> reach_from(const CoreFragments& f, const std::vector<bool>& allowed,
                             CoreFragments::Local start) {
  std::vector<bool> seen(f.size(), false);
  std::vector<CoreFragments::Local> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto p : f.reduced_parents(v)) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
    for (const auto& e : f.mapping_edges(v)) {
      if (allowed[e.mapping] && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

std::vector<bool> mask_of(const CoreFragments& f, std::span<const MappingIndex> subset) {
  std::vector<bool> allowed(f.mapping_count(), false);
  for (auto i : subset) allowed.at(i) = true;
  return allowed;
}

}  // namespace

bool fragment_entails(const CoreFragments& fragments, std::span<const MappingIndex> subset,
                      std::string_view a, std::string_view b) {
  auto la = fragments.local(a);
  auto lb = fragments.local(b);
  return reach_from(fragments, mask_of(fragments, subset), la)[lb];
}

std::vector<std::string> fragment_incoherent_classes(const CoreFragments& fragments,
                                                     std::span<const MappingIndex> subset) {
  std::vector<std::string> out;
  if (fragments.disjoint_pairs().empty()) return out;
  auto allowed = mask_of(fragments, subset);
  for (CoreFragments::Local v = 0; v < fragments.size(); ++v) {
    auto seen = reach_from(fragments, allowed, v);
    for (auto [a, b] : fragments.disjoint_pairs()) {
      if (seen[a] && seen[b]) {
        out.push_back(fragments.class_at(v).id);
        break;
      }
    }
  }
  return out;
}

}  // namespace alignrepair
