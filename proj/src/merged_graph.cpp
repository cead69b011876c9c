#include "alignrepair/merged_graph.hpp"

#include <algorithm>
#include <limits>

#include "alignrepair/error.hpp"

namespace alignrepair {

MergedGraph::MergedGraph(const Ontology& first, const Ontology& second, const Alignment& alignment) {
  ids_.reserve(first.size() + second.size());
  for (const auto& n : first.names()) ids_.push_back({n, Side::first});
  for (const auto& n : second.names()) ids_.push_back({n, Side::second});
  std::sort(ids_.begin(), ids_.end(),
            [](const ClassId& a, const ClassId& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < ids_.size(); ++i) {
    if (ids_[i].id == ids_[i - 1].id) {
      throw Error(ErrorKind::duplicate_class, "class '" + ids_[i].id + "' is declared in both ontologies");
    }
  }
  index_.reserve(ids_.size());
  for (NodeId i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i].id, i);

  out_.assign(ids_.size(), {});
  auto add_ontology = [&](const Ontology& o) {
    std::vector<NodeId> global(o.size());
    for (Ontology::Index i = 0; i < o.size(); ++i) global[i] = index_.at(o.name(i));
    for (Ontology::Index i = 0; i < o.size(); ++i) {
      for (auto p : o.parents(i)) out_[global[i]].push_back({global[p], no_mapping});
    }
    for (auto [a, b] : o.disjoint_pairs()) {
      disjoint_pairs_.emplace_back(std::min(global[a], global[b]), std::max(global[a], global[b]));
    }
  };
  add_ontology(first);
  add_ontology(second);
  std::sort(disjoint_pairs_.begin(), disjoint_pairs_.end());

  mapping_count_ = alignment.size();
  for (MappingIndex k = 0; k < alignment.size(); ++k) {
    const auto& m = alignment[k];
    if (!first.contains(m.source)) {
      throw Error(ErrorKind::dangling_mapping,
                  "mapping " + describe(m) + ": source not in the first ontology");
    }
    if (!second.contains(m.target)) {
      throw Error(ErrorKind::dangling_mapping,
                  "mapping " + describe(m) + ": target not in the second ontology");
    }
    auto s = index_.at(m.source);
    auto t = index_.at(m.target);
    auto label = static_cast<std::int64_t>(k);
    if (m.relation != Relation::source_subsumes) out_[s].push_back({t, label});
    if (m.relation != Relation::source_subsumed) out_[t].push_back({s, label});
  }
  for (auto& edges : out_) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.to != b.to ? a.to < b.to : a.mapping < b.mapping;
    });
  }
  condense();
  close_ancestors();
}

std::optional<MergedGraph::NodeId> MergedGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MergedGraph::NodeId MergedGraph::node(std::string_view id) const {
  auto n = find(id);
  if (!n) throw Error(ErrorKind::unknown_class, "unknown class '" + std::string(id) + "'");
  return *n;
}

void MergedGraph::condense() {
  // Iterative Tarjan. Components are emitted after all components reachable
  // from them, i.e. ancestors before descendants.
  constexpr NodeId unvisited = std::numeric_limits<NodeId>::max();
  const auto n = static_cast<NodeId>(ids_.size());
  std::vector<NodeId> order(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::size_t>> frames;
  component_.assign(n, 0);
  std::vector<std::vector<NodeId>> emitted;
  NodeId counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    frames.emplace_back(root, 0);
    order[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < out_[v].size()) {
        auto w = out_[v][next++].to;
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      const NodeId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == order[done]) {
        std::vector<NodeId> members;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        emitted.push_back(std::move(members));
      }
    }
  }

  // Number components by representative so ids are independent of traversal.
  std::vector<std::size_t> by_rep(emitted.size());
  for (std::size_t i = 0; i < by_rep.size(); ++i) by_rep[i] = i;
  std::sort(by_rep.begin(), by_rep.end(),
            [&](std::size_t a, std::size_t b) { return emitted[a].front() < emitted[b].front(); });
  std::vector<ComponentId> renumber(emitted.size());
  for (std::size_t i = 0; i < by_rep.size(); ++i) renumber[by_rep[i]] = static_cast<ComponentId>(i);

  members_.assign(emitted.size(), {});
  for (std::size_t i = 0; i < emitted.size(); ++i) {
    for (auto v : emitted[i]) component_[v] = renumber[i];
    members_[renumber[i]] = std::move(emitted[i]);
  }
  bottom_up_.clear();
  bottom_up_.reserve(emitted.size());
  for (std::size_t i = emitted.size(); i-- > 0;) bottom_up_.push_back(renumber[i]);

  cparents_.assign(members_.size(), {});
  cchildren_.assign(members_.size(), {});
  for (NodeId v = 0; v < n; ++v) {
    for (const auto& e : out_[v]) {
      auto a = component_[v];
      auto b = component_[e.to];
      if (a != b) cparents_[a].push_back(b);
    }
  }
  for (ComponentId c = 0; c < cparents_.size(); ++c) {
    auto& ps = cparents_[c];
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (auto p : ps) cchildren_[p].push_back(c);
  }
}

void MergedGraph::close_ancestors() {
  const auto count = members_.size();
  ancestors_.assign(count, boost::dynamic_bitset<std::uint64_t>());
  // Ancestors first: walk bottom_up_ backwards.
  for (auto it = bottom_up_.rbegin(); it != bottom_up_.rend(); ++it) {
    auto c = *it;
    auto& bits = ancestors_[c];
    bits.resize(count);
    bits.set(c);
    for (auto p : cparents_[c]) bits |= ancestors_[p];
  }
}

std::vector<MergedGraph::ComponentId> MergedGraph::covers(ComponentId c) const {
  const auto& ps = cparents_[c];
  std::vector<ComponentId> out;
  for (auto p : ps) {
    bool dominated = std::any_of(ps.begin(), ps.end(), [&](ComponentId q) {
      return q != p && ancestors_[q].test(p);
    });
    if (!dominated) out.push_back(p);
  }
  return out;  // component ids are ordered by representative already
}

std::vector<MergedGraph::NodeId> MergedGraph::direct_superclasses(NodeId a) const {
  std::vector<NodeId> out;
  for (auto c : covers(component_[a])) out.push_back(representative(c));
  return out;
}

MergedGraph merged_view(const Ontology& first, const Ontology& second, const Alignment& alignment) {
  return MergedGraph(first, second, alignment);
}

bool entails_subclass(const MergedGraph& view, std::string_view a, std::string_view b) {
  return view.entails(view.node(a), view.node(b));
}

std::vector<ClassId> direct_superclasses(const MergedGraph& view, std::string_view a) {
  std::vector<ClassId> out;
  for (auto n : view.direct_superclasses(view.node(a))) out.push_back(view.class_at(n));
  return out;
}

}  // namespace alignrepair
