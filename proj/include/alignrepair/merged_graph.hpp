#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "alignrepair/alignment.hpp"
#include "alignrepair/ontology.hpp"

namespace alignrepair {

/// Combined subsumption graph of two ontologies and an alignment.
///
/// Nodes are the classes of both ontologies in lexicographic id order.
/// Equivalence mappings contribute two directed edges, subsumption mappings
/// one; every mapping edge remembers the mapping it came from. Strongly
/// connected components are condensed and an ancestor set is precomputed per
/// component, so subsumption queries are a single bit test.
class MergedGraph {
 public:
  using NodeId = std::uint32_t;
  using ComponentId = std::uint32_t;
  static constexpr std::int64_t no_mapping = -1;

  struct Edge {
    NodeId to;
    std::int64_t mapping;  // index into the alignment, or no_mapping

    bool is_mapping() const noexcept { return mapping != no_mapping; }
  };

  MergedGraph(const Ontology& first, const Ontology& second, const Alignment& alignment);

  std::size_t node_count() const noexcept { return ids_.size(); }
  const ClassId& class_at(NodeId n) const { return ids_[n]; }
  std::optional<NodeId> find(std::string_view id) const;
  /// Throws Error(unknown_class).
  NodeId node(std::string_view id) const;

  std::span<const Edge> out_edges(NodeId n) const { return out_[n]; }
  /// Disjoint pairs of both ontologies as node pairs (a < b), sorted.
  const std::vector<std::pair<NodeId, NodeId>>& disjoint_pairs() const noexcept {
    return disjoint_pairs_;
  }
  std::size_t mapping_count() const noexcept { return mapping_count_; }

  ComponentId component_of(NodeId n) const { return component_[n]; }
  std::size_t component_count() const noexcept { return members_.size(); }
  std::span<const NodeId> members(ComponentId c) const { return members_[c]; }
  /// Lexicographically smallest member.
  NodeId representative(ComponentId c) const { return members_[c].front(); }
  /// Condensation edges (deduplicated), child component to parent component.
  std::span<const ComponentId> component_parents(ComponentId c) const { return cparents_[c]; }
  std::span<const ComponentId> component_children(ComponentId c) const { return cchildren_[c]; }
  /// Components in an order where every component precedes its ancestors.
  std::span<const ComponentId> bottom_up_order() const { return bottom_up_; }

  /// a is subsumed by b (reflexive, transitive).
  bool entails(NodeId a, NodeId b) const {
    return ancestors_[component_[a]].test(component_[b]);
  }
  bool component_entails(ComponentId a, ComponentId b) const { return ancestors_[a].test(b); }

  /// Components covering c in the condensation order, ascending by representative.
  std::vector<ComponentId> covers(ComponentId c) const;
  /// Representatives of the components covering a's component, in id order.
  std::vector<NodeId> direct_superclasses(NodeId a) const;

 private:
  void condense();
  void close_ancestors();

  std::vector<ClassId> ids_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::pair<NodeId, NodeId>> disjoint_pairs_;
  std::size_t mapping_count_ = 0;

  std::vector<ComponentId> component_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<std::vector<ComponentId>> cparents_;
  std::vector<std::vector<ComponentId>> cchildren_;
  std::vector<ComponentId> bottom_up_;
  std::vector<boost::dynamic_bitset<std::uint64_t>> ancestors_;
};

/// Builds the merged view. Throws Error(dangling_mapping) when a mapping
/// endpoint is missing from its ontology and Error(duplicate_class) when an
/// id is declared in both ontologies.
MergedGraph merged_view(const Ontology& first, const Ontology& second, const Alignment& alignment);

/// Throws Error(unknown_class) for ids outside the view.
bool entails_subclass(const MergedGraph& view, std::string_view a, std::string_view b);
std::vector<ClassId> direct_superclasses(const MergedGraph& view, std::string_view a);

}  // namespace alignrepair
