#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alignrepair/alignment.hpp"
#include "alignrepair/merged_graph.hpp"
#include "alignrepair/ontology.hpp"

namespace alignrepair {

/// Classes with at least two direct superclasses and no strictly lower class
/// with that property. Sorted by id.
struct Checkset {
  std::vector<std::string> classes;
};

/// Evaluates the multi-parent minimality condition per named class on the
/// given view. Every member of a qualifying component is included.
Checkset compute_checkset(const MergedGraph& view);

/// Reduced ontologies over which every disjointness conflict of every
/// alignment subset can be found.
///
/// Core classes are the disjointness endpoints, the mapped classes, the
/// checkset of the full alignment, and the minimal multi-parent classes of the
/// mapping-free hierarchy (the last group keeps incoherence visible for
/// alignment subsets whose hierarchy differs from the full one). Reduced
/// edges join core classes whose original connection runs through non-core
/// classes only; mapping edges are added per queried subset.
class CoreFragments {
 public:
  using Local = std::uint32_t;

  struct ReducedEdge {
    Local from;
    Local to;
    bool abbreviated;  // stands for an original path of length > 1
  };

  struct MappingEdge {
    Local from;
    Local to;
    MappingIndex mapping;
  };

  std::size_t size() const noexcept { return classes_.size(); }
  const ClassId& class_at(Local i) const { return classes_[i]; }
  const std::vector<ClassId>& core_classes() const noexcept { return classes_; }
  std::optional<Local> find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }
  /// Throws Error(unknown_class) for non-core classes.
  Local local(std::string_view id) const;

  const std::vector<ReducedEdge>& reduced_edges() const noexcept { return reduced_edges_; }
  std::span<const Local> reduced_parents(Local i) const { return reduced_parents_[i]; }
  /// Directed mapping edges leaving i (equivalences appear in both directions).
  std::span<const MappingEdge> mapping_edges(Local i) const { return mapping_out_[i]; }
  const std::vector<std::pair<Local, Local>>& disjoint_pairs() const noexcept {
    return disjoint_pairs_;
  }

  const Checkset& checkset() const noexcept { return checkset_; }
  /// Minimal multi-parent classes of the hierarchy without mappings.
  const Checkset& base_checkset() const noexcept { return base_checkset_; }
  std::size_t mapping_count() const noexcept { return mapping_count_; }
  std::size_t total_classes() const noexcept { return total_classes_; }
  std::size_t core_count(Side side) const;

  friend CoreFragments extract_core_fragments(const Ontology&, const Ontology&, const Alignment&);

 private:
  std::vector<ClassId> classes_;
  std::unordered_map<std::string, Local> index_;
  std::vector<ReducedEdge> reduced_edges_;
  std::vector<std::vector<Local>> reduced_parents_;
  std::vector<std::vector<MappingEdge>> mapping_out_;
  std::vector<std::pair<Local, Local>> disjoint_pairs_;
  Checkset checkset_;
  Checkset base_checkset_;
  std::size_t mapping_count_ = 0;
  std::size_t total_classes_ = 0;
};

CoreFragments extract_core_fragments(const Ontology& first, const Ontology& second,
                                     const Alignment& alignment);

/// Reachability over reduced edges plus the mapping edges of `subset`.
/// Throws Error(unknown_class) when a or b is not a core class.
bool fragment_entails(const CoreFragments& fragments, std::span<const MappingIndex> subset,
                      std::string_view a, std::string_view b);

/// All core classes subsumed by both members of some disjoint pair when only
/// `subset` is added to the fragments. Sorted by id.
std::vector<std::string> fragment_incoherent_classes(const CoreFragments& fragments,
                                                     std::span<const MappingIndex> subset);

}  // namespace alignrepair
