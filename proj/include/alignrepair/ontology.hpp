#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace alignrepair {

enum class Side : std::uint8_t { first = 1, second = 2 };

struct ClassId {
  std::string id;
  Side side = Side::first;

  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// One line of an ontology description.
struct Statement {
  enum class Kind { declare_class, subclass, disjoint };

  Kind kind = Kind::declare_class;
  std::string first;
  std::string second;  // parent for subclass, partner for disjoint
  std::size_t line = 0;

  static Statement declare(std::string id, std::size_t line = 0) {
    return {Kind::declare_class, std::move(id), {}, line};
  }
  static Statement subclass(std::string child, std::string parent, std::size_t line = 0) {
    return {Kind::subclass, std::move(child), std::move(parent), line};
  }
  static Statement disjoint(std::string a, std::string b, std::size_t line = 0) {
    return {Kind::disjoint, std::move(a), std::move(b), line};
  }
};

/// A validated, immutable class hierarchy with disjointness axioms.
///
/// Classes are indexed 0..size()-1 in lexicographic id order. The subclass
/// relation is acyclic and no class is subsumed by two disjoint classes.
class Ontology {
 public:
  using Index = std::uint32_t;

  Ontology() = default;

  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Index i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Index> find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }

  std::span<const Index> parents(Index i) const { return parents_[i]; }
  std::span<const Index> children(Index i) const { return children_[i]; }
  std::span<const Index> disjoint_with(Index i) const { return disjoint_with_[i]; }

  /// Pairs (a, b) with a < b, sorted.
  const std::vector<std::pair<Index, Index>>& disjoint_pairs() const noexcept {
    return disjoint_pairs_;
  }
  std::size_t edge_count() const noexcept { return edge_count_; }

  friend Ontology build_ontology(Side side, std::span<const Statement> statements);

 private:
  Side side_ = Side::first;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::vector<Index>> parents_;
  std::vector<std::vector<Index>> children_;
  std::vector<std::vector<Index>> disjoint_with_;
  std::vector<std::pair<Index, Index>> disjoint_pairs_;
  std::size_t edge_count_ = 0;
};

/// Builds and validates an ontology. Duplicate statements are merged.
/// Throws Error on undeclared references, subclass cycles, self-disjointness,
/// or when the ontology on its own already has an incoherent class.
Ontology build_ontology(Side side, std::span<const Statement> statements);

}  // namespace alignrepair
