#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace alignrepair {

enum class Relation : std::uint8_t {
  equivalence,        // source = target
  source_subsumed,    // source < target
  source_subsumes,    // source > target
};

char relation_symbol(Relation r) noexcept;
std::optional<Relation> relation_from_symbol(std::string_view s) noexcept;

/// A correspondence from a class of the first ontology to a class of the
/// second. Identity is (source, target, relation); confidence is payload.
struct Mapping {
  std::string source;
  std::string target;
  Relation relation = Relation::equivalence;
  double confidence = 1.0;

  auto key() const { return std::tie(source, target, relation); }
  bool same_identity(const Mapping& other) const { return key() == other.key(); }
};

inline bool canonical_less(const Mapping& a, const Mapping& b) { return a.key() < b.key(); }

std::string describe(const Mapping& m);

/// Position of a mapping inside its Alignment. Because alignments are stored
/// in canonical order, comparing indices compares canonical identities.
using MappingIndex = std::size_t;

/// A set of mappings kept in canonical order with unique identities.
class Alignment {
 public:
  Alignment() = default;
  /// Sorts canonically; throws Error(duplicate_mapping) on repeated identity
  /// and Error(invalid_confidence) for confidences outside [0, 1].
  explicit Alignment(std::vector<Mapping> mappings);

  std::size_t size() const noexcept { return mappings_.size(); }
  bool empty() const noexcept { return mappings_.empty(); }
  const Mapping& operator[](MappingIndex i) const { return mappings_[i]; }
  const std::vector<Mapping>& mappings() const noexcept { return mappings_; }
  auto begin() const { return mappings_.begin(); }
  auto end() const { return mappings_.end(); }

  std::optional<MappingIndex> find(const Mapping& identity) const;
  bool contains(const Mapping& identity) const { return find(identity).has_value(); }

  /// Alignment restricted to the given indices (any order, duplicates ignored).
  Alignment subset(std::span<const MappingIndex> indices) const;
  /// Alignment without the given indices.
  Alignment without(std::span<const MappingIndex> indices) const;

 private:
  std::vector<Mapping> mappings_;
};

}  // namespace alignrepair
