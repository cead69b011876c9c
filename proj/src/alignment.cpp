#include "alignrepair/alignment.hpp"

#include <algorithm>

#include "alignrepair/error.hpp"

namespace alignrepair {

char relation_symbol(Relation r) noexcept {
  switch (r) {
    case Relation::equivalence: return '=';
    case Relation::source_subsumed: return '<';
    case Relation::source_subsumes: return '>';
  }
  return '?';
}

std::optional<Relation> relation_from_symbol(std::string_view s) noexcept {
  if (s == "=") return Relation::equivalence;
  if (s == "<") return Relation::source_subsumed;
  if (s == ">") return Relation::source_subsumes;
  return std::nullopt;
}

std::string describe(const Mapping& m) {
  return m.source + " " + relation_symbol(m.relation) + " " + m.target;
}

Alignment::Alignment(std::vector<Mapping> mappings) : mappings_(std::move(mappings)) {
  for (const auto& m : mappings_) {
    if (!(m.confidence >= 0.0 && m.confidence <= 1.0)) {
      throw Error(ErrorKind::invalid_confidence,
                  "confidence of mapping " + describe(m) + " outside [0, 1]");
    }
  }
  std::sort(mappings_.begin(), mappings_.end(), canonical_less);
  auto dup = std::adjacent_find(mappings_.begin(), mappings_.end(),
                                [](const Mapping& a, const Mapping& b) { return a.same_identity(b); });
  if (dup != mappings_.end()) {
    throw Error(ErrorKind::duplicate_mapping, "duplicate mapping " + describe(*dup));
  }
}

std::optional<MappingIndex> Alignment::find(const Mapping& identity) const {
  auto it = std::lower_bound(mappings_.begin(), mappings_.end(), identity, canonical_less);
  if (it == mappings_.end() || !it->same_identity(identity)) return std::nullopt;
  return static_cast<MappingIndex>(it - mappings_.begin());
}

Alignment Alignment::subset(std::span<const MappingIndex> indices) const {
  std::vector<bool> keep(mappings_.size(), false);
  for (auto i : indices) keep.at(i) = true;
  Alignment out;
  for (MappingIndex i = 0; i < mappings_.size(); ++i) {
    if (keep[i]) out.mappings_.push_back(mappings_[i]);
  }
  return out;
}

Alignment Alignment::without(std::span<const MappingIndex> indices) const {
  std::vector<bool> drop(mappings_.size(), false);
  for (auto i : indices) drop.at(i) = true;
  Alignment out;
  for (MappingIndex i = 0; i < mappings_.size(); ++i) {
    if (!drop[i]) out.mappings_.push_back(mappings_[i]);
  }
  return out;
}

}  // namespace alignrepair
