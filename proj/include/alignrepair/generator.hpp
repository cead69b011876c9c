#pragma once

#include <cstdint>

#include "alignrepair/alignment.hpp"
#include "alignrepair/ontology.hpp"

namespace alignrepair {

struct GeneratorParams {
  int classes_per_side = 100;
  int max_depth = 8;
  /// Mean number of children per expanded class.
  double branching = 3.0;
  int disjoint_pairs = 4;
  int mapping_count = 20;
  /// Fraction of produced mappings with wrong endpoints.
  double noise_rate = 0.2;
  std::uint64_t seed = 1;
  /// Extra parent links per class, creating multi-parent classes.
  double cross_link_rate = 0.05;
};

/// Two ontologies, the produced alignment and the reference it was derived
/// from. The second ontology mirrors the first with some links and
/// disjointness axioms dropped; reference mappings join mirrored classes.
struct GeneratedInstance {
  Ontology first;
  Ontology second;
  Alignment produced;
  Alignment reference;
};

/// Deterministic in (params, seed). Throws Error(invalid_argument) for
/// parameters that cannot be satisfied, e.g. more disjoint pairs or mappings
/// than the hierarchy admits.
GeneratedInstance generate_instance(const GeneratorParams& params);

}  // namespace alignrepair
