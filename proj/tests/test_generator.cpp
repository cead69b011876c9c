#include <doctest.h>

#include "alignrepair/conflicts.hpp"
#include "alignrepair/error.hpp"
#include "alignrepair/evaluation.hpp"
#include "alignrepair/generator.hpp"
#include "alignrepair/io.hpp"
#include "alignrepair/modularization.hpp"
#include "alignrepair/repair.hpp"
#include "support/oracle.hpp"

using namespace alignrepair;

namespace {

std::string serialize(const GeneratedInstance& g) {
  return write_ontology_file(g.first) + "--\n" + write_ontology_file(g.second) + "--\n" +
         write_alignment_tsv(g.produced) + "--\n" + write_alignment_tsv(g.reference);
}

}  // namespace

TEST_CASE("same seed, same instance") {
  GeneratorParams p;
  p.classes_per_side = 60;
  p.seed = 99;
  CHECK(serialize(generate_instance(p)) == serialize(generate_instance(p)));
  auto q = p;
  q.seed = 100;
  CHECK(serialize(generate_instance(p)) != serialize(generate_instance(q)));
}

TEST_CASE("without noise the produced alignment is the coherent reference") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorParams p;
    p.classes_per_side = 40;
    p.mapping_count = 15;
    p.noise_rate = 0.0;
    p.seed = seed;
    auto g = generate_instance(p);
    CHECK(write_alignment_tsv(g.produced) == write_alignment_tsv(g.reference));
    CHECK(g.produced.size() == 15);
    CHECK(g.first.size() == 40);
    CHECK(g.second.size() == 40);
    CHECK(oracle::Closure(g.first, g.second, g.reference, ~std::uint64_t{0}).incoherent().empty());
  }
}

TEST_CASE("noisy instances produce reference-consistent data") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratorParams p;
    p.classes_per_side = 50;
    p.mapping_count = 20;
    p.noise_rate = 0.4;
    p.seed = seed;
    auto g = generate_instance(p);
    CHECK(g.produced.size() == 20);
    CHECK(exhaustive_incoherence(g.first, g.second, g.reference).empty());
    for (const auto& m : g.produced) {
      CHECK(g.first.contains(m.source));
      CHECK(g.second.contains(m.target));
    }
  }
}

TEST_CASE("seed 7 regression instance needs a repair") {
  GeneratorParams p;
  p.classes_per_side = 30;
  p.mapping_count = 10;
  p.noise_rate = 0.3;
  p.seed = 7;
  auto g = generate_instance(p);
  auto conflicts = find_conflict_sets(extract_core_fragments(g.first, g.second, g.produced), g.produced);
  auto r = repair(conflicts, g.produced);
  CHECK(r.removed.size() >= 1);
  CHECK(exhaustive_incoherence(g.first, g.second, r.kept).empty());
}

TEST_CASE("unsatisfiable parameters are rejected") {
  auto kind = [](GeneratorParams p) {
    try {
      generate_instance(p);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::io;
  };
  GeneratorParams p;
  p.classes_per_side = 0;
  CHECK(kind(p) == ErrorKind::invalid_argument);
  p = {};
  p.noise_rate = 1.5;
  CHECK(kind(p) == ErrorKind::invalid_argument);
  p = {};
  p.classes_per_side = 5;
  p.mapping_count = 50;
  CHECK(kind(p) == ErrorKind::invalid_argument);
  p = {};
  p.classes_per_side = 3;
  p.disjoint_pairs = 40;
  CHECK(kind(p) == ErrorKind::invalid_argument);
}
