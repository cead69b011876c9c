#include <doctest.h>

#include "alignrepair/alignment.hpp"
#include "alignrepair/error.hpp"
#include "alignrepair/ontology.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace alignrepair;

namespace {

ErrorKind failure(Side side, const std::vector<Statement>& st) {
  try {
    build_ontology(side, st);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected build_ontology to throw");
  return ErrorKind::io;
}

}  // namespace

TEST_CASE("F1 first ontology has four classes, one edge, one disjoint pair") {
  auto o = fixtures::f1_first();
  CHECK(o.size() == 4);
  CHECK(o.edge_count() == 1);
  REQUIRE(o.disjoint_pairs().size() == 1);
  auto [a, b] = o.disjoint_pairs().front();
  CHECK(o.name(a) == "B1");
  CHECK(o.name(b) == "C1");
  CHECK(o.side() == Side::first);
  auto a1 = *o.find("A1");
  REQUIRE(o.parents(a1).size() == 1);
  CHECK(o.name(o.parents(a1)[0]) == "B1");
  CHECK_FALSE(o.find("A2").has_value());
}

TEST_CASE("subclass cycles are rejected") {
  CHECK(failure(Side::first, {Statement::declare("X"), Statement::declare("Y"),
                              Statement::subclass("X", "Y"), Statement::subclass("Y", "X")}) ==
        ErrorKind::subclass_cycle);
  CHECK(failure(Side::first, {Statement::declare("X"), Statement::subclass("X", "X")}) ==
        ErrorKind::subclass_cycle);
  CHECK(failure(Side::first,
                {Statement::declare("X"), Statement::declare("Y"), Statement::declare("Z"),
                 Statement::subclass("X", "Y"), Statement::subclass("Y", "Z"),
                 Statement::subclass("Z", "X")}) == ErrorKind::subclass_cycle);
}

TEST_CASE("an ontology that is already incoherent is rejected") {
  std::vector<Statement> edges{Statement::declare("A"), Statement::declare("B"),
                               Statement::declare("C"), Statement::subclass("A", "B"),
                               Statement::subclass("A", "C")};
  // The closure oracle confirms A sits under both B and C.
  auto plain = build_ontology(Side::first, edges);
  oracle::Closure closure(plain, fixtures::empty(Side::second), Alignment{});
  REQUIRE(closure.entails("A", "B"));
  REQUIRE(closure.entails("A", "C"));

  auto with_disjoint = edges;
  with_disjoint.push_back(Statement::disjoint("B", "C"));
  CHECK(failure(Side::first, with_disjoint) == ErrorKind::incoherent_input);

  // Indirect: D < A < B and D < C.
  CHECK(failure(Side::first, {Statement::declare("A"), Statement::declare("B"), Statement::declare("C"),
                              Statement::declare("D"), Statement::subclass("A", "B"),
                              Statement::subclass("D", "A"), Statement::subclass("D", "C"),
                              Statement::disjoint("C", "B")}) == ErrorKind::incoherent_input);
  // A disjoint class subsuming its partner makes the partner incoherent.
  CHECK(failure(Side::first, {Statement::declare("A"), Statement::declare("B"),
                              Statement::subclass("A", "B"), Statement::disjoint("A", "B")}) ==
        ErrorKind::incoherent_input);
}

TEST_CASE("reference errors") {
  CHECK(failure(Side::first, {Statement::declare("A"), Statement::subclass("A", "B")}) ==
        ErrorKind::undeclared_class);
  CHECK(failure(Side::first, {Statement::declare("A"), Statement::disjoint("A", "A")}) ==
        ErrorKind::self_disjoint);
  CHECK(failure(Side::first, {Statement::disjoint("A", "B")}) == ErrorKind::undeclared_class);
}

TEST_CASE("duplicate declarations are merged") {
  std::vector<Statement> st{Statement::declare("a"), Statement::declare("b"), Statement::declare("a"),
                           Statement::subclass("a", "b"), Statement::subclass("a", "b"),
                           Statement::disjoint("b", "c"), Statement::declare("c"),
                           Statement::disjoint("c", "b")};
  auto o = build_ontology(Side::second, st);
  CHECK(o.size() == 3);
  CHECK(o.edge_count() == 1);
  CHECK(o.disjoint_pairs().size() == 1);
  CHECK(o.side() == Side::second);
}

TEST_CASE("alignments keep canonical order and unique identities") {
  Alignment a({{"x", "y", Relation::source_subsumed, 0.3},
               {"a", "z", Relation::equivalence, 1.0},
               {"x", "y", Relation::equivalence, 0.2}});
  REQUIRE(a.size() == 3);
  CHECK(a[0].source == "a");
  CHECK(a[1].relation == Relation::equivalence);
  CHECK(a[2].relation == Relation::source_subsumed);
  CHECK(a.find({"x", "y", Relation::source_subsumed, 0.9}) == MappingIndex{2});
  CHECK_FALSE(a.contains({"x", "y", Relation::source_subsumes, 0.3}));

  std::vector<MappingIndex> drop{1};
  auto rest = a.without(drop);
  CHECK(rest.size() == 2);
  CHECK(a.subset(drop).size() == 1);

  try {
    Alignment({{"x", "y", Relation::equivalence, 0.3}, {"x", "y", Relation::equivalence, 0.4}});
    FAIL("duplicate identity accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::duplicate_mapping);
  }
  try {
    Alignment({{"x", "y", Relation::equivalence, 1.5}});
    FAIL("confidence above one accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_confidence);
  }
}
