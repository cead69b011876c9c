#pragma once

// Canonical small instances shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "alignrepair/alignment.hpp"
#include "alignrepair/conflicts.hpp"
#include "alignrepair/ontology.hpp"

namespace fixtures {

using namespace alignrepair;

inline Ontology ontology(Side side, const std::vector<std::string>& classes,
                         const std::vector<std::pair<std::string, std::string>>& edges,
                         const std::vector<std::pair<std::string, std::string>>& disjoint = {}) {
  std::vector<Statement> st;
  for (const auto& c : classes) st.push_back(Statement::declare(c));
  for (const auto& [c, p] : edges) st.push_back(Statement::subclass(c, p));
  for (const auto& [a, b] : disjoint) st.push_back(Statement::disjoint(a, b));
  return build_ontology(side, st);
}

struct Instance {
  Ontology first;
  Ontology second;
  Alignment alignment;
};

// O1: A1 < B1, disjoint(B1, C1), D1 isolated. O2: A2 < X2.
// m1: A1 = A2 (0.9), m2: A2 < C1 written as C1 > A2 (0.5).
inline Ontology f1_first() {
  return ontology(Side::first, {"A1", "B1", "C1", "D1"}, {{"A1", "B1"}}, {{"B1", "C1"}});
}
inline Ontology f1_second() { return ontology(Side::second, {"A2", "X2"}, {{"A2", "X2"}}); }
inline Mapping f1_m1() { return {"A1", "A2", Relation::equivalence, 0.9}; }
inline Mapping f1_m2() { return {"C1", "A2", Relation::source_subsumes, 0.5}; }

inline Instance f1(bool with_m1 = true, bool with_m2 = true) {
  std::vector<Mapping> ms;
  if (with_m1) ms.push_back(f1_m1());
  if (with_m2) ms.push_back(f1_m2());
  return {f1_first(), f1_second(), Alignment(ms)};
}

// Five mappings m1..m5 in canonical order (indices 0..4) with confidences
// 0.6, 0.7, 0.8, 0.4, 0.9; conflict sets S1 = {m1, m2}, S2 = {m1, m3},
// S3 = {m4, m5}.
inline Alignment f2_alignment() {
  return Alignment({{"s1", "t1", Relation::equivalence, 0.6},
                    {"s2", "t2", Relation::equivalence, 0.7},
                    {"s3", "t3", Relation::equivalence, 0.8},
                    {"s4", "t4", Relation::equivalence, 0.4},
                    {"s5", "t5", Relation::equivalence, 0.9}});
}
inline ConflictList f2_conflicts() {
  return {{{0, 1}, {}}, {{0, 2}, {}}, {{3, 4}, {}}};
}

// B < A, C < A, D < B, D < C, E < D, E < F.
inline Ontology f3() {
  return ontology(Side::first, {"A", "B", "C", "D", "E", "F"},
                  {{"B", "A"}, {"C", "A"}, {"D", "B"}, {"D", "C"}, {"E", "D"}, {"E", "F"}});
}

inline Ontology empty(Side side) { return ontology(side, {}, {}); }

}  // namespace fixtures
