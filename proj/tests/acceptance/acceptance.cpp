// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Oracles come from tests/support and from the exhaustive
// checker, never from the code under test.

#include <sys/resource.h>

#include <chrono>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "alignrepair/conflicts.hpp"
#include "alignrepair/error.hpp"
#include "alignrepair/evaluation.hpp"
#include "alignrepair/generator.hpp"
#include "alignrepair/io.hpp"
#include "alignrepair/modularization.hpp"
#include "alignrepair/repair.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace alignrepair;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
  Ontology first;
  Ontology second;
  Alignment alignment;
};

/// Even seeds come from the library generator, odd seeds from the unrelated
/// random-DAG generator of the test oracle.
Instance small_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 1);
  int classes = 20 + static_cast<int>(rng() % 41);
  int mappings = 5 + static_cast<int>(rng() % 11);
  int pairs = 1 + static_cast<int>(rng() % 4);
  if (seed % 2 == 0) {
    GeneratorParams p;
    p.classes_per_side = classes;
    p.mapping_count = mappings;
    p.disjoint_pairs = pairs;
    p.max_depth = 6;
    p.branching = 2.5;
    p.noise_rate = 0.3 + 0.3 * static_cast<double>(rng() % 100) / 100.0;
    p.cross_link_rate = 0.1;
    p.seed = seed;
    auto g = generate_instance(p);
    return {std::move(g.first), std::move(g.second), std::move(g.produced)};
  }
  oracle::RandomInstanceParams p{classes, 3.0 / classes, pairs, mappings};
  auto r = oracle::random_instance(rng, p);
  return {std::move(r.first), std::move(r.second), std::move(r.alignment)};
}

std::uint64_t mask_of(const MappingSet& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t{1} << i;
  return m;
}

/// Every subset when |M| <= 10, otherwise 50 distinct random ones.
std::vector<std::uint64_t> subsets_for(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> out;
  if (n <= 10) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(m);
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  while (out.size() < 50) {
    auto m = rng() & ((std::uint64_t{1} << n) - 1);
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

bool exhaustively_incoherent(const Instance& inst, std::uint64_t mask) {
  auto subset = oracle::members(mask, inst.alignment.size());
  return !exhaustive_incoherence(inst.first, inst.second, inst.alignment.subset(subset)).empty();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << " (" << title << "): " << o.detail
            << std::endl;
  failures += !o.pass;
}

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

constexpr int small_instances = 300;

Outcome criterion_fragments() {
  auto start = Clock::now();
  std::size_t subsets = 0, incoherent = 0, disagreements = 0;
  for (int seed = 0; seed < small_instances; ++seed) {
    auto inst = small_instance(seed);
    auto f = extract_core_fragments(inst.first, inst.second, inst.alignment);
    for (auto mask : subsets_for(inst.alignment.size(), seed)) {
      bool expected = exhaustively_incoherent(inst, mask);
      bool flagged = !fragment_incoherent_classes(f, oracle::members(mask, inst.alignment.size())).empty();
      ++subsets;
      incoherent += expected;
      disagreements += expected != flagged;
    }
  }
  double t = seconds_since(start);
  std::ostringstream d;
  d << small_instances << " instances, " << subsets << " subsets (" << incoherent << " incoherent), "
    << disagreements << " disagreements, " << t << " s";
  return {disagreements == 0 && incoherent > 0 && t < 120.0, d.str()};
}

Outcome criterion_conflicts() {
  std::size_t sets = 0, unsound = 0, non_minimal = 0, incomplete = 0;
  for (int seed = 0; seed < small_instances; ++seed) {
    auto inst = small_instance(seed);
    auto conflicts = find_conflict_sets(extract_core_fragments(inst.first, inst.second, inst.alignment),
                                        inst.alignment);
    sets += conflicts.size();
    for (const auto& c : conflicts) {
      oracle::Closure closure(inst.first, inst.second, inst.alignment, mask_of(c.mappings));
      const auto& w = c.witness;
      if (!closure.entails(w.incoherent_class, w.disjoint_first) ||
          !closure.entails(w.incoherent_class, w.disjoint_second)) {
        ++unsound;
      }
      // Incoherence is monotone in the alignment, so dropping one mapping at
      // a time covers every proper subset.
      for (auto m : c.mappings) {
        if (exhaustively_incoherent(inst, mask_of(c.mappings) & ~(std::uint64_t{1} << m))) ++non_minimal;
      }
    }
    for (auto mask : subsets_for(inst.alignment.size(), seed + 1000)) {
      bool contains = std::any_of(conflicts.begin(), conflicts.end(), [&](const ConflictSet& c) {
        return (mask_of(c.mappings) & mask) == mask_of(c.mappings);
      });
      incomplete += contains != exhaustively_incoherent(inst, mask);
    }
  }
  std::ostringstream d;
  d << sets << " sets; unsound " << unsound << ", non-minimal " << non_minimal << ", subset mismatches "
    << incomplete;
  return {sets > 0 && unsound == 0 && non_minimal == 0 && incomplete == 0, d.str()};
}

Outcome criterion_repair() {
  std::size_t runs = 0, incoherent_after = 0, gratuitous = 0, removed_total = 0;
  for (int seed = 0; seed < small_instances; ++seed) {
    auto inst = small_instance(seed);
    auto conflicts = find_conflict_sets(extract_core_fragments(inst.first, inst.second, inst.alignment),
                                        inst.alignment);
    for (int depth : {0, 2}) {
      for (bool clusters : {true, false}) {
        auto r = repair(conflicts, inst.alignment, {-1.0, depth, clusters});
        ++runs;
        removed_total += r.removed.size();
        if (!exhaustive_incoherence(inst.first, inst.second, r.kept).empty()) ++incoherent_after;
        std::vector<bool> gone(inst.alignment.size(), false);
        for (const auto& x : r.removed) {
          bool hit = std::any_of(conflicts.begin(), conflicts.end(), [&](const ConflictSet& c) {
            const auto& s = c.mappings;
            bool open = std::none_of(s.begin(), s.end(), [&](MappingIndex m) { return gone[m]; });
            return open && std::binary_search(s.begin(), s.end(), x.mapping);
          });
          gratuitous += !hit;
          gone[x.mapping] = true;
        }
      }
    }
  }
  std::ostringstream d;
  d << runs << " runs, " << removed_total << " removals; incoherent after repair " << incoherent_after
    << ", removals hitting no open set " << gratuitous;
  return {incoherent_after == 0 && gratuitous == 0, d.str()};
}

/// Conflict sets for the optimality check. Half come from real instances,
/// half are random antichains over at most 12 mappings.
std::pair<Alignment, std::vector<MappingSet>> optimality_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 4242);
  if (seed % 2 == 0) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      auto r = oracle::random_instance(rng, {16, 0.12, 3, 12});
      auto conflicts =
          find_conflict_sets(extract_core_fragments(r.first, r.second, r.alignment), r.alignment);
      if (conflicts.size() >= 2 && conflicts.size() <= 20) return {r.alignment, mapping_sets(conflicts)};
    }
  }
  std::size_t n = 4 + rng() % 9;
  std::vector<Mapping> ms;
  for (std::size_t i = 0; i < n; ++i) {
    double c = static_cast<double>(1 + rng() % 20) / 20.0;
    ms.push_back({"s" + std::to_string(10 + i), "t" + std::to_string(10 + i), Relation::equivalence, c});
  }
  std::set<MappingSet> raw;
  std::size_t target = 2 + rng() % 19;
  for (std::size_t i = 0; i < target; ++i) {
    MappingSet s;
    std::size_t size = 2 + rng() % 3;
    while (s.size() < size) {
      auto m = static_cast<MappingIndex>(rng() % n);
      if (std::find(s.begin(), s.end(), m) == s.end()) s.push_back(m);
    }
    std::sort(s.begin(), s.end());
    raw.insert(s);
  }
  std::vector<MappingSet> sets;
  for (const auto& s : raw) {
    bool has_subset = std::any_of(raw.begin(), raw.end(), [&](const MappingSet& t) {
      return t != s && std::includes(s.begin(), s.end(), t.begin(), t.end());
    });
    if (!has_subset) sets.push_back(s);
  }
  return {Alignment(ms), sets};
}

Outcome criterion_optimality() {
  constexpr int instances = 500;
  int optimal = 0, worst_gap = 0, total_sets = 0;
  for (int seed = 0; seed < instances; ++seed) {
    auto [al, sets] = optimality_case(seed);
    total_sets += static_cast<int>(sets.size());
    ConflictList list;
    for (const auto& s : sets) list.push_back({s, {}});
    auto r = repair(list, al, {-1.0, 3, true});
    auto best = brute_force_min_hitting_set(sets, al);
    int gap = static_cast<int>(r.removed.size()) - static_cast<int>(best.size());
    optimal += gap == 0;
    worst_gap = std::max(worst_gap, gap);
  }
  std::ostringstream d;
  d << optimal << "/" << instances << " optimal (" << 100.0 * optimal / instances << "%), worst excess "
    << worst_gap << ", " << total_sets << " sets in total";
  return {optimal * 100 >= 80 * instances && worst_gap <= 2, d.str()};
}

Outcome criterion_filter() {
  Alignment two({{"a", "x", Relation::equivalence, 0.9}, {"b", "y", Relation::equivalence, 0.5}});
  std::vector<MappingSet> one{{0, 1}};
  auto tight = filter_conflicts(one, two, 0.1);
  auto loose = filter_conflicts(one, two, 0.25);
  auto f2 = filter_conflicts(mapping_sets(fixtures::f2_conflicts()), fixtures::f2_alignment(), 0.05);
  bool ok = tight.removed == std::vector<MappingIndex>{1} && tight.remaining.empty() && loose.removed.empty() &&
            loose.remaining == one && f2.removed == std::vector<MappingIndex>{3, 0} && f2.remaining.empty();
  return {ok, "eps 0.1 removes the 0.5 mapping, eps 0.25 removes nothing, F2 trace removes [m4, m1]"};
}

std::size_t peak_rss_kib() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) return std::stoul(line.substr(6));
  }
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<std::size_t>(usage.ru_maxrss);
}

Outcome criterion_reduction() {
  GeneratorParams p;
  p.classes_per_side = 10000;
  p.max_depth = 40;
  p.branching = 1.6;
  p.mapping_count = 200;
  p.disjoint_pairs = 50;
  p.noise_rate = 0.2;
  p.cross_link_rate = 0.01;
  p.seed = 6;
  auto g = generate_instance(p);
  auto start = Clock::now();
  auto f = extract_core_fragments(g.first, g.second, g.produced);
  double t = seconds_since(start);
  double total = static_cast<double>(f.total_classes());
  std::set<std::string> checked(f.checkset().classes.begin(), f.checkset().classes.end());
  checked.insert(f.base_checkset().classes.begin(), f.base_checkset().classes.end());
  double core = 100.0 * static_cast<double>(f.size()) / total;
  double check = 100.0 * static_cast<double>(checked.size()) / total;
  std::ostringstream d;
  d << "core " << f.size() << " of " << f.total_classes() << " (" << core << "%), checkset " << checked.size()
    << " (" << check << "%), extraction " << t << " s";
  return {core < 20.0 && check < 15.0 && t < 10.0, d.str()};
}

int shell(const std::string& cmd) { return std::system(cmd.c_str()); }

/// Generation happens in process; parsing, fragments, conflicts, repair and
/// the before/after checks run in the CLI child, which is timed and measured.
Outcome criterion_budget() {
  GeneratorParams p;
  p.classes_per_side = 10000;
  p.max_depth = 12;
  p.branching = 3.0;
  p.mapping_count = 2000;
  p.disjoint_pairs = 600;
  p.noise_rate = 0.45;
  p.cross_link_rate = 0.03;
  p.seed = 8;
  auto g = generate_instance(p);
  auto dir = fs::temp_directory_path() / ("alignrepair_budget_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  write_file(dir / "onto1.txt", write_ontology_file(g.first));
  write_file(dir / "onto2.txt", write_ontology_file(g.second));
  write_file(dir / "alignment.tsv", write_alignment_tsv(g.produced));
  auto path = [&](const char* name) { return (dir / name).string(); };

  auto start = Clock::now();
  int rc = shell(std::string(ALIGNREPAIR_CLI_PATH) + " repair --onto1 " + path("onto1.txt") + " --onto2 " +
                 path("onto2.txt") + " --align " + path("alignment.tsv") + " --out " + path("kept.tsv") +
                 " --report " + path("report.json") + " > " + path("repair.log"));
  double t = seconds_since(start);
  rusage usage{};
  getrusage(RUSAGE_CHILDREN, &usage);
  double gib = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
  if (rc != 0) {
    fs::remove_all(dir);
    return {false, "repair command failed"};
  }
  auto kept = parse_alignment_tsv(read_file(dir / "kept.tsv"));
  auto sets = find_conflict_sets(extract_core_fragments(g.first, g.second, g.produced), g.produced).size();
  auto after = exhaustive_incoherence(g.first, g.second, kept);
  fs::remove_all(dir);
  std::ostringstream d;
  d << sets << " conflict sets, " << g.produced.size() - kept.size() << " removed, " << after.size()
    << " incoherent after, " << t << " s, peak child RSS " << gib << " GiB, own peak "
    << static_cast<double>(peak_rss_kib()) / (1024.0 * 1024.0) << " GiB";
  bool sized = sets >= 250 && sets <= 1000;
  return {sized && after.empty() && t < 60.0 && gib < 4.0, d.str()};
}

Outcome criterion_determinism() {
  const std::string bin = ALIGNREPAIR_CLI_PATH;
  auto root = fs::temp_directory_path() / ("alignrepair_accept_" + std::to_string(::getpid()));
  std::vector<std::string> outputs[2];
  for (int run = 0; run < 2; ++run) {
    auto dir = root / std::to_string(run);
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };
    int rc = 0;
    rc |= shell(bin + " gen --classes 800 --mappings 120 --disjoints 10 --noise 0.3 --seed 11 --out-dir " +
                dir.string() + " > " + p("gen.log"));
    std::string in = " --onto1 " + p("onto1.txt") + " --onto2 " + p("onto2.txt") + " --align " + p("alignment.tsv");
    rc |= shell(bin + " repair" + in + " --epsilon 0.05 --out " + p("repaired.tsv") + " --report " +
                p("report.json") + " > " + p("repair.log"));
    rc |= shell(bin + " conflicts --list" + in + " > " + p("conflicts.json"));
    rc |= shell(bin + " eval --produced " + p("repaired.tsv") + " --reference " + p("reference.tsv") + " --input " +
                p("alignment.tsv") + " --onto1 " + p("onto1.txt") + " --onto2 " + p("onto2.txt") + " > " +
                p("eval.json"));
    if (rc != 0) {
      fs::remove_all(root);
      return {false, "a pipeline step failed"};
    }
    for (const char* f : {"onto1.txt", "onto2.txt", "alignment.tsv", "reference.tsv", "repaired.tsv", "report.json",
                          "repair.log", "conflicts.json", "eval.json"}) {
      outputs[run].push_back(read_file(dir / f));
    }
  }
  fs::remove_all(root);
  std::size_t bytes = 0;
  for (const auto& s : outputs[0]) bytes += s.size();
  bool same = outputs[0] == outputs[1];
  std::ostringstream d;
  d << outputs[0].size() << " files, " << bytes << " bytes per run, " << (same ? "identical" : "different");
  return {same, d.str()};
}

}  // namespace

int main() {
  report(1, "fragment detection vs exhaustive", guarded(criterion_fragments));
  report(2, "conflict sets sound, minimal, complete", guarded(criterion_conflicts));
  report(3, "repair correctness", guarded(criterion_repair));
  report(4, "near-optimality", guarded(criterion_optimality));
  report(5, "filter rule", guarded(criterion_filter));
  report(6, "fragment reduction at scale", guarded(criterion_reduction));
  report(7, "engineering budget", guarded(criterion_budget));
  report(8, "CLI determinism", guarded(criterion_determinism));
  return failures == 0 ? 0 : 1;
}
