#include "alignrepair/generator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "alignrepair/conflicts.hpp"
#include "alignrepair/error.hpp"
#include "alignrepair/merged_graph.hpp"

namespace alignrepair {

namespace {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::size_t below(std::size_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  /// Confidence in [lo, hi] with three decimals, so it survives a text round trip.
  double confidence(double lo, double hi) {
    auto lo_k = static_cast<std::size_t>(std::lround(lo * 1000));
    auto hi_k = static_cast<std::size_t>(std::lround(hi * 1000));
    return static_cast<double>(lo_k + below(hi_k - lo_k + 1)) / 1000.0;
  }

 private:
  std::mt19937_64 engine_;
};

struct Hierarchy {
  std::vector<std::size_t> tree_parent;           // root has itself
  std::vector<std::vector<std::size_t>> parents;  // tree parent first, then cross links
  std::vector<int> depth;
  std::vector<boost::dynamic_bitset<std::uint64_t>> ancestors;  // strict
  std::vector<std::pair<std::size_t, std::size_t>> disjoint;
};

Hierarchy grow(const GeneratorParams& p, Random& rng) {
  const auto n = static_cast<std::size_t>(p.classes_per_side);
  Hierarchy h;
  h.tree_parent.assign(n, 0);
  h.parents.assign(n, {});
  h.depth.assign(n, 0);
  h.ancestors.assign(n, boost::dynamic_bitset<std::uint64_t>(n));

  auto attach = [&](std::size_t child, std::size_t parent) {
    h.parents[child].push_back(parent);
    h.ancestors[child].set(parent);
    h.ancestors[child] |= h.ancestors[parent];
  };

  const auto whole = static_cast<std::size_t>(std::floor(p.branching));
  const double fraction = p.branching - static_cast<double>(whole);
  std::deque<std::size_t> frontier{0};
  std::size_t next = 1;
  while (next < n) {
    if (frontier.empty()) {
      // Re-open a random class that may still take children.
      std::size_t pick;
      do {
        pick = rng.below(next);
      } while (h.depth[pick] >= p.max_depth);
      frontier.push_back(pick);
    }
    auto parent = frontier.front();
    frontier.pop_front();
    if (h.depth[parent] >= p.max_depth) continue;
    auto kids = whole + (rng.chance(fraction) ? 1 : 0);
    for (std::size_t k = 0; k < kids && next < n; ++k) {
      auto child = next++;
      h.tree_parent[child] = parent;
      h.depth[child] = h.depth[parent] + 1;
      attach(child, parent);
      if (child >= 2 && rng.chance(p.cross_link_rate)) {
        auto extra = rng.below(child);
        if (extra != parent && !h.ancestors[child].test(extra)) attach(child, extra);
      }
      frontier.push_back(child);
    }
  }
  return h;
}

bool share_descendant(const Hierarchy& h, std::size_t a, std::size_t b) {
  for (std::size_t v = 0; v < h.ancestors.size(); ++v) {
    bool under_a = v == a || h.ancestors[v].test(a);
    bool under_b = v == b || h.ancestors[v].test(b);
    if (under_a && under_b) return true;
  }
  return false;
}

void pick_disjoint(const GeneratorParams& p, Hierarchy& h, Random& rng) {
  const auto n = h.parents.size();
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t v = 1; v < n; ++v) kids[h.tree_parent[v]].push_back(v);
  // Anchors are drawn level by level, so upper classes with large subtrees
  // are as likely to be disjoint as leaves.
  std::vector<std::vector<std::size_t>> level;
  for (std::size_t v = 1; v < n; ++v) {
    auto d = static_cast<std::size_t>(h.depth[v]);
    if (level.size() <= d) level.resize(d + 1);
    level[d].push_back(v);
  }

  std::size_t attempts = 0;
  const std::size_t budget = 200 * static_cast<std::size_t>(p.disjoint_pairs) + 1000;
  while (chosen.size() < static_cast<std::size_t>(p.disjoint_pairs)) {
    if (++attempts > budget || n < 3) {
      throw Error(ErrorKind::invalid_argument,
                  "cannot place " + std::to_string(p.disjoint_pairs) + " coherent disjoint pairs");
    }
    const auto& row = level[1 + rng.below(level.size() - 1)];
    if (row.empty()) continue;
    auto a = row[rng.below(row.size())];
    // Sibling, or cousin through the grandparent.
    auto up = h.tree_parent[a];
    if (h.depth[a] >= 2 && rng.chance(0.4)) up = h.tree_parent[up];
    std::vector<std::size_t> pool;
    for (auto k : kids[up]) {
      if (h.tree_parent[a] == up) {
        pool.push_back(k);
      } else {
        pool.insert(pool.end(), kids[k].begin(), kids[k].end());
      }
    }
    if (pool.empty()) continue;
    auto b = pool[rng.below(pool.size())];
    if (a == b || h.ancestors[a].test(b) || h.ancestors[b].test(a)) continue;
    auto key = std::minmax(a, b);
    if (chosen.count(key) || share_descendant(h, a, b)) continue;
    chosen.insert(key);
  }
  h.disjoint.assign(chosen.begin(), chosen.end());
}

std::string class_name(char prefix, std::size_t i, int width) {
  auto digits = std::to_string(i);
  return std::string(1, prefix) + std::string(width - static_cast<int>(digits.size()), '0') + digits;
}

GeneratedInstance draw(const GeneratorParams& p, Random& rng) {
  auto h = grow(p, rng);
  pick_disjoint(p, h, rng);
  const auto n = h.parents.size();
  const int width = static_cast<int>(std::to_string(n - 1).size());
  auto a = [&](std::size_t i) { return class_name('a', i, width); };
  auto b = [&](std::size_t i) { return class_name('b', i, width); };

  std::vector<Statement> first, second;
  for (std::size_t v = 0; v < n; ++v) {
    first.push_back(Statement::declare(a(v)));
    second.push_back(Statement::declare(b(v)));
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < h.parents[v].size(); ++k) {
      auto parent = h.parents[v][k];
      first.push_back(Statement::subclass(a(v), a(parent)));
      // The mirror keeps every tree edge and most cross links.
      if (k == 0 || rng.chance(0.7)) second.push_back(Statement::subclass(b(v), b(parent)));
    }
  }
  for (auto [x, y] : h.disjoint) {
    first.push_back(Statement::disjoint(a(x), a(y)));
    if (rng.chance(0.75)) second.push_back(Statement::disjoint(b(x), b(y)));
  }

  const auto total = static_cast<std::size_t>(p.mapping_count);
  const auto noisy = static_cast<std::size_t>(std::lround(p.noise_rate * static_cast<double>(total)));
  const auto correct = total - noisy;
  if (correct > n) {
    throw Error(ErrorKind::invalid_argument, "more reference mappings than classes per side");
  }
  if (noisy > 0 && n < 2) {
    throw Error(ErrorKind::invalid_argument, "noise mappings need at least two classes per side");
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<Mapping> reference;
  for (std::size_t k = 0; k < correct; ++k) {
    auto v = order[k];
    if (v != 0 && rng.chance(0.15)) {
      reference.push_back({a(v), b(h.tree_parent[v]), Relation::source_subsumed, rng.confidence(0.55, 1.0)});
    } else {
      reference.push_back({a(v), b(v), Relation::equivalence, rng.confidence(0.55, 1.0)});
    }
  }
  std::vector<Mapping> produced = reference;
  std::set<std::tuple<std::string, std::string, Relation>> seen;
  for (const auto& m : reference) seen.insert({m.source, m.target, m.relation});
  std::size_t guard = 0;
  while (produced.size() < total) {
    if (++guard > 100 * total + 1000) {
      throw Error(ErrorKind::invalid_argument, "cannot place the requested noise mappings");
    }
    auto x = rng.below(n);
    auto y = rng.below(n);
    if (x == y) continue;
    auto rel = rng.chance(0.8) ? Relation::equivalence : Relation::source_subsumed;
    Mapping m{a(x), b(y), rel, rng.confidence(0.2, 0.75)};
    if (!seen.insert({m.source, m.target, m.relation}).second) continue;
    produced.push_back(std::move(m));
  }

  GeneratedInstance out{build_ontology(Side::first, first), build_ontology(Side::second, second),
                        Alignment(std::move(produced)), Alignment(std::move(reference))};
  return out;
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorParams& params) {
  if (params.classes_per_side < 1 || params.max_depth < 1 || params.disjoint_pairs < 0 ||
      params.mapping_count < 0 || !(params.branching > 0.0) ||
      !(params.noise_rate >= 0.0 && params.noise_rate <= 1.0) ||
      !(params.cross_link_rate >= 0.0 && params.cross_link_rate <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "invalid generator parameters");
  }
  Random rng(params.seed);
  // The mirror construction keeps the reference coherent; the check guards
  // against regressions and redraws if it ever fails.
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto instance = draw(params, rng);
    if (count_incoherent_classes(MergedGraph(instance.first, instance.second, instance.reference))
            .count == 0) {
      return instance;
    }
  }
  throw Error(ErrorKind::invalid_argument, "could not draw a coherent reference alignment");
}

}  // namespace alignrepair
