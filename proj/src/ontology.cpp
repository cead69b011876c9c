#include "alignrepair/ontology.hpp"

#include <algorithm>
#include <deque>

#include <boost/dynamic_bitset.hpp>

#include "alignrepair/error.hpp"

namespace alignrepair {

std::optional<Ontology::Index> Ontology::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string where(const Statement& s) {
  return s.line == 0 ? std::string() : " (line " + std::to_string(s.line) + ")";
}

void sort_unique(std::vector<Ontology::Index>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Ontology build_ontology(Side side, std::span<const Statement> statements) {
  Ontology o;
  o.side_ = side;

  for (const auto& s : statements) {
    if (s.kind == Statement::Kind::declare_class) o.names_.push_back(s.first);
  }
  std::sort(o.names_.begin(), o.names_.end());
  o.names_.erase(std::unique(o.names_.begin(), o.names_.end()), o.names_.end());
  o.index_.reserve(o.names_.size());
  for (Ontology::Index i = 0; i < o.names_.size(); ++i) o.index_.emplace(o.names_[i], i);

  const auto n = o.names_.size();
  o.parents_.assign(n, {});
  o.children_.assign(n, {});
  o.disjoint_with_.assign(n, {});

  auto lookup = [&](const std::string& id, const Statement& s) {
    auto found = o.find(id);
    if (!found) throw Error(ErrorKind::undeclared_class, "undeclared class '" + id + "'" + where(s));
    return *found;
  };

  for (const auto& s : statements) {
    if (s.kind == Statement::Kind::subclass) {
      auto child = lookup(s.first, s);
      auto parent = lookup(s.second, s);
      if (child == parent) {
        throw Error(ErrorKind::subclass_cycle, "class '" + s.first + "' is its own subclass" + where(s));
      }
      o.parents_[child].push_back(parent);
      o.children_[parent].push_back(child);
    } else if (s.kind == Statement::Kind::disjoint) {
      auto a = lookup(s.first, s);
      auto b = lookup(s.second, s);
      if (a == b) {
        throw Error(ErrorKind::self_disjoint, "class '" + s.first + "' declared disjoint with itself" + where(s));
      }
      o.disjoint_pairs_.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (Ontology::Index i = 0; i < n; ++i) {
    sort_unique(o.parents_[i]);
    sort_unique(o.children_[i]);
    o.edge_count_ += o.parents_[i].size();
  }
  std::sort(o.disjoint_pairs_.begin(), o.disjoint_pairs_.end());
  o.disjoint_pairs_.erase(std::unique(o.disjoint_pairs_.begin(), o.disjoint_pairs_.end()),
                          o.disjoint_pairs_.end());
  for (auto [a, b] : o.disjoint_pairs_) {
    o.disjoint_with_[a].push_back(b);
    o.disjoint_with_[b].push_back(a);
  }
  for (auto& d : o.disjoint_with_) sort_unique(d);

  // Kahn's algorithm from the leaves upward; leftovers sit on a cycle.
  std::vector<std::size_t> pending(n);
  std::deque<Ontology::Index> ready;
  std::vector<Ontology::Index> order;
  order.reserve(n);
  for (Ontology::Index i = 0; i < n; ++i) {
    pending[i] = o.children_[i].size();
    if (pending[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    auto c = ready.front();
    ready.pop_front();
    order.push_back(c);
    for (auto p : o.parents_[c]) {
      if (--pending[p] == 0) ready.push_back(p);
    }
  }
  if (order.size() != n) {
    for (Ontology::Index i = 0; i < n; ++i) {
      if (pending[i] != 0) {
        throw Error(ErrorKind::subclass_cycle, "subclass cycle through class '" + o.names_[i] + "'");
      }
    }
  }

  // Coherence: no class may lie below both members of a disjoint pair.
  for (auto [a, b] : o.disjoint_pairs_) {
    boost::dynamic_bitset<std::uint64_t> below_a(n);
    std::vector<Ontology::Index> stack{a};
    below_a.set(a);
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      for (auto child : o.children_[c]) {
        if (!below_a.test(child)) {
          below_a.set(child);
          stack.push_back(child);
        }
      }
    }
    boost::dynamic_bitset<std::uint64_t> seen(n);
    stack.assign(1, b);
    seen.set(b);
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      if (below_a.test(c)) {
        throw Error(ErrorKind::incoherent_input,
                    "class '" + o.names_[c] + "' is subsumed by disjoint classes '" + o.names_[a] +
                        "' and '" + o.names_[b] + "'");
      }
      for (auto child : o.children_[c]) {
        if (!seen.test(child)) {
          seen.set(child);
          stack.push_back(child);
        }
      }
    }
  }
  return o;
}

}  // namespace alignrepair
