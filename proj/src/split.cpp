#include "impsplit/split.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace impsplit {

namespace {

// Union-find with path compression and union by rank.
struct UnionFind {
  std::vector<int> parent, rank_;

  explicit UnionFind(std::size_t n) : parent(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }
};

}  // namespace

ComponentPartition premise_components(const ImplicationBase& base) {
  const std::size_t width = base.width();
  UnionFind uf(width);
  for (const auto& imp : base.implications()) {
    int first = imp.premise.lowest();
    if (first < 0) continue;
    imp.premise.for_each([&](std::size_t e) { uf.unite(first, static_cast<int>(e)); });
  }

  ComponentPartition out;
  out.block_of.assign(width, -1);
  std::vector<int> root_to_block(width, -1);
  base.universe().for_each([&](std::size_t e) {
    int root = uf.find(static_cast<int>(e));
    int& id = root_to_block[static_cast<std::size_t>(root)];
    if (id < 0) {
      id = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back(width);
    }
    out.blocks[static_cast<std::size_t>(id)].set(e);
    out.block_of[e] = id;
  });
  // ascending universe scan already yields blocks ordered by smallest element
  return out;
}

bool has_split(const ImplicationBase& base) {
  if (base.universe().count() < 2) return false;
  return premise_components(base).blocks.size() >= 2;
}

std::optional<std::pair<Bitset, Bitset>> find_split(const ImplicationBase& base) {
  if (base.universe().count() < 2) return std::nullopt;
  ComponentPartition parts = premise_components(base);
  if (parts.blocks.size() < 2) return std::nullopt;
  Bitset u1 = parts.blocks.front();  // block of the smallest element
  return std::make_pair(u1, base.universe() - u1);
}

SplitReport is_split(const ImplicationBase& base, const Bitset& u1, const Bitset& u2) {
  if (u1.intersects(u2) || (u1 | u2) != base.universe() || u1.none() || u2.none())
    throw BadBipartition("expected a non-trivial full bipartition of the universe");

  SplitReport report;
  report.u1 = u1;
  report.u2 = u2;

  ImplicationBase units = unit_expand(base);
  bool cross_from_u1 = false, cross_from_u2 = false;
  std::vector<Implication> cross;
  for (const auto& imp : units.implications()) {
    const bool in_u1 = imp.premise.is_subset_of(u1);
    const bool in_u2 = imp.premise.is_subset_of(u2);
    if (!in_u1 && !in_u2) {
      report.kind = SplitKind::NotASplit;
      report.violation = imp;
      return report;
    }
    const std::size_t head = static_cast<std::size_t>(imp.conclusion.lowest());
    if (in_u1 && u2.test(head)) {
      cross_from_u1 = true;
      cross.push_back(imp);
    } else if (in_u2 && u1.test(head)) {
      cross_from_u2 = true;
      cross.push_back(imp);
    }
  }

  if (cross_from_u1 && cross_from_u2) {
    report.kind = SplitKind::Split;
  } else {
    report.kind = SplitKind::AcyclicSplit;
    if (cross_from_u2) std::swap(report.u1, report.u2);
  }
  report.i1 = restrict_to(base, report.u1);
  report.i2 = restrict_to(base, report.u2);
  report.ibip = ImplicationBase(base.ground(), base.universe(), std::move(cross));
  return report;
}

Condensation component_condensation(const ImplicationBase& base) {
  ComponentPartition parts = premise_components(base);
  Condensation out;
  out.blocks = std::move(parts.blocks);
  out.arcs.resize(out.blocks.size());
  out.internal_head.assign(out.blocks.size(), false);

  std::set<std::pair<int, int>> seen;
  for (const auto& imp : base.implications()) {
    int from = parts.block_of[static_cast<std::size_t>(imp.premise.lowest())];
    Bitset heads = imp.conclusion - imp.premise;
    heads.for_each([&](std::size_t b) {
      int to = parts.block_of[b];
      if (to == from) {
        out.internal_head[static_cast<std::size_t>(from)] = true;
      } else if (seen.emplace(from, to).second) {
        out.arcs[static_cast<std::size_t>(from)].push_back(to);
      }
    });
  }
  return out;
}

// Iterative Tarjan; component ids are assigned in completion order.
std::vector<int> strongly_connected_components(std::size_t n,
                                               const std::vector<std::vector<int>>& arcs,
                                               std::size_t& count) {
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack_pos;
  std::vector<bool> on_stack(n, false);
  int timer = 0;
  count = 0;

  struct Frame {
    int v;
    std::size_t next_arc;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (num[start] >= 0) continue;
    std::vector<Frame> frames{{static_cast<int>(start), 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.next_arc == 0) {
        num[v] = low[v] = timer++;
        stack_pos.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = true;
      }
      if (f.next_arc < arcs[static_cast<std::size_t>(v)].size()) {
        int w = arcs[static_cast<std::size_t>(v)][f.next_arc++];
        if (num[w] < 0) {
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          int w;
          do {
            w = stack_pos.back();
            stack_pos.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            comp[static_cast<std::size_t>(w)] = static_cast<int>(count);
          } while (w != v);
          ++count;
        }
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().v;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return comp;
}

std::optional<std::pair<Bitset, Bitset>> find_acyclic_split(const ImplicationBase& base) {
  if (base.universe().count() < 2) return std::nullopt;
  Condensation cond = component_condensation(base);
  const std::size_t nb = cond.blocks.size();
  std::size_t scc_count = 0;
  std::vector<int> comp = strongly_connected_components(nb, cond.arcs, scc_count);
  if (scc_count < 2) return std::nullopt;

  // sinks: components without outgoing arcs into another component
  std::vector<bool> sink(scc_count, true);
  for (std::size_t b = 0; b < nb; ++b)
    for (int to : cond.arcs[b])
      if (comp[b] != comp[static_cast<std::size_t>(to)])
        sink[static_cast<std::size_t>(comp[b])] = false;

  int chosen = -1, chosen_min = -1;
  for (std::size_t b = 0; b < nb; ++b) {
    int c = comp[b];
    if (!sink[static_cast<std::size_t>(c)]) continue;
    int min_elem = cond.blocks[b].lowest();
    if (chosen < 0 || min_elem < chosen_min) {
      chosen = c;
      chosen_min = min_elem;
    }
  }
  assert(chosen >= 0);

  Bitset u2(base.width());
  for (std::size_t b = 0; b < nb; ++b)
    if (comp[b] == chosen) u2 |= cond.blocks[b];
  Bitset u1 = base.universe() - u2;

  // re-check the construction before handing the cut out
  SplitReport rep = is_split(base, u1, u2);
  if (rep.kind != SplitKind::AcyclicSplit || rep.u1 != u1)
    throw Error("internal: condensation produced an invalid acyclic split");
  return std::make_pair(rep.u1, rep.u2);
}

}  // namespace impsplit
