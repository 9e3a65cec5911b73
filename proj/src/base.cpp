#include "impsplit/base.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace impsplit {

std::shared_ptr<const Ground> Ground::make(std::vector<std::string> toks) {
  std::sort(toks.begin(), toks.end());
  toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
  auto g = std::make_shared<Ground>();
  g->tokens = std::move(toks);
  g->index.reserve(g->tokens.size());
  for (std::size_t i = 0; i < g->tokens.size(); ++i)
    g->index.emplace(g->tokens[i], static_cast<int>(i));
  return g;
}

int Ground::find(std::string_view tok) const {
  auto it = index.find(std::string(tok));
  return it == index.end() ? -1 : it->second;
}

bool implication_less(const Implication& a, const Implication& b) {
  if (a.premise != b.premise) return lex_less(a.premise, b.premise);
  return lex_less(a.conclusion, b.conclusion);
}

ImplicationBase::ImplicationBase(GroundPtr ground, Bitset universe,
                                 std::vector<Implication> imps)
    : ground_(std::move(ground)),
      universe_(std::move(universe)),
      imps_(std::move(imps)) {
  for (const auto& imp : imps_) {
    if (imp.premise.none())
      throw Error("implication with empty premise");
    if (!imp.premise.is_subset_of(universe_) || !imp.conclusion.is_subset_of(universe_))
      throw ElementOutOfGround("implication mentions elements outside the universe");
  }
}

ImplicationBase make_base(
    const std::vector<std::string>& tokens,
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        implications) {
  std::vector<std::string> all = tokens;
  for (const auto& [lhs, rhs] : implications) {
    all.insert(all.end(), lhs.begin(), lhs.end());
    all.insert(all.end(), rhs.begin(), rhs.end());
  }
  GroundPtr g = Ground::make(std::move(all));
  const std::size_t n = g->size();
  std::vector<Implication> imps;
  imps.reserve(implications.size());
  for (const auto& [lhs, rhs] : implications) {
    Implication imp{Bitset(n), Bitset(n)};
    for (const auto& t : lhs) imp.premise.set(static_cast<std::size_t>(g->find(t)));
    for (const auto& t : rhs) imp.conclusion.set(static_cast<std::size_t>(g->find(t)));
    imps.push_back(std::move(imp));
  }
  return ImplicationBase(std::move(g), Bitset::full(n), std::move(imps));
}

namespace {

struct RawImplication {
  std::vector<std::string> lhs, rhs;
};

}  // namespace

ImplicationBase parse_base(std::istream& in) {
  std::vector<std::string> declared;
  std::vector<RawImplication> raw;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.front() == "ground:") {
      declared.insert(declared.end(), toks.begin() + 1, toks.end());
      continue;
    }
    RawImplication imp;
    bool seen_arrow = false;
    for (auto& t : toks) {
      if (t == "->") {
        if (seen_arrow) throw SyntaxError(line_no, "multiple '->' on one line");
        seen_arrow = true;
        continue;
      }
      (seen_arrow ? imp.rhs : imp.lhs).push_back(std::move(t));
    }
    if (!seen_arrow) throw SyntaxError(line_no, "expected '->'");
    if (imp.lhs.empty()) throw EmptyPremiseError(line_no);
    raw.push_back(std::move(imp));
  }

  std::vector<std::string> all = std::move(declared);
  for (const auto& imp : raw) {
    all.insert(all.end(), imp.lhs.begin(), imp.lhs.end());
    all.insert(all.end(), imp.rhs.begin(), imp.rhs.end());
  }
  GroundPtr g = Ground::make(std::move(all));
  const std::size_t n = g->size();
  std::vector<Implication> imps;
  imps.reserve(raw.size());
  for (const auto& r : raw) {
    Implication imp{Bitset(n), Bitset(n)};
    for (const auto& t : r.lhs) imp.premise.set(static_cast<std::size_t>(g->find(t)));
    for (const auto& t : r.rhs) imp.conclusion.set(static_cast<std::size_t>(g->find(t)));
    imps.push_back(std::move(imp));
  }
  return ImplicationBase(std::move(g), Bitset::full(n), std::move(imps));
}

ImplicationBase parse_base(const std::string& text) {
  std::istringstream in(text);
  return parse_base(in);
}

std::string format_set(const Ground& ground, const Bitset& set) {
  if (set.none()) return "-";
  std::string out;
  set.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += ground.tokens[i];
  });
  return out;
}

std::string format_implication(const Ground& ground, const Implication& imp) {
  return format_set(ground, imp.premise) + " -> " + format_set(ground, imp.conclusion);
}

ImplicationBase normalize(const ImplicationBase& base) {
  std::vector<Implication> imps;
  imps.reserve(base.size());
  for (const auto& imp : base.implications()) {
    Implication cleaned{imp.premise, imp.conclusion - imp.premise};
    if (cleaned.conclusion.none()) continue;
    imps.push_back(std::move(cleaned));
  }
  return ImplicationBase(base.ground(), base.universe(), std::move(imps));
}

std::string serialize(const ImplicationBase& base) {
  std::vector<Implication> imps;
  for (const auto& imp : base.implications()) {
    Implication cleaned{imp.premise, imp.conclusion - imp.premise};
    if (cleaned.conclusion.none()) continue;
    imps.push_back(std::move(cleaned));
  }
  std::sort(imps.begin(), imps.end(), implication_less);

  const Ground& g = *base.ground();
  std::string out = "ground:";
  base.universe().for_each([&](std::size_t i) {
    out += ' ';
    out += g.tokens[i];
  });
  out += '\n';
  for (const auto& imp : imps) {
    out += format_implication(g, imp);
    out += '\n';
  }
  return out;
}

ImplicationBase unit_expand(const ImplicationBase& base) {
  std::vector<Implication> imps;
  for (const auto& imp : base.implications()) {
    Bitset heads = imp.conclusion - imp.premise;
    heads.for_each([&](std::size_t b) {
      imps.push_back({imp.premise, Bitset::single(base.width(), b)});
    });
  }
  return ImplicationBase(base.ground(), base.universe(), std::move(imps));
}

ImplicationBase restrict_to(const ImplicationBase& base, const Bitset& subset) {
  if (!subset.is_subset_of(base.universe()))
    throw ElementOutOfGround("restriction set is not contained in the universe");
  std::vector<Implication> imps;
  for (const auto& imp : base.implications()) {
    if (!imp.premise.is_subset_of(subset)) continue;
    Bitset heads = imp.conclusion - imp.premise;
    heads.for_each([&](std::size_t b) {
      if (subset.test(b))
        imps.push_back({imp.premise, Bitset::single(base.width(), b)});
    });
  }
  return ImplicationBase(base.ground(), subset, std::move(imps));
}

ImplicationBase bipartite_part(const ImplicationBase& base, const Bitset& u1,
                               const Bitset& u2) {
  if (u1.intersects(u2) || (u1 | u2) != base.universe() || u1.none() || u2.none())
    throw BadBipartition("expected a non-trivial full bipartition of the universe");
  std::vector<Implication> imps;
  for (const auto& imp : base.implications()) {
    const Bitset* head_side = nullptr;
    if (imp.premise.is_subset_of(u1))
      head_side = &u2;
    else if (imp.premise.is_subset_of(u2))
      head_side = &u1;
    else
      throw NotASplitError(format_implication(*base.ground(), imp));
    Bitset heads = imp.conclusion - imp.premise;
    heads.for_each([&](std::size_t b) {
      if (head_side->test(b))
        imps.push_back({imp.premise, Bitset::single(base.width(), b)});
    });
  }
  return ImplicationBase(base.ground(), base.universe(), std::move(imps));
}

ImplicationBase rebase(const ImplicationBase& base, const GroundPtr& target) {
  if (base.ground() == target) return base;
  const std::size_t n = target->size();
  auto remap = [&](const Bitset& s) {
    Bitset out(n);
    s.for_each([&](std::size_t i) {
      int j = target->find(base.ground()->tokens[i]);
      if (j < 0) throw GroundMismatch("element missing from the target ground set");
      out.set(static_cast<std::size_t>(j));
    });
    return out;
  };
  std::vector<Implication> imps;
  imps.reserve(base.size());
  for (const auto& imp : base.implications())
    imps.push_back({remap(imp.premise), remap(imp.conclusion)});
  return ImplicationBase(target, remap(base.universe()), std::move(imps));
}

void SetFamily::sort_canonical() {
  std::sort(members.begin(), members.end(), size_lex_less);
}

bool SetFamily::contains(const Bitset& s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

SetFamily trace(const SetFamily& family, const Bitset& subset) {
  SetFamily out;
  out.universe = family.universe & subset;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& s : family.members) {
    Bitset t = s & subset;
    if (seen.insert(t).second) out.members.push_back(std::move(t));
  }
  return out;
}

std::vector<Bitset> dedup_sets(std::vector<Bitset> sets) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> out;
  out.reserve(sets.size());
  for (auto& s : sets)
    if (seen.insert(s).second) out.push_back(std::move(s));
  return out;
}

std::vector<Bitset> minimal_sets(std::vector<Bitset> sets) {
  sets = dedup_sets(std::move(sets));
  std::vector<Bitset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < sets.size() && minimal; ++j)
      if (i != j && sets[j].is_subset_of(sets[i])) minimal = false;
    if (minimal) out.push_back(sets[i]);
  }
  return out;
}

std::vector<Bitset> maximal_sets(std::vector<Bitset> sets) {
  sets = dedup_sets(std::move(sets));
  std::vector<Bitset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j)
      if (i != j && sets[i].is_subset_of(sets[j])) maximal = false;
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

bool is_antichain(std::span<const Bitset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].is_subset_of(sets[j])) return false;
  return true;
}

}  // namespace impsplit
