#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "impsplit/base.hpp"
#include "impsplit/ccm.hpp"
#include "impsplit/closure.hpp"
#include "impsplit/dualize.hpp"
#include "impsplit/generate.hpp"
#include "impsplit/oracle.hpp"
#include "impsplit/split.hpp"
#include "impsplit/tree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitBudget = 3;

impsplit::ImplicationBase load_base(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw impsplit::Error("cannot open " + path);
  return impsplit::parse_base(in);
}

impsplit::Bitset parse_set(const impsplit::ImplicationBase& base, const std::string& text) {
  impsplit::Bitset out(base.width());
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "-") continue;  // explicit empty set
    int idx = base.ground()->find(tok);
    if (idx < 0) throw impsplit::ElementOutOfGround("unknown element: " + tok);
    out.set(static_cast<std::size_t>(idx));
  }
  return out;
}

void print_sets(const impsplit::Ground& ground, const std::vector<impsplit::Bitset>& sets) {
  for (const auto& s : sets) std::cout << impsplit::format_set(ground, s) << '\n';
}

void print_base_implications(const impsplit::ImplicationBase& b) {
  for (const auto& imp : b.implications())
    std::cout << impsplit::format_implication(*b.ground(), imp) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw impsplit::Error("cannot write " + path);
  out << text;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

struct VerifyOutcome {
  bool failed = false;
  bool skipped = false;
};

void report_check(VerifyOutcome& outcome, const std::string& name, bool pass,
                  const std::string& detail = "") {
  std::cout << "check " << name << ": " << (pass ? "pass" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << '\n';
  if (!pass) outcome.failed = true;
}

void report_skipped(VerifyOutcome& outcome, const std::string& name,
                    const std::string& why) {
  std::cout << "check " << name << ": skipped (" << why << ")\n";
  outcome.skipped = true;
}

int run_verify(const std::string& path, std::size_t budget) {
  using namespace impsplit;
  VerifyOutcome outcome;
  ImplicationBase base = load_base(path);
  std::cout << "base: |U| = " << base.universe().count() << ", |I| = " << base.size()
            << '\n';

  std::optional<SetFamily> oracle;
  try {
    ClosureSystem cs = enumerate_closed_sets(base, budget);
    std::cout << "closure system: |C| = " << cs.size() << '\n';
    oracle = meet_irreducibles_oracle(base, budget);
  } catch (const BudgetExceeded&) {
    report_skipped(outcome, "oracle-agreement", "enumeration budget exceeded");
  }

  CcmStats stats;
  MeetSet meets = ccm(base, {CcmStrategy::Auto, budget}, &stats);
  std::cout << "meet-irreducibles: |M| = " << meets.sets.size()
            << (stats.layered ? " (layered strategy)" : "") << '\n';

  if (oracle) {
    report_check(outcome, "oracle-agreement", meets.family() == *oracle);
  }

  bool inequality = true;
  for (const auto& rec : stats.combines)
    if (rec.combined < rec.left + rec.right) inequality = false;
  report_check(outcome, "combine-inequality", inequality,
               std::to_string(stats.combines.size()) + " combine steps");
  report_check(outcome, "unique-emission", stats.duplicate_emissions == 0);
  if (!stats.combines.empty()) {
    const auto& root = stats.combines.back();
    std::cout << "root split: |M1| = " << root.left << ", |M2| = " << root.right
              << ", |M| = " << root.combined << '\n';
  }

  DecompositionTree htree = h_build_tree(base);
  report_check(outcome, "factor-tree-valid", validate_tree(base, htree).ok);
  DecompositionTree atree = build_acyclic_tree(base);
  report_check(outcome, "acyclic-tree-valid", validate_tree(base, atree).ok);
  if (auto strict = build_tree(base)) {
    report_check(outcome, "strict-tree-valid", validate_tree(base, *strict).ok);
  } else {
    std::cout << "strict tree: FAIL (some factor is indecomposable)\n";
  }

  if (outcome.failed) return kExitVerifyFailed;
  if (outcome.skipped) return kExitBudget;
  return kExitOk;
}

struct BenchSpecLine {
  impsplit::GeneratorSpec spec;
  std::size_t reps = 1;
};

BenchSpecLine parse_bench_line(const std::string& line, int line_no) {
  BenchSpecLine out;
  std::istringstream ss(line);
  std::string kv;
  while (ss >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw impsplit::SyntaxError(line_no, "expected key=value, got: " + kv);
    std::string key = kv.substr(0, eq);
    std::string value = kv.substr(eq + 1);
    if (key == "mode")
      out.spec.mode = impsplit::parse_gen_mode(value);
    else if (key == "n")
      out.spec.n = std::stoull(value);
    else if (key == "m")
      out.spec.m = std::stoull(value);
    else if (key == "p")
      out.spec.max_premise = std::stoull(value);
    else if (key == "k")
      out.spec.k = std::stoull(value);
    else if (key == "seed")
      out.spec.seed = std::stoull(value);
    else if (key == "reps")
      out.reps = std::stoull(value);
    else
      throw impsplit::SyntaxError(line_no, "unknown key: " + key);
  }
  return out;
}

int run_bench(const std::string& specs_path, const std::string& out_path,
              std::size_t budget) {
  using namespace impsplit;
  std::ifstream in(specs_path);
  if (!in) throw Error("cannot open " + specs_path);

  std::ostringstream csv;
  csv << "n,m,mode,strategy,millis,M,agreed\n";
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BenchSpecLine bench = parse_bench_line(line, line_no);
    for (std::size_t rep = 0; rep < bench.reps; ++rep) {
      GeneratorSpec spec = bench.spec;
      spec.seed += rep;
      ImplicationBase base = generate_base(spec);
      auto row = [&](const std::string& strategy, double ms, const std::string& m,
                     const std::string& agreed) {
        csv << spec.n << ',' << base.size() << ',' << gen_mode_name(spec.mode) << ','
            << strategy << ',' << ms << ',' << m << ',' << agreed << '\n';
      };
      try {
        auto t0 = std::chrono::steady_clock::now();
        auto strict = build_tree(base);
        row("buildtree", millis_since(t0), strict ? "ok" : "FAIL", "");

        t0 = std::chrono::steady_clock::now();
        build_acyclic_tree(base);
        row("acyclictree", millis_since(t0), "ok", "");

        CcmStats stats;
        t0 = std::chrono::steady_clock::now();
        MeetSet meets = ccm(base, {CcmStrategy::Auto, budget}, &stats);
        double ccm_ms = millis_since(t0);
        std::string agreed = "skipped";
        if (base.universe().count() <= 16) {
          try {
            agreed = meets.family() == meet_irreducibles_oracle(base, budget)
                         ? "true"
                         : "false";
          } catch (const BudgetExceeded&) {
            agreed = "skipped";
          }
        }
        row(stats.layered ? "layered" : "auto", ccm_ms,
            std::to_string(meets.sets.size()), agreed);
      } catch (const Error& e) {
        row("error", 0.0, "", e.what());
      }
    }
  }
  write_text(out_path, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split decomposition of implicational bases and meet-irreducible enumeration"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t budget = impsplit::kDefaultBudget;
  std::uint64_t seed = 0;
  std::string out_path;
  app.add_option("--budget", budget, "closure-computation cap for oracle enumeration");
  app.add_option("--seed", seed, "pseudo-random seed");
  app.add_option("--out", out_path, "output file (default stdout)");

  std::string base_path, seed_tokens, mode_str = "strict", what = "lattice";
  std::string hypergraph_path, bminus_path, strategy_str = "auto", specs_path;
  bool provenance = false;
  impsplit::GeneratorSpec gen_spec;
  std::string gen_mode = "random";

  auto* cmd_closure = app.add_subcommand("closure", "closed set of a seed");
  cmd_closure->add_option("base", base_path)->required();
  cmd_closure->add_option("--seed", seed_tokens, "seed elements, e.g. \"2 3\"");

  auto* cmd_components = app.add_subcommand("components", "premise-connected components");
  cmd_components->add_option("base", base_path)->required();

  auto* cmd_split = app.add_subcommand("split", "find a split and its three sub-bases");
  cmd_split->add_option("base", base_path)->required();
  bool acyclic_only = false;
  cmd_split->add_flag("--acyclic", acyclic_only, "look for an acyclic split");

  auto* cmd_decompose = app.add_subcommand("decompose", "decomposition tree as JSON");
  cmd_decompose->add_option("base", base_path)->required();
  cmd_decompose->add_option("--mode", mode_str, "strict | hfactor | acyclic")
      ->check(CLI::IsMember({"strict", "hfactor", "acyclic"}));

  auto* cmd_ccm = app.add_subcommand("ccm", "meet-irreducible elements");
  cmd_ccm->add_option("base", base_path)->required();
  cmd_ccm->add_option("--strategy", strategy_str, "auto | layered | oracle")
      ->check(CLI::IsMember({"auto", "layered", "oracle"}));
  cmd_ccm->add_flag("--provenance", provenance, "append origin tags");

  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force lattice queries");
  cmd_oracle->add_option("base", base_path)->required();
  cmd_oracle->add_option("--what", what, "lattice | meets | covers")
      ->check(CLI::IsMember({"lattice", "meets", "covers"}));
  bool use_filter = false;
  cmd_oracle->add_flag("--filter", use_filter,
                       "enumerate by subset filtering instead (|U| <= 20)");

  auto* cmd_dualize = app.add_subcommand("dualize", "minimal transversals of a hypergraph");
  cmd_dualize->add_option("--hypergraph", hypergraph_path, "one edge per line")->required();

  auto* cmd_ldual = app.add_subcommand("ldual", "positive border dual to a negative one");
  cmd_ldual->add_option("base", base_path)->required();
  cmd_ldual->add_option("--bminus", bminus_path, "one set per line")->required();

  auto* cmd_generate = app.add_subcommand("generate", "write a pseudo-random base");
  cmd_generate->add_option("--mode", gen_mode, "random | acyclic | layered | ranked | chain");
  cmd_generate->add_option("--n", gen_spec.n, "ground size")->required();
  cmd_generate->add_option("--m", gen_spec.m, "implication count");
  cmd_generate->add_option("--p", gen_spec.max_premise, "max premise size");
  cmd_generate->add_option("--k", gen_spec.k, "block count for layered/ranked");

  auto* cmd_verify = app.add_subcommand("verify", "cross-check solver, oracle and trees");
  cmd_verify->add_option("base", base_path)->required();

  auto* cmd_bench = app.add_subcommand("bench", "time generated instances, CSV output");
  cmd_bench->add_option("specs", specs_path, "generator spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  using namespace impsplit;
  try {
    if (cmd_closure->parsed()) {
      ImplicationBase base = load_base(base_path);
      std::cout << format_set(*base.ground(), closure(base, parse_set(base, seed_tokens)))
                << '\n';
    } else if (cmd_components->parsed()) {
      ImplicationBase base = load_base(base_path);
      for (const auto& block : premise_components(base).blocks)
        std::cout << format_set(*base.ground(), block) << '\n';
    } else if (cmd_split->parsed()) {
      ImplicationBase base = load_base(base_path);
      auto cut = acyclic_only ? find_acyclic_split(base) : find_split(base);
      if (!cut) {
        std::cout << "NONE\n";
      } else {
        SplitReport rep = is_split(base, cut->first, cut->second);
        std::cout << "U1: " << format_set(*base.ground(), rep.u1) << '\n';
        std::cout << "U2: " << format_set(*base.ground(), rep.u2) << '\n';
        std::cout << "I[U1]:\n";
        print_base_implications(rep.i1);
        std::cout << "I[U2]:\n";
        print_base_implications(rep.i2);
        std::cout << "I[U1,U2]:\n";
        print_base_implications(rep.ibip);
      }
    } else if (cmd_decompose->parsed()) {
      ImplicationBase base = load_base(base_path);
      std::optional<DecompositionTree> tree;
      if (mode_str == "strict") {
        tree = build_tree(base);
        if (!tree) {
          std::cout << "FAIL\n";
          return kExitOk;
        }
      } else if (mode_str == "hfactor") {
        tree = h_build_tree(base);
      } else {
        tree = build_acyclic_tree(base);
      }
      write_text(out_path, tree_to_json(*tree).dump(2) + "\n");
    } else if (cmd_ccm->parsed()) {
      ImplicationBase base = load_base(base_path);
      CcmStrategy strategy = strategy_str == "layered"  ? CcmStrategy::Layered
                             : strategy_str == "oracle" ? CcmStrategy::Oracle
                                                        : CcmStrategy::Auto;
      MeetSet meets = ccm(base, {strategy, budget});
      for (std::size_t i = 0; i < meets.sets.size(); ++i) {
        std::cout << format_set(*base.ground(), meets.sets[i]);
        if (provenance) {
          const char* tag = meets.origins[i] == MeetOrigin::Type1     ? "Type1"
                            : meets.origins[i] == MeetOrigin::Type2   ? "Type2"
                                                                      : "LeafOracle";
          std::cout << '\t' << tag;
        }
        std::cout << '\n';
      }
    } else if (cmd_oracle->parsed()) {
      ImplicationBase base = load_base(base_path);
      auto enumerate = [&] {
        return use_filter ? enumerate_closed_sets_filter(base)
                          : enumerate_closed_sets(base, budget);
      };
      if (what == "lattice") {
        print_sets(*base.ground(), enumerate().sets);
      } else if (what == "meets") {
        if (use_filter) {
          ClosureSystem cs = enumerate();
          for (const auto& c : cs.sets)
            if (c != cs.universe && covers_of(cs, c).members.size() == 1)
              std::cout << format_set(*base.ground(), c) << '\n';
        } else {
          print_sets(*base.ground(), meet_irreducibles_oracle(base, budget).members);
        }
      } else {
        ClosureSystem cs = enumerate();
        for (const auto& c : cs.sets)
          for (const auto& up : covers_of(cs, c).members)
            std::cout << format_set(*base.ground(), c) << " < "
                      << format_set(*base.ground(), up) << '\n';
      }
    } else if (cmd_dualize->parsed()) {
      std::ifstream in(hypergraph_path);
      if (!in) throw Error("cannot open " + hypergraph_path);
      std::vector<std::vector<std::string>> edges;
      std::vector<std::string> all_tokens;
      std::string line;
      while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.front() == "vertices:") {
          all_tokens.insert(all_tokens.end(), toks.begin() + 1, toks.end());
          continue;
        }
        if (toks.size() == 1 && toks.front() == "-") toks.clear();
        for (const auto& t : toks) all_tokens.push_back(t);
        edges.push_back(std::move(toks));
      }
      GroundPtr ground = Ground::make(all_tokens);
      Hypergraph h{Bitset::full(ground->size()), {}};
      for (const auto& edge : edges) {
        Bitset e(ground->size());
        for (const auto& t : edge) e.set(static_cast<std::size_t>(ground->find(t)));
        h.edges.push_back(std::move(e));
      }
      for (const auto& t : min_transversals(h).edges)
        std::cout << format_set(*ground, t) << '\n';
    } else if (cmd_ldual->parsed()) {
      ImplicationBase base = load_base(base_path);
      std::ifstream in(bminus_path);
      if (!in) throw Error("cannot open " + bminus_path);
      Border bminus{Polarity::Negative, base.universe(), {}};
      std::string line;
      while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        bminus.sets.push_back(parse_set(base, line));
      }
      SetFamily m1 = meet_irreducibles_oracle(base, budget);
      print_sets(*base.ground(), ldual(base, m1, bminus).sets);
    } else if (cmd_generate->parsed()) {
      gen_spec.mode = parse_gen_mode(gen_mode);
      gen_spec.seed = seed;
      write_text(out_path, serialize(generate_base(gen_spec)));
    } else if (cmd_verify->parsed()) {
      return run_verify(base_path, budget);
    } else if (cmd_bench->parsed()) {
      return run_bench(specs_path, out_path, budget);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
