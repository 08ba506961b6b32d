#include "dpo/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <optional>

#include "dpo/generate.hpp"
#include "dpo/io.hpp"

namespace dpo::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

struct Options {
  bool json_only = false;
  std::string out_path;

  std::string file;
  std::string source_path, target_path;
  std::string rule_path, rule2_path, graph_path, graph2_path;
  std::optional<std::size_t> match_index;
  std::string match_path;
  std::string match1 = "0", match2 = "0";
  std::string trace_path;
  std::string report_path;
  std::string mode = "pushout";
  std::uint64_t seed = 0;
  std::string kind = "graph";
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int validate() {
    const fs::path path = opt_.file;
    const json j = io::read_file(path);
    const fs::path base = path.parent_path();
    ValidationReport report;
    std::string kind;
    if (j.contains("L")) {
      kind = "rule";
      report = validate_rule(io::rule_from_json(j, base));
    } else if (j.contains("fv")) {
      kind = "morphism";
      const json src = !opt_.source_path.empty() ? io::read_file(opt_.source_path)
                                                  : io::resolve(j.value("source", json()), base);
      const json tgt = !opt_.target_path.empty() ? io::read_file(opt_.target_path)
                                                  : io::resolve(j.value("target", json()), base);
      if (src.is_null() || tgt.is_null()) throw FormatError("morphism: source and target graphs required");
      const Graph g = io::graph_from_json(src);
      const Graph h = io::graph_from_json(tgt);
      for (const auto& v : validate_graph(g).violations) report.add("source " + v.item, v.clause);
      for (const auto& v : validate_graph(h).violations) report.add("target " + v.item, v.clause);
      for (const auto& v : validate_morphism(io::morphism_from_json(j, g, h)).violations) report.add(v.item, v.clause);
    } else {
      kind = "graph";
      report = validate_graph(io::graph_from_json(j));
    }
    json doc = io::to_json(report);
    doc["kind"] = kind;
    emit(doc);
    summary() << kind << ' ' << report << '\n';
    return report.ok() ? kOk : kVerdictFalse;
  }

  int iso() {
    const Graph g = load_graph(opt_.graph_path);
    const Graph h = load_graph(opt_.graph2_path);
    auto witness = is_isomorphic(g, h);
    emit(witness ? json{{"isomorphic", true}, {"witness", io::to_json(*witness)}} : json{{"isomorphic", false}});
    summary() << (witness ? "isomorphic" : "not isomorphic") << '\n';
    return witness ? kOk : kVerdictFalse;
  }

  int match() {
    const Rule rule = load_rule(opt_.rule_path);
    const Graph g = load_graph(opt_.graph_path);
    json list = json::array();
    std::size_t applicable = 0;
    const auto matches = find_matches(rule, g);
    for (std::size_t i = 0; i < matches.size(); ++i) {
      const bool ok = dangling_condition(rule, matches[i]).verdict;
      applicable += ok;
      json entry = io::to_json(matches[i]);
      entry["index"] = i;
      entry["dangling_ok"] = ok;
      list.push_back(entry);
    }
    emit(json{{"matches", list}});
    summary() << matches.size() << " matches, " << applicable << " satisfy the dangling condition\n";
    return kOk;
  }

  int apply_rule() {
    const Rule rule = load_rule(opt_.rule_path);
    const Graph g = load_graph(opt_.graph_path);
    const Match m = !opt_.match_path.empty() ? load_match(opt_.match_path, rule, g)
                                             : select_match(rule, g, opt_.match_index.value_or(0));
    try {
      const DirectDerivation d = apply(rule, m);
      if (!opt_.out_path.empty()) io::write_file(opt_.out_path, io::to_json(d.H()));
      const json trace = io::trace_json(d);
      if (!opt_.trace_path.empty()) io::write_file(opt_.trace_path, trace);
      emit(trace);
      summary() << "applied: |V_H| = " << d.H().node_count() << ", |E_H| = " << d.H().edge_count() << '\n';
      return kOk;
    } catch (const ApplicationError& e) {
      emit(json{{"error", "dangling"}, {"report", io::to_json(e.report())}});
      err_ << e.what() << '\n';
      return kDangling;
    }
  }

  int check_square() {
    const fs::path path = opt_.file;
    const Square sq = io::square_from_json(io::read_file(path), path.parent_path());
    CheckReport report;
    if (opt_.mode == "pushout") {
      report = is_pushout_injective(sq);
    } else if (opt_.mode == "pullback") {
      auto c = commutes(sq);
      report = c ? is_pullback(sq) : c;
    } else {
      throw PreconditionError("unknown mode '" + opt_.mode + "'");
    }
    json doc = io::to_json(report);
    doc["mode"] = opt_.mode;
    emit(doc);
    summary() << opt_.mode << ": " << report << '\n';
    return report ? kOk : kVerdictFalse;
  }

  int independent() {
    const ParallelPair pair = load_pair();
    const CheckReport report = parallel_independence_report(pair);
    json doc = io::to_json(report);
    doc["independent"] = report.verdict;
    emit(doc);
    summary() << (report ? "parallel independent" : "dependent") << (report ? "" : ": ") << (report ? "" : report.failed_clause.value_or(""))
              << '\n';
    return report ? kOk : kDependent;
  }

  int commute_pair() {
    const ParallelPair pair = load_pair();
    if (auto report = parallel_independence_report(pair); !report) {
      json doc = io::to_json(report);
      doc["independent"] = false;
      emit(doc);
      err_ << "dependent: " << report << '\n';
      return kDependent;
    }
    const CommutationResult result = commute(pair);
    const SquareChecks checks = verify_commutation_squares(pair, *parallel_independent(pair), result);
    const json doc = io::commutation_json(result, checks);
    if (!opt_.out_path.empty()) io::write_file(opt_.out_path, io::to_json(result.Gp));
    if (!opt_.report_path.empty()) io::write_file(opt_.report_path, doc);
    emit(doc);
    if (!checks.all_pass()) {
      err_ << "square check failed: " << checks.summary() << '\n';
      return kInternal;
    }
    summary() << "diamond closed: |V_G'| = " << result.Gp.node_count() << ", |E_G'| = " << result.Gp.edge_count()
              << ", " << checks.squares.size() << " squares verified\n";
    return kOk;
  }

  int generate() {
    gen::Rng rng(opt_.seed);
    const gen::GraphShape host{3, 6, 6};
    if (opt_.kind == "graph") {
      write_or_emit(io::to_json(gen::random_graph(rng, host)));
    } else if (opt_.kind == "rule") {
      write_or_emit(io::to_json(gen::random_rule(rng)));
    } else if (opt_.kind == "pushout-square") {
      const Graph k = gen::random_graph(rng, {0, 3, 2});
      const Morphism b = gen::random_embedding(rng, k, 2, 2);
      const Morphism d = gen::random_embedding(rng, k, 2, 2);
      write_or_emit(io::to_json(gluing_square(b, d, gluing(b, d))));
    } else if (opt_.kind == "pullback-square") {
      const Graph target = gen::random_graph(rng, {1, 4, 4});
      const Morphism f = gen::random_morphism_into(rng, target, 4, 4);
      const Morphism g = gen::random_morphism_into(rng, target, 4, 4);
      write_or_emit(io::to_json(pullback_square(f, g, pullback_construct(f, g))));
    } else if (opt_.kind == "pair") {
      if (opt_.out_path.empty()) throw PreconditionError("generate --kind pair needs --out <directory>");
      auto pair = gen::random_parallel_pair(rng, {4, 7, 6}, {}, true);
      if (!pair) throw PreconditionError("no independent pair found for this seed");
      const fs::path dir = opt_.out_path;
      fs::create_directories(dir);
      io::write_file(dir / "graph.json", io::to_json(pair->d1.G()));
      io::write_file(dir / "rule1.json", io::to_json(pair->d1.rule));
      io::write_file(dir / "rule2.json", io::to_json(pair->d2.rule));
      io::write_file(dir / "match1.json", io::to_json(pair->d1.match));
      io::write_file(dir / "match2.json", io::to_json(pair->d2.match));
      summary() << "wrote graph.json, rule1.json, rule2.json, match1.json, match2.json to " << dir.string() << '\n';
    } else {
      throw PreconditionError("unknown kind '" + opt_.kind + "'");
    }
    return kOk;
  }

 private:
  std::ostream& summary() {
    static std::ostream null(nullptr);
    return opt_.json_only ? null : err_;
  }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  void write_or_emit(const json& j) {
    if (opt_.out_path.empty()) {
      emit(j);
    } else {
      io::write_file(opt_.out_path, j);
    }
  }

  static Graph load_graph(const std::string& path) { return io::graph_from_json(io::read_file(path)); }

  static Rule load_rule(const std::string& path) {
    return io::rule_from_json(io::read_file(path), fs::path(path).parent_path());
  }

  static Match load_match(const std::string& path, const Rule& rule, const Graph& g) {
    return io::morphism_from_json(io::read_file(path), rule.L, g);
  }

  static Match select_match(const Rule& rule, const Graph& g, std::size_t index) {
    auto matches = find_matches(rule, g);
    if (index >= matches.size()) {
      throw PreconditionError("match index " + std::to_string(index) + " out of range (" +
                              std::to_string(matches.size()) + " matches)");
    }
    return matches[index];
  }

  // A selector is either a match index or a path to a morphism file.
  static Match selected(const std::string& selector, const Rule& rule, const Graph& g) {
    if (!selector.empty() && selector.find_first_not_of("0123456789") == std::string::npos) {
      return select_match(rule, g, std::stoul(selector));
    }
    return load_match(selector, rule, g);
  }

  ParallelPair load_pair() {
    const Rule p1 = load_rule(opt_.rule_path);
    const Rule p2 = load_rule(opt_.rule2_path);
    const Graph g = load_graph(opt_.graph_path);
    const Match m1 = selected(opt_.match1, p1, g);
    const Match m2 = selected(opt_.match2, p2, g);
    return ParallelPair{apply(p1, m1), apply(p2, m2)};
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double-pushout graph rewriting engine", "dpo"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_only, "Machine report only, no summary on stderr");

  auto* validate = app.add_subcommand("validate", "Validate a graph, rule or morphism file");
  validate->add_option("file", opt.file)->required();
  validate->add_option("--source", opt.source_path, "Source graph of a morphism file");
  validate->add_option("--target", opt.target_path, "Target graph of a morphism file");

  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("graph1", opt.graph_path)->required();
  iso->add_option("graph2", opt.graph2_path)->required();

  auto* match = app.add_subcommand("match", "List the injective matches of a rule");
  match->add_option("rule", opt.rule_path)->required();
  match->add_option("graph", opt.graph_path)->required();

  auto* apply = app.add_subcommand("apply", "Apply a rule at one match");
  apply->add_option("rule", opt.rule_path)->required();
  apply->add_option("graph", opt.graph_path)->required();
  auto* by_index = apply->add_option("--match-index", opt.match_index, "Index into the enumerated matches");
  apply->add_option("--match", opt.match_path, "Morphism file L -> G")->excludes(by_index);
  apply->add_option("--out", opt.out_path, "Write the result graph H here");
  apply->add_option("--trace", opt.trace_path, "Write the derivation trace here");

  auto* check = app.add_subcommand("check-square", "Check a square as pushout or pullback");
  check->add_option("square", opt.file)->required();
  check->add_option("--mode", opt.mode)->check(CLI::IsMember({"pushout", "pullback"}));

  auto* independent = app.add_subcommand("independent", "Test two derivations for parallel independence");
  auto* commute = app.add_subcommand("commute", "Close the Church-Rosser diamond of two independent derivations");
  for (auto* sub : {independent, commute}) {
    sub->add_option("rule1", opt.rule_path)->required();
    sub->add_option("rule2", opt.rule2_path)->required();
    sub->add_option("graph", opt.graph_path)->required();
    sub->add_option("--match1", opt.match1, "Match index or morphism file for rule1");
    sub->add_option("--match2", opt.match2, "Match index or morphism file for rule2");
  }
  commute->add_option("--out", opt.out_path, "Write G' here");
  commute->add_option("--report", opt.report_path, "Write the commutation report here");

  auto* generate = app.add_subcommand("generate", "Write a random corpus item");
  generate->add_option("--seed", opt.seed);
  generate->add_option("--kind", opt.kind)
      ->check(CLI::IsMember({"graph", "rule", "pushout-square", "pullback-square", "pair"}));
  generate->add_option("--out", opt.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  Runner runner(opt, out, err);
  try {
    if (*validate) return runner.validate();
    if (*iso) return runner.iso();
    if (*match) return runner.match();
    if (*apply) return runner.apply_rule();
    if (*check) return runner.check_square();
    if (*independent) return runner.independent();
    if (*commute) return runner.commute_pair();
    if (*generate) return runner.generate();
  } catch (const ApplicationError& e) {
    err << "error: " << e.what() << '\n';
    return kDangling;
  } catch (const DependentPairError& e) {
    err << "error: " << e.what() << '\n';
    return kDependent;
  } catch (const InternalConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace dpo::cli
