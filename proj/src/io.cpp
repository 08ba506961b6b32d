#include "dpo/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace dpo::io {
namespace {

std::uint32_t as_id(const json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > UINT32_MAX) {
    throw FormatError(std::string(what) + ": expected a non-negative integer id");
  }
  return j.get<std::uint32_t>();
}

std::uint32_t key_id(const std::string& key, std::string_view what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(key, &used);
    if (used != key.size() || key.front() == '-' || v > UINT32_MAX) throw std::invalid_argument(key);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw FormatError(std::string(what) + ": bad id key '" + key + "'");
  }
}

const json& field(const json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

Label as_label(const json& j, std::string_view what) {
  if (!j.is_string()) throw FormatError(std::string(what) + ": label must be a string");
  return j.get<std::string>();
}

}  // namespace

json resolve(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) return read_file(base / j.get<std::string>());
  return j;
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json to_json(const Graph& g) {
  json nodes = json::array();
  for (const auto& [id, label] : g.nodes()) nodes.push_back({{"id", id.value}, {"label", label}});
  json edges = json::array();
  for (const auto& [id, e] : g.edges()) {
    edges.push_back({{"id", id.value}, {"src", e.src.value}, {"tgt", e.tgt.value}, {"label", e.label}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("graph: expected an object");
  Graph g;
  const json& nodes = field(j, "nodes", "graph");
  const json empty = json::array();
  const json& edges = j.contains("edges") ? j.at("edges") : empty;
  if (!nodes.is_array() || !edges.is_array()) throw FormatError("graph: nodes and edges must be arrays");
  for (const auto& n : nodes) {
    const NodeId id{as_id(field(n, "id", "node"), "node")};
    if (g.has_node(id)) throw FormatError("graph: duplicate node id " + std::to_string(id.value));
    g.add_node(id, as_label(field(n, "label", "node"), "node"));
  }
  for (const auto& e : edges) {
    const EdgeId id{as_id(field(e, "id", "edge"), "edge")};
    if (g.has_edge(id)) throw FormatError("graph: duplicate edge id " + std::to_string(id.value));
    g.add_edge(id, NodeId{as_id(field(e, "src", "edge"), "edge src")}, NodeId{as_id(field(e, "tgt", "edge"), "edge tgt")},
               as_label(field(e, "label", "edge"), "edge"));
  }
  return g;
}

json to_json(const Morphism& m) {
  json fv = json::object();
  for (const auto& [a, b] : m.node_map) fv[std::to_string(a.value)] = b.value;
  json fe = json::object();
  for (const auto& [a, b] : m.edge_map) fe[std::to_string(a.value)] = b.value;
  return {{"fv", fv}, {"fe", fe}};
}

Morphism morphism_from_json(const json& j, const Graph& source, const Graph& target) {
  Morphism m{source, target, {}, {}};
  const json& fv = field(j, "fv", "morphism");
  const json empty = json::object();
  const json& fe = j.contains("fe") ? j.at("fe") : empty;
  if (!fv.is_object() || !fe.is_object()) throw FormatError("morphism: fv and fe must be objects");
  for (const auto& [k, v] : fv.items()) m.node_map.emplace(NodeId{key_id(k, "fv")}, NodeId{as_id(v, "fv")});
  for (const auto& [k, v] : fe.items()) m.edge_map.emplace(EdgeId{key_id(k, "fe")}, EdgeId{as_id(v, "fe")});
  return m;
}

json to_json(const Rule& rule) {
  return {{"L", to_json(rule.L)}, {"K", to_json(rule.K)}, {"R", to_json(rule.R)},
          {"b", to_json(rule.b)}, {"r", to_json(rule.r)}};
}

Rule rule_from_json(const json& j, const std::filesystem::path& base) {
  Rule rule;
  rule.L = graph_from_json(resolve(field(j, "L", "rule"), base));
  rule.K = graph_from_json(resolve(field(j, "K", "rule"), base));
  rule.R = graph_from_json(resolve(field(j, "R", "rule"), base));
  rule.b = morphism_from_json(resolve(field(j, "b", "rule"), base), rule.K, rule.L);
  rule.r = morphism_from_json(resolve(field(j, "r", "rule"), base), rule.K, rule.R);
  return rule;
}

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back({{"item", v.item}, {"clause", v.clause}});
  return {{"ok", report.ok()}, {"violations", violations}};
}

json to_json(const CheckReport& report) {
  json j{{"verdict", report.verdict}};
  if (report.failed_clause) j["failed_clause"] = *report.failed_clause;
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j;
}

json to_json(const IsoWitness& iso) {
  json fv = json::object();
  for (const auto& [a, b] : iso.node_map) fv[std::to_string(a.value)] = b.value;
  json fe = json::object();
  for (const auto& [a, b] : iso.edge_map) fe[std::to_string(a.value)] = b.value;
  return {{"fv", fv}, {"fe", fe}};
}

json trace_json(const DirectDerivation& d) {
  return {
      {"G", to_json(d.G())},
      {"D", to_json(d.D())},
      {"H", to_json(d.H())},
      {"morphisms",
       {{"K_to_L", to_json(d.rule.b)},
        {"K_to_R", to_json(d.rule.r)},
        {"match", to_json(d.match)},
        {"K_to_D", to_json(d.deletion.d)},
        {"D_to_G", to_json(d.deletion.c)},
        {"D_to_H", to_json(d.gluing.c)},
        {"comatch", to_json(d.comatch)}}},
      {"checks",
       {{"left_pushout", to_json(is_pushout_injective(d.left_square()))},
        {"right_pushout", to_json(is_pushout_injective(d.right_square()))}}},
  };
}

Square square_from_json(const json& j, const std::filesystem::path& base) {
  const json& graphs = field(j, "graphs", "square");
  const json& morphisms = field(j, "morphisms", "square");
  const Graph a = graph_from_json(resolve(field(graphs, "A", "square graphs"), base));
  const Graph b = graph_from_json(resolve(field(graphs, "B", "square graphs"), base));
  const Graph c = graph_from_json(resolve(field(graphs, "C", "square graphs"), base));
  const Graph d = graph_from_json(resolve(field(graphs, "D", "square graphs"), base));
  auto morph = [&](const char* key, const Graph& from, const Graph& to) {
    return morphism_from_json(resolve(field(morphisms, key, "square morphisms"), base), from, to);
  };
  return Square{morph("ab", a, b), morph("ac", a, c), morph("bd", b, d), morph("cd", c, d)};
}

json to_json(const Square& sq) {
  return {{"graphs",
           {{"A", to_json(sq.ab.source)}, {"B", to_json(sq.ab.target)},
            {"C", to_json(sq.ac.target)}, {"D", to_json(sq.bd.target)}}},
          {"morphisms", {{"ab", to_json(sq.ab)}, {"ac", to_json(sq.ac)}, {"bd", to_json(sq.bd)}, {"cd", to_json(sq.cd)}}}};
}

json commutation_json(const CommutationResult& result, const SquareChecks& checks) {
  json squares = json::array();
  for (const auto& [label, report] : checks.squares) {
    json entry = to_json(report);
    entry["square"] = label;
    squares.push_back(entry);
  }
  return {{"G_prime", to_json(result.Gp)},
          {"residual_match_L2_to_H1", to_json(result.m2_residual)},
          {"residual_match_L1_to_H2", to_json(result.m1_residual)},
          {"H1_branch_result", to_json(result.e1.H())},
          {"H2_branch_result", to_json(result.e2.H())},
          {"iso", to_json(result.iso)},
          {"squares", squares},
          {"all_squares_pass", checks.all_pass()}};
}

}  // namespace dpo::io
