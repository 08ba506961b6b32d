#pragma once

#include <filesystem>

#include <json.hpp>

#include "dpo/independence.hpp"

namespace dpo::io {

using json = nlohmann::json;

// Graph:    {"nodes": [{"id": 0, "label": "a"}], "edges": [{"id": 0, "src": 0, "tgt": 0, "label": "x"}]}
// Morphism: {"fv": {"0": 3}, "fe": {"0": 1}} with optional "source"/"target" graphs
// Rule:     {"L": graph, "K": graph, "R": graph, "b": morphism, "r": morphism}
//
// Wherever a graph or morphism is expected, a string is read as a path to a
// file holding it, relative to the enclosing document.
//
// All parse failures raise FormatError.

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const Morphism& m);
Morphism morphism_from_json(const json& j, const Graph& source, const Graph& target);

json to_json(const Rule& rule);
Rule rule_from_json(const json& j, const std::filesystem::path& base = {});

json to_json(const ValidationReport& report);
json to_json(const CheckReport& report);
json to_json(const IsoWitness& iso);

/// Derivation trace: G, D, H, the seven morphisms of the double square and
/// both pushout reports.
json trace_json(const DirectDerivation& d);

/// {"graphs": {"A", "B", "C", "D"}, "morphisms": {"ab", "ac", "bd", "cd"}}
Square square_from_json(const json& j, const std::filesystem::path& base = {});
json to_json(const Square& sq);

json commutation_json(const CommutationResult& result, const SquareChecks& checks);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

/// Follows a string reference to a file, otherwise returns j itself.
json resolve(const json& j, const std::filesystem::path& base);

}  // namespace dpo::io
