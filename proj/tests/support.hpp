#pragma once

// Fixtures and independent brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls the code path it is used to check.

#include <cstdint>
#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "dpo/generate.hpp"

namespace dpo::testing {

using NodeSpec = std::pair<std::uint32_t, Label>;
using EdgeSpec = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, Label>;  // id, src, tgt, label

Graph make_graph(std::initializer_list<NodeSpec> nodes, std::initializer_list<EdgeSpec> edges = {});

Morphism make_morphism(const Graph& g, const Graph& h,
                       std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fv,
                       std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fe = {});

/// Re-checks totality, range and the four preservation clauses by direct
/// enumeration, without validate_morphism.
bool morphism_axioms_hold(const Morphism& m);

/// Tries every node bijection and every edge bijection.
bool brute_force_isomorphic(const Graph& g, const Graph& h);

/// Counts morphisms G → H by enumerating all |V_H|^|V_G| · |E_H|^|E_G| map pairs.
std::size_t brute_force_morphism_count(const Graph& g, const Graph& h, bool injective_only);

/// Number of node (edge) pairs ⟨x, y⟩ with f(x) = g(y).
std::pair<std::size_t, std::size_t> count_agreeing_pairs(const Morphism& f, const Morphism& g);

/// Parallel-independence witness by exhaustive search over all morphisms
/// L1 → D2 and L2 → D1 filtered by the two triangles.
bool exhaustive_parallel_witness(const ParallelPair& pair);

/// Subgraphs D' of G together with injective K → D' for which the left
/// square (K→L, K→D', L→G, D'↪G) passes is_pushout_injective.
std::vector<Graph> passing_complements(const Morphism& rule_left, const Morphism& match);

/// Counts mediating u: D → X with u∘bd = p and u∘cd = t for every cospan
/// (p, t) into x with p∘ab = t∘ac. Returns the number of cospans examined
/// and whether each had exactly one mediator.
struct ProbeResult {
  std::size_t cospans = 0;
  bool unique_everywhere = true;
};
ProbeResult universal_property_probe(const Square& sq, const Graph& x);

/// Fixed family of small graphs (|V| ≤ 3) used as probe targets.
std::vector<Graph> probe_family();

/// Fixed 40-graph corpus with |V| ≤ 5, |E| ≤ 6 and deliberate isomorphic copies.
std::vector<Graph> iso_corpus();

}  // namespace dpo::testing
