#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "dpo/independence.hpp"

namespace dpo::gen {

using Rng = std::mt19937_64;

struct Alphabet {
  std::vector<Label> node_labels{"a", "b"};
  std::vector<Label> edge_labels{"x", "y"};
};

struct GraphShape {
  std::size_t min_nodes = 0;
  std::size_t max_nodes = 4;
  std::size_t max_edges = 4;
  Alphabet alphabet{};
};

/// Random multigraph with sparse, shuffled ids. Loops and parallel edges occur.
Graph random_graph(Rng& rng, const GraphShape& shape);

/// Injective morphism from `source` into a fresh graph containing a
/// renumbered copy of `source` plus up to the given number of extra items.
Morphism random_embedding(Rng& rng, const Graph& source, std::size_t max_extra_nodes,
                          std::size_t max_extra_edges, const Alphabet& alphabet = {});

/// Random (generally non-injective, non-surjective) morphism from a fresh
/// graph into `target`.
Morphism random_morphism_into(Rng& rng, const Graph& target, std::size_t max_nodes, std::size_t max_edges);

/// Random morphism out of `source` that may merge like-labelled items and
/// adds up to the given number of extra target items.
Morphism random_morphism_from(Rng& rng, const Graph& source, std::size_t max_extra_nodes,
                              std::size_t max_extra_edges, const Alphabet& alphabet = {});

/// Random bijective morphism out of `source` (an id permutation).
Morphism random_isomorphism(Rng& rng, const Graph& source);

struct RuleShape {
  std::size_t max_lhs_nodes = 3;
  std::size_t max_lhs_edges = 2;
  std::size_t max_rhs_extra_nodes = 2;
  std::size_t max_rhs_extra_edges = 2;
  Alphabet alphabet{};
};

/// L random, K a random subgraph of L (renumbered), R an embedding of K
/// with extra items.
Rule random_rule(Rng& rng, const RuleShape& shape = {});

/// A random match of `rule` into `g` satisfying the dangling condition.
std::optional<Match> random_applicable_match(Rng& rng, const Rule& rule, const Graph& g);

/// Draws (rule, G, match) until an applicable match exists.
DirectDerivation random_derivation(Rng& rng, const GraphShape& host, const RuleShape& shape = {});

/// Two derivations out of one random host graph. When `independent` is set,
/// draws until the pair is parallel independent; otherwise returns the
/// first applicable pair. Gives up after `attempts` draws.
std::optional<ParallelPair> random_parallel_pair(Rng& rng, const GraphShape& host, const RuleShape& shape,
                                                 bool independent, std::size_t attempts = 1000);

}  // namespace dpo::gen
