#include "dpo/generate.hpp"

#include <algorithm>
#include <numeric>

namespace dpo::gen {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

// `count` distinct ids drawn from [0, 3 * count + 2], in random order.
std::vector<std::uint32_t> sparse_ids(Rng& rng, std::size_t count) {
  std::vector<std::uint32_t> pool(3 * count + 3);
  std::iota(pool.begin(), pool.end(), 0u);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

std::vector<NodeId> node_ids(const Graph& g) {
  std::vector<NodeId> out;
  for (const auto& [n, label] : g.nodes()) out.push_back(n);
  return out;
}

void add_random_edges(Rng& rng, Graph& g, std::size_t count, const Alphabet& alphabet) {
  const auto nodes = node_ids(g);
  if (nodes.empty()) return;
  for (std::size_t i = 0; i < count; ++i) {
    g.add_edge(pick(rng, nodes), pick(rng, nodes), pick(rng, alphabet.edge_labels));
  }
}

}  // namespace

Graph random_graph(Rng& rng, const GraphShape& shape) {
  Graph g;
  const std::size_t n = uniform(rng, shape.min_nodes, std::max(shape.min_nodes, shape.max_nodes));
  for (std::uint32_t id : sparse_ids(rng, n)) g.add_node(NodeId{id}, pick(rng, shape.alphabet.node_labels));
  if (n == 0) return g;
  const auto nodes = node_ids(g);
  const auto edge_ids = sparse_ids(rng, uniform(rng, 0, shape.max_edges));
  for (std::uint32_t id : edge_ids) {
    g.add_edge(EdgeId{id}, pick(rng, nodes), pick(rng, nodes), pick(rng, shape.alphabet.edge_labels));
  }
  return g;
}

Morphism random_isomorphism(Rng& rng, const Graph& source) {
  const auto nids = sparse_ids(rng, source.node_count());
  const auto eids = sparse_ids(rng, source.edge_count());
  Morphism m{source, {}, {}, {}};
  std::size_t i = 0;
  for (const auto& [n, label] : source.nodes()) m.node_map.emplace(n, NodeId{nids[i++]});
  i = 0;
  for (const auto& [e, edge] : source.edges()) m.edge_map.emplace(e, EdgeId{eids[i++]});
  m.target = renumber(source, m.node_map, m.edge_map);
  return m;
}

Morphism random_embedding(Rng& rng, const Graph& source, std::size_t max_extra_nodes,
                          std::size_t max_extra_edges, const Alphabet& alphabet) {
  Morphism m = random_isomorphism(rng, source);
  const std::size_t extra_nodes = uniform(rng, 0, max_extra_nodes);
  for (std::size_t i = 0; i < extra_nodes; ++i) m.target.add_node(pick(rng, alphabet.node_labels));
  add_random_edges(rng, m.target, uniform(rng, 0, max_extra_edges), alphabet);
  return m;
}

Morphism random_morphism_into(Rng& rng, const Graph& target, std::size_t max_nodes, std::size_t max_edges) {
  Morphism m{{}, target, {}, {}};
  if (target.node_count() == 0) return m;
  const auto tnodes = node_ids(target);
  std::map<NodeId, std::vector<NodeId>> preimages;
  auto fresh_over = [&](NodeId t) {
    NodeId n = m.source.add_node(target.node_label(t));
    m.node_map.emplace(n, t);
    preimages[t].push_back(n);
    return n;
  };
  auto node_over = [&](NodeId t) {
    auto& pre = preimages[t];
    return (pre.empty() || coin(rng, 0.3)) ? fresh_over(t) : pick(rng, pre);
  };
  const std::size_t n = uniform(rng, 0, max_nodes);
  for (std::size_t i = 0; i < n; ++i) fresh_over(pick(rng, tnodes));
  if (target.edge_count() > 0) {
    std::vector<EdgeId> tedges;
    for (const auto& [e, edge] : target.edges()) tedges.push_back(e);
    const std::size_t k = uniform(rng, 0, max_edges);
    for (std::size_t i = 0; i < k; ++i) {
      const EdgeId te = pick(rng, tedges);
      const Edge& edge = target.edge(te);
      const NodeId s = node_over(edge.src);
      const NodeId t = node_over(edge.tgt);
      m.edge_map.emplace(m.source.add_edge(s, t, edge.label), te);
    }
  }
  return m;
}

Morphism random_morphism_from(Rng& rng, const Graph& source, std::size_t max_extra_nodes,
                              std::size_t max_extra_edges, const Alphabet& alphabet) {
  Morphism m{source, {}, {}, {}};
  std::map<Label, std::vector<NodeId>> by_label;
  for (const auto& [n, label] : source.nodes()) {
    auto& bucket = by_label[label];
    if (!bucket.empty() && coin(rng, 0.3)) {
      m.node_map.emplace(n, pick(rng, bucket));
    } else {
      NodeId t = m.target.add_node(label);
      bucket.push_back(t);
      m.node_map.emplace(n, t);
    }
  }
  for (const auto& [e, edge] : source.edges()) {
    const NodeId s = m.node_map.at(edge.src);
    const NodeId t = m.node_map.at(edge.tgt);
    std::vector<EdgeId> reusable;
    for (const auto& [f, fe] : m.target.edges()) {
      if (fe.src == s && fe.tgt == t && fe.label == edge.label) reusable.push_back(f);
    }
    if (!reusable.empty() && coin(rng, 0.3)) {
      m.edge_map.emplace(e, pick(rng, reusable));
    } else {
      m.edge_map.emplace(e, m.target.add_edge(s, t, edge.label));
    }
  }
  const std::size_t extra = uniform(rng, 0, max_extra_nodes);
  for (std::size_t i = 0; i < extra; ++i) m.target.add_node(pick(rng, alphabet.node_labels));
  add_random_edges(rng, m.target, uniform(rng, 0, max_extra_edges), alphabet);
  return m;
}

Rule random_rule(Rng& rng, const RuleShape& shape) {
  const Graph lhs = random_graph(rng, {1, shape.max_lhs_nodes, shape.max_lhs_edges, shape.alphabet});

  Graph kept;
  for (const auto& [n, label] : lhs.nodes()) {
    if (coin(rng)) kept.add_node(n, label);
  }
  for (const auto& [e, edge] : lhs.edges()) {
    if (kept.has_node(edge.src) && kept.has_node(edge.tgt) && coin(rng)) kept.add_edge(e, edge.src, edge.tgt, edge.label);
  }
  // K gets its own ids; b maps them back onto L.
  const Morphism k_to_kept = invert(random_isomorphism(rng, kept));
  const Morphism b = compose(inclusion(kept, lhs), k_to_kept);
  const Morphism r = random_embedding(rng, b.source, shape.max_rhs_extra_nodes, shape.max_rhs_extra_edges,
                                      shape.alphabet);
  return make_rule(b, r);
}

std::optional<Match> random_applicable_match(Rng& rng, const Rule& rule, const Graph& g) {
  std::vector<Match> ok;
  for (auto& m : find_matches(rule, g)) {
    if (dangling_condition(rule, m)) ok.push_back(std::move(m));
  }
  if (ok.empty()) return std::nullopt;
  return pick(rng, ok);
}

DirectDerivation random_derivation(Rng& rng, const GraphShape& host, const RuleShape& shape) {
  for (;;) {
    const Rule rule = random_rule(rng, shape);
    const Graph g = random_graph(rng, host);
    if (auto m = random_applicable_match(rng, rule, g)) return apply(rule, *m);
  }
}

std::optional<ParallelPair> random_parallel_pair(Rng& rng, const GraphShape& host, const RuleShape& shape,
                                                 bool independent, std::size_t attempts) {
  for (std::size_t i = 0; i < attempts; ++i) {
    const Graph g = random_graph(rng, host);
    const Rule p1 = random_rule(rng, shape);
    const Rule p2 = random_rule(rng, shape);
    auto m1 = random_applicable_match(rng, p1, g);
    auto m2 = random_applicable_match(rng, p2, g);
    if (!m1 || !m2) continue;
    ParallelPair pair{apply(p1, *m1), apply(p2, *m2)};
    if (!independent || parallel_independent(pair)) return pair;
  }
  return std::nullopt;
}

}  // namespace dpo::gen
