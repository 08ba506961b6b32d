#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dpo::testing {

Graph make_graph(std::initializer_list<NodeSpec> nodes, std::initializer_list<EdgeSpec> edges) {
  Graph g;
  for (const auto& [id, label] : nodes) g.add_node(NodeId{id}, label);
  for (const auto& [id, s, t, label] : edges) g.add_edge(EdgeId{id}, NodeId{s}, NodeId{t}, label);
  return g;
}

Morphism make_morphism(const Graph& g, const Graph& h,
                       std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fv,
                       std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fe) {
  Morphism m{g, h, {}, {}};
  for (const auto& [a, b] : fv) m.node_map.emplace(NodeId{a}, NodeId{b});
  for (const auto& [a, b] : fe) m.edge_map.emplace(EdgeId{a}, EdgeId{b});
  return m;
}

bool morphism_axioms_hold(const Morphism& m) {
  const Graph& g = m.source;
  const Graph& h = m.target;
  if (m.node_map.size() != g.node_count() || m.edge_map.size() != g.edge_count()) return false;
  for (const auto& [v, label] : g.nodes()) {
    auto it = m.node_map.find(v);
    if (it == m.node_map.end() || !h.nodes().contains(it->second)) return false;
    if (h.nodes().at(it->second) != label) return false;
  }
  for (const auto& [e, edge] : g.edges()) {
    auto it = m.edge_map.find(e);
    if (it == m.edge_map.end() || !h.edges().contains(it->second)) return false;
    const Edge& image = h.edges().at(it->second);
    if (m.node_map.at(edge.src) != image.src) return false;
    if (m.node_map.at(edge.tgt) != image.tgt) return false;
    if (edge.label != image.label) return false;
  }
  return true;
}

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<NodeId> gv, hv;
  std::vector<EdgeId> ge, he;
  for (const auto& [n, l] : g.nodes()) gv.push_back(n);
  for (const auto& [n, l] : h.nodes()) hv.push_back(n);
  for (const auto& [e, x] : g.edges()) ge.push_back(e);
  for (const auto& [e, x] : h.edges()) he.push_back(e);

  do {
    std::map<NodeId, NodeId> fv;
    bool labels_ok = true;
    for (std::size_t i = 0; i < gv.size(); ++i) {
      fv[gv[i]] = hv[i];
      if (g.node_label(gv[i]) != h.node_label(hv[i])) labels_ok = false;
    }
    if (!labels_ok) continue;
    std::vector<EdgeId> perm = he;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < ge.size() && ok; ++i) {
        const Edge& a = g.edge(ge[i]);
        const Edge& b = h.edge(perm[i]);
        ok = a.label == b.label && fv.at(a.src) == b.src && fv.at(a.tgt) == b.tgt;
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(hv.begin(), hv.end()));
  return false;
}

std::size_t brute_force_morphism_count(const Graph& g, const Graph& h, bool injective_only) {
  std::vector<NodeId> gv, hv;
  std::vector<EdgeId> ge, he;
  for (const auto& [n, l] : g.nodes()) gv.push_back(n);
  for (const auto& [n, l] : h.nodes()) hv.push_back(n);
  for (const auto& [e, x] : g.edges()) ge.push_back(e);
  for (const auto& [e, x] : h.edges()) he.push_back(e);
  if ((!gv.empty() && hv.empty()) || (!ge.empty() && he.empty())) return 0;

  // odometers over all node maps and all edge maps
  std::vector<std::size_t> vi(gv.size(), 0), ei(ge.size(), 0);
  auto advance = [](std::vector<std::size_t>& digits, std::size_t base) {
    for (auto& d : digits) {
      if (++d < base) return true;
      d = 0;
    }
    return false;
  };
  std::size_t count = 0;
  do {
    Morphism m{g, h, {}, {}};
    for (std::size_t i = 0; i < gv.size(); ++i) m.node_map[gv[i]] = hv[vi[i]];
    if (injective_only && std::set<std::size_t>(vi.begin(), vi.end()).size() != vi.size()) continue;
    std::fill(ei.begin(), ei.end(), 0);
    do {
      m.edge_map.clear();
      for (std::size_t i = 0; i < ge.size(); ++i) m.edge_map[ge[i]] = he[ei[i]];
      if (injective_only && std::set<std::size_t>(ei.begin(), ei.end()).size() != ei.size()) continue;
      if (morphism_axioms_hold(m)) ++count;
    } while (!ge.empty() && advance(ei, he.size()));
  } while (!gv.empty() && advance(vi, hv.size()));
  return count;
}

std::pair<std::size_t, std::size_t> count_agreeing_pairs(const Morphism& f, const Morphism& g) {
  std::size_t nodes = 0, edges = 0;
  for (const auto& [x, fx] : f.node_map) {
    for (const auto& [y, gy] : g.node_map) nodes += fx == gy;
  }
  for (const auto& [x, fx] : f.edge_map) {
    for (const auto& [y, gy] : g.edge_map) edges += fx == gy;
  }
  return {nodes, edges};
}

bool exhaustive_parallel_witness(const ParallelPair& pair) {
  auto found = [](const Morphism& match, const DirectDerivation& other) {
    for (const auto& j : enumerate_morphisms(match.source, other.D(), false)) {
      const Morphism& c = other.deletion.c;
      bool ok = true;
      for (const auto& [x, y] : j.node_map) ok = ok && c.node_map.at(y) == match.node_map.at(x);
      for (const auto& [x, y] : j.edge_map) ok = ok && c.edge_map.at(y) == match.edge_map.at(x);
      if (ok) return true;
    }
    return false;
  };
  return found(pair.d1.match, pair.d2) && found(pair.d2.match, pair.d1);
}

std::vector<Graph> passing_complements(const Morphism& rule_left, const Morphism& match) {
  const Graph& g = match.target;
  std::vector<NodeId> nodes;
  std::vector<EdgeId> edges;
  for (const auto& [n, l] : g.nodes()) nodes.push_back(n);
  for (const auto& [e, x] : g.edges()) edges.push_back(e);

  std::vector<Graph> out;
  for (std::uint32_t nmask = 0; nmask < (1u << nodes.size()); ++nmask) {
    Graph base;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nmask & (1u << i)) base.add_node(nodes[i], g.node_label(nodes[i]));
    }
    for (std::uint32_t emask = 0; emask < (1u << edges.size()); ++emask) {
      Graph sub = base;
      bool closed = true;
      for (std::size_t i = 0; i < edges.size() && closed; ++i) {
        if (!(emask & (1u << i))) continue;
        const Edge& e = g.edge(edges[i]);
        closed = sub.has_node(e.src) && sub.has_node(e.tgt);
        if (closed) sub.add_edge(edges[i], e.src, e.tgt, e.label);
      }
      if (!closed) continue;
      const Morphism into_g = inclusion(sub, g);
      for (const auto& kd : enumerate_morphisms(rule_left.source, sub, true)) {
        if (is_pushout_injective(Square{rule_left, kd, match, into_g})) {
          out.push_back(sub);
          break;
        }
      }
    }
  }
  return out;
}

namespace {

using MapKey = std::pair<std::map<NodeId, NodeId>, std::map<EdgeId, EdgeId>>;

MapKey key_of(const Morphism& m) { return {m.node_map, m.edge_map}; }

}  // namespace

ProbeResult universal_property_probe(const Square& sq, const Graph& x) {
  ProbeResult result;
  const auto ps = enumerate_morphisms(sq.ab.target, x, false);
  const auto ts = enumerate_morphisms(sq.ac.target, x, false);
  const auto us = enumerate_morphisms(sq.bd.target, x, false);

  std::map<MapKey, std::vector<std::size_t>> t_by_restriction;
  for (std::size_t i = 0; i < ts.size(); ++i) t_by_restriction[key_of(compose(ts[i], sq.ac))].push_back(i);

  // mediator count per (p, t)
  std::map<std::pair<MapKey, MapKey>, std::size_t> mediators;
  for (const auto& u : us) ++mediators[{key_of(compose(u, sq.bd)), key_of(compose(u, sq.cd))}];

  for (const auto& p : ps) {
    auto it = t_by_restriction.find(key_of(compose(p, sq.ab)));
    if (it == t_by_restriction.end()) continue;
    for (std::size_t ti : it->second) {
      ++result.cospans;
      auto m = mediators.find({key_of(p), key_of(ts[ti])});
      if (m == mediators.end() || m->second != 1) result.unique_everywhere = false;
    }
  }
  return result;
}

std::vector<Graph> probe_family() {
  std::vector<Graph> family{
      make_graph({{0, "a"}}),
      make_graph({{0, "a"}}, {{0, 0, 0, "x"}}),
      make_graph({{0, "a"}}, {{0, 0, 0, "x"}, {1, 0, 0, "y"}}),
      make_graph({{0, "a"}, {1, "b"}}, {{0, 0, 0, "x"}, {1, 1, 1, "x"}, {2, 0, 1, "x"}, {3, 1, 0, "x"}}),
      make_graph({{0, "a"}, {1, "b"}},
                 {{0, 0, 0, "x"}, {1, 0, 0, "y"}, {2, 1, 1, "x"}, {3, 1, 1, "y"}, {4, 0, 1, "x"},
                  {5, 0, 1, "y"}, {6, 1, 0, "x"}, {7, 1, 0, "y"}}),
      make_graph({{0, "a"}, {1, "a"}, {2, "b"}}, {{0, 0, 1, "x"}, {1, 1, 0, "x"}, {2, 0, 0, "y"}, {3, 2, 2, "x"}}),
  };
  // every x/y edge between every ordered pair of {a, a, b}
  Graph complete = make_graph({{0, "a"}, {1, "a"}, {2, "b"}});
  for (std::uint32_t s = 0; s < 3; ++s) {
    for (std::uint32_t t = 0; t < 3; ++t) {
      for (const Label& l : {Label{"x"}, Label{"y"}}) complete.add_edge(NodeId{s}, NodeId{t}, l);
    }
  }
  family.push_back(complete);
  gen::Rng rng(20240611);
  while (family.size() < 10) family.push_back(gen::random_graph(rng, {1, 3, 4}));
  return family;
}

std::vector<Graph> iso_corpus() {
  gen::Rng rng(4242);
  std::vector<Graph> corpus;
  const gen::GraphShape shape{1, 5, 6};
  for (int i = 0; i < 20; ++i) corpus.push_back(gen::random_graph(rng, shape));
  for (int i = 0; i < 10; ++i) corpus.push_back(gen::random_isomorphism(rng, corpus[i]).target);
  // near misses: same counts, one edge relabelled or redirected
  for (int i = 10; i < 20; ++i) {
    Graph g = gen::random_isomorphism(rng, corpus[i]).target;
    if (g.edge_count() > 0) {
      const auto [id, e] = *g.edges().begin();
      const Edge copy = e;
      g.remove_edge(id);
      if (i % 2 == 0) {
        g.add_edge(id, copy.src, copy.tgt, copy.label == "x" ? "y" : "x");
      } else {
        g.add_edge(id, copy.tgt, copy.tgt, copy.label);
      }
    }
    corpus.push_back(g);
  }
  return corpus;
}

}  // namespace dpo::testing
