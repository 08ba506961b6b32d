#include "dpo/morphism.hpp"

#include <set>
#include <sstream>

#include "dpo/errors.hpp"

namespace dpo {
namespace {

template <class Id>
std::string describe(std::string_view kind, Id id) {
  std::ostringstream os;
  os << kind << ' ' << id.value;
  return os.str();
}

template <class Map>
bool injective_on(const Map& map) {
  std::set<typename Map::mapped_type> seen;
  for (const auto& [from, to] : map) {
    if (!seen.insert(to).second) return false;
  }
  return true;
}

}  // namespace

NodeId Morphism::operator()(NodeId n) const {
  auto it = node_map.find(n);
  if (it == node_map.end()) throw PreconditionError(describe("morphism undefined on node", n));
  return it->second;
}

EdgeId Morphism::operator()(EdgeId e) const {
  auto it = edge_map.find(e);
  if (it == edge_map.end()) throw PreconditionError(describe("morphism undefined on edge", e));
  return it->second;
}

std::ostream& operator<<(std::ostream& os, const Morphism& m) {
  os << "fv{";
  for (const auto& [a, b] : m.node_map) os << ' ' << a.value << "->" << b.value;
  os << " } fe{";
  for (const auto& [a, b] : m.edge_map) os << ' ' << a.value << "->" << b.value;
  return os << " }";
}

ValidationReport validate_morphism(const Morphism& m) {
  ValidationReport report;
  const Graph& g = m.source;
  const Graph& h = m.target;

  for (const auto& [n, label] : g.nodes()) {
    auto it = m.node_map.find(n);
    if (it == m.node_map.end()) {
      report.add(describe("node", n), "fv undefined");
    } else if (!h.has_node(it->second)) {
      report.add(describe("node", n), "fv out of range");
    } else if (h.node_label(it->second) != label) {
      report.add(describe("node", n), "node label not preserved");
    }
  }
  for (const auto& [n, image] : m.node_map) {
    if (!g.has_node(n)) report.add(describe("node", n), "fv defined outside source");
  }
  for (const auto& [e, edge] : g.edges()) {
    auto it = m.edge_map.find(e);
    if (it == m.edge_map.end()) {
      report.add(describe("edge", e), "fe undefined");
      continue;
    }
    if (!h.has_edge(it->second)) {
      report.add(describe("edge", e), "fe out of range");
      continue;
    }
    const Edge& image = h.edge(it->second);
    auto src = m.node_map.find(edge.src);
    auto tgt = m.node_map.find(edge.tgt);
    if (src == m.node_map.end() || src->second != image.src) {
      report.add(describe("edge", e), "source not preserved");
    }
    if (tgt == m.node_map.end() || tgt->second != image.tgt) {
      report.add(describe("edge", e), "target not preserved");
    }
    if (image.label != edge.label) report.add(describe("edge", e), "edge label not preserved");
  }
  for (const auto& [e, image] : m.edge_map) {
    if (!g.has_edge(e)) report.add(describe("edge", e), "fe defined outside source");
  }
  return report;
}

Morphism identity(const Graph& g) {
  Morphism m{g, g, {}, {}};
  for (const auto& [n, label] : g.nodes()) m.node_map.emplace(n, n);
  for (const auto& [e, edge] : g.edges()) m.edge_map.emplace(e, e);
  return m;
}

bool image_within(const Morphism& m, const Graph& sub) {
  for (const auto& [from, to] : m.node_map) {
    if (!sub.has_node(to)) return false;
  }
  for (const auto& [from, to] : m.edge_map) {
    if (!sub.has_edge(to)) return false;
  }
  return true;
}

Morphism inclusion(const Graph& sub, const Graph& super) {
  Morphism m = identity(sub);
  m.target = super;
  if (!validate_morphism(m).ok()) {
    throw PreconditionError("inclusion: graph is not a subgraph of the target");
  }
  return m;
}

bool is_inclusion(const Morphism& m) {
  for (const auto& [from, to] : m.node_map) {
    if (from != to) return false;
  }
  for (const auto& [from, to] : m.edge_map) {
    if (from != to) return false;
  }
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target == g.source)) {
    throw PreconditionError("compose: target of f differs from source of g");
  }
  Morphism out{f.source, g.target, {}, {}};
  for (const auto& [from, mid] : f.node_map) out.node_map.emplace(from, g(mid));
  for (const auto& [from, mid] : f.edge_map) out.edge_map.emplace(from, g(mid));
  return out;
}

bool is_injective(const Morphism& m) {
  return injective_on(m.node_map) && injective_on(m.edge_map);
}

bool is_surjective(const Morphism& m) {
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;
  for (const auto& [from, to] : m.node_map) nodes.insert(to);
  for (const auto& [from, to] : m.edge_map) edges.insert(to);
  for (const auto& [n, label] : m.target.nodes()) {
    if (!nodes.contains(n)) return false;
  }
  for (const auto& [e, edge] : m.target.edges()) {
    if (!edges.contains(e)) return false;
  }
  return true;
}

bool is_bijective(const Morphism& m) { return is_injective(m) && is_surjective(m); }

Morphism invert(const Morphism& m) {
  if (!is_bijective(m)) throw PreconditionError("invert: morphism is not bijective");
  Morphism out{m.target, m.source, {}, {}};
  for (const auto& [from, to] : m.node_map) out.node_map.emplace(to, from);
  for (const auto& [from, to] : m.edge_map) out.edge_map.emplace(to, from);
  return out;
}

bool morphisms_agree(const Morphism& m1, const Morphism& m2) {
  if (!(m1.source == m2.source) || !(m1.target == m2.target)) {
    throw PreconditionError("morphisms_agree: morphisms are not parallel");
  }
  for (const auto& [n, label] : m1.source.nodes()) {
    if (m1(n) != m2(n)) return false;
  }
  for (const auto& [e, edge] : m1.source.edges()) {
    if (m1(e) != m2(e)) return false;
  }
  return true;
}

Morphism as_morphism(const IsoWitness& iso, const Graph& g, const Graph& h) {
  return Morphism{g, h, iso.node_map, iso.edge_map};
}

Morphism corestrict(const Morphism& m, const Graph& sub) {
  if (!image_within(m, sub)) throw PreconditionError("corestrict: image not contained in subgraph");
  return Morphism{m.source, sub, m.node_map, m.edge_map};
}

}  // namespace dpo
