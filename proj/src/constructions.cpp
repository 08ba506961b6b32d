#include "dpo/constructions.hpp"

#include <set>
#include <sstream>

namespace dpo {
namespace {

void require_valid(const Morphism& m, std::string_view what) {
  auto report = validate_morphism(m);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << what << " is not a valid morphism: " << report;
    throw PreconditionError(msg.str());
  }
}

void require_injective(const Morphism& m, std::string_view what) {
  require_valid(m, what);
  if (!is_injective(m)) {
    throw PreconditionError(std::string(what) + " is not injective");
  }
}

std::string edge_list(const std::vector<EdgeId>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? ", " : "") << edges[i];
  return os.str();
}

}  // namespace

DanglingError::DanglingError(std::vector<EdgeId> edges)
    : Error("dangling condition violated by edges: " + edge_list(edges)), edges_(std::move(edges)) {}

GluingResult gluing(const Morphism& b, const Morphism& d, std::uint32_t fresh_offset) {
  require_injective(b, "gluing: K -> R");
  require_injective(d, "gluing: K -> D");
  if (!(b.source == d.source)) {
    throw PreconditionError("gluing: span legs have different sources");
  }
  const Graph& r = b.target;
  const Graph& ctx = d.target;

  std::map<NodeId, NodeId> b_inv_nodes;
  std::map<EdgeId, EdgeId> b_inv_edges;
  for (const auto& [k, x] : b.node_map) b_inv_nodes.emplace(x, k);
  for (const auto& [k, x] : b.edge_map) b_inv_edges.emplace(x, k);

  GluingResult out{ctx, Morphism{r, {}, {}, {}}, {}};
  Graph& h = out.H;
  auto& hv = out.h.node_map;
  auto& he = out.h.edge_map;

  std::uint32_t next_node = ctx.next_node_id().value + fresh_offset;
  for (const auto& [x, label] : r.nodes()) {
    if (auto it = b_inv_nodes.find(x); it != b_inv_nodes.end()) {
      hv.emplace(x, d(it->second));
    } else {
      hv.emplace(x, h.add_node(NodeId{next_node++}, label));
    }
  }
  std::uint32_t next_edge = ctx.next_edge_id().value + fresh_offset;
  for (const auto& [x, edge] : r.edges()) {
    if (auto it = b_inv_edges.find(x); it != b_inv_edges.end()) {
      he.emplace(x, d(it->second));
    } else {
      // hv already resolves both branches of the endpoint case split
      he.emplace(x, h.add_edge(EdgeId{next_edge++}, hv.at(edge.src), hv.at(edge.tgt), edge.label));
    }
  }
  out.h.target = h;
  out.c = inclusion(ctx, h);
  return out;
}

std::vector<EdgeId> dangling_edges(const Morphism& rule_left, const Morphism& match) {
  const Graph& l = match.source;
  const Graph& g = match.target;
  std::set<NodeId> kept_nodes;
  std::set<EdgeId> kept_edges;
  for (const auto& [k, x] : rule_left.node_map) kept_nodes.insert(x);
  for (const auto& [k, x] : rule_left.edge_map) kept_edges.insert(x);

  std::set<NodeId> deleted_nodes;
  std::set<EdgeId> deleted_edges;
  for (const auto& [x, label] : l.nodes()) {
    if (!kept_nodes.contains(x)) deleted_nodes.insert(match(x));
  }
  for (const auto& [x, edge] : l.edges()) {
    if (!kept_edges.contains(x)) deleted_edges.insert(match(x));
  }

  std::vector<EdgeId> out;
  for (const auto& [e, edge] : g.edges()) {
    if (deleted_edges.contains(e)) continue;
    if (deleted_nodes.contains(edge.src) || deleted_nodes.contains(edge.tgt)) out.push_back(e);
  }
  return out;
}

DeletionResult deletion(const Morphism& rule_left, const Morphism& match) {
  require_injective(rule_left, "deletion: K -> L");
  require_injective(match, "deletion: match");
  if (!(rule_left.target == match.source)) {
    throw PreconditionError("deletion: match source differs from rule left-hand side");
  }
  if (auto dangling = dangling_edges(rule_left, match); !dangling.empty()) {
    throw DanglingError(std::move(dangling));
  }

  const Graph& l = match.source;
  Graph d = match.target;
  std::set<NodeId> kept_nodes;
  std::set<EdgeId> kept_edges;
  for (const auto& [k, x] : rule_left.node_map) kept_nodes.insert(x);
  for (const auto& [k, x] : rule_left.edge_map) kept_edges.insert(x);
  for (const auto& [x, edge] : l.edges()) {
    if (!kept_edges.contains(x)) d.remove_edge(match(x));
  }
  for (const auto& [x, label] : l.nodes()) {
    if (!kept_nodes.contains(x)) d.remove_node(match(x));
  }

  DeletionResult out{d, corestrict(compose(match, rule_left), d), inclusion(d, match.target)};
  return out;
}

PullbackResult pullback_construct(const Morphism& f, const Morphism& g) {
  require_valid(f, "pullback: B -> D");
  require_valid(g, "pullback: C -> D");
  if (!(f.target == g.target)) {
    throw PreconditionError("pullback: cospan legs have different targets");
  }
  const Graph& b = f.source;
  const Graph& c = g.source;

  std::map<NodeId, std::vector<NodeId>> c_nodes_over;
  std::map<EdgeId, std::vector<EdgeId>> c_edges_over;
  for (const auto& [y, label] : c.nodes()) c_nodes_over[g(y)].push_back(y);
  for (const auto& [y, edge] : c.edges()) c_edges_over[g(y)].push_back(y);

  PullbackResult out;
  out.b = Morphism{{}, b, {}, {}};
  out.c = Morphism{{}, c, {}, {}};
  std::uint32_t next = 0;
  for (const auto& [x, label] : b.nodes()) {
    auto it = c_nodes_over.find(f(x));
    if (it == c_nodes_over.end()) continue;
    for (NodeId y : it->second) {
      NodeId a = out.A.add_node(NodeId{next++}, label);
      out.node_pair.emplace(a, std::pair{x, y});
      out.node_of.emplace(std::pair{x, y}, a);
      out.b.node_map.emplace(a, x);
      out.c.node_map.emplace(a, y);
    }
  }
  next = 0;
  for (const auto& [x, edge] : b.edges()) {
    auto it = c_edges_over.find(f(x));
    if (it == c_edges_over.end()) continue;
    for (EdgeId y : it->second) {
      const Edge& ey = c.edge(y);
      EdgeId a = out.A.add_edge(EdgeId{next++}, out.node_of.at({edge.src, ey.src}),
                                out.node_of.at({edge.tgt, ey.tgt}), edge.label);
      out.edge_pair.emplace(a, std::pair{x, y});
      out.edge_of.emplace(std::pair{x, y}, a);
      out.b.edge_map.emplace(a, x);
      out.c.edge_map.emplace(a, y);
    }
  }
  out.b.source = out.A;
  out.c.source = out.A;
  return out;
}

}  // namespace dpo
