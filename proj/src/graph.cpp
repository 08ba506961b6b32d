#include "dpo/graph.hpp"

#include <set>
#include <sstream>

#include "dpo/errors.hpp"

namespace dpo {

std::ostream& operator<<(std::ostream& os, NodeId id) { return os << 'n' << id.value; }
std::ostream& operator<<(std::ostream& os, EdgeId id) { return os << 'e' << id.value; }

bool ValidationReport::mentions(std::string_view clause) const {
  for (const auto& v : violations) {
    if (v.clause == clause) return true;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const ValidationReport& report) {
  if (report.ok()) return os << "ok";
  bool first = true;
  for (const auto& v : report.violations) {
    if (!first) os << "; ";
    os << v.item << ": " << v.clause;
    first = false;
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const CheckReport& report) {
  if (report.verdict) return os << "pass";
  os << "fail";
  if (report.failed_clause) os << " [" << *report.failed_clause << "]";
  if (report.counterexample) os << " at " << *report.counterexample;
  return os;
}

NodeId Graph::add_node(NodeId id, Label label) {
  auto [it, inserted] = nodes_.emplace(id, std::move(label));
  if (!inserted) {
    std::ostringstream msg;
    msg << "duplicate node id " << id.value;
    throw PreconditionError(msg.str());
  }
  return id;
}

EdgeId Graph::add_edge(EdgeId id, NodeId src, NodeId tgt, Label label) {
  auto [it, inserted] = edges_.emplace(id, Edge{src, tgt, std::move(label)});
  if (!inserted) {
    std::ostringstream msg;
    msg << "duplicate edge id " << id.value;
    throw PreconditionError(msg.str());
  }
  return id;
}

NodeId Graph::add_node(Label label) { return add_node(next_node_id(), std::move(label)); }

EdgeId Graph::add_edge(NodeId src, NodeId tgt, Label label) {
  return add_edge(next_edge_id(), src, tgt, std::move(label));
}

void Graph::remove_node(NodeId id) { nodes_.erase(id); }
void Graph::remove_edge(EdgeId id) { edges_.erase(id); }

const Label& Graph::node_label(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    std::ostringstream msg;
    msg << "no node " << id.value;
    throw PreconditionError(msg.str());
  }
  return it->second;
}

const Edge& Graph::edge(EdgeId id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) {
    std::ostringstream msg;
    msg << "no edge " << id.value;
    throw PreconditionError(msg.str());
  }
  return it->second;
}

NodeId Graph::next_node_id() const {
  return nodes_.empty() ? NodeId{0} : NodeId{nodes_.rbegin()->first.value + 1};
}

EdgeId Graph::next_edge_id() const {
  return edges_.empty() ? EdgeId{0} : EdgeId{edges_.rbegin()->first.value + 1};
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "{V:";
  for (const auto& [id, label] : g.nodes()) os << ' ' << id << ':' << label;
  os << " | E:";
  for (const auto& [id, e] : g.edges()) {
    os << ' ' << id << ':' << e.label << '(' << e.src << "->" << e.tgt << ')';
  }
  return os << '}';
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport report;
  for (const auto& [id, e] : g.edges()) {
    std::ostringstream item;
    item << "edge " << id.value;
    if (!g.has_node(e.src)) report.add(item.str(), "src out of V");
    if (!g.has_node(e.tgt)) report.add(item.str(), "tgt out of V");
  }
  return report;
}

Graph renumber(const Graph& g, const std::map<NodeId, NodeId>& node_map,
               const std::map<EdgeId, EdgeId>& edge_map) {
  std::set<NodeId> node_image;
  std::set<EdgeId> edge_image;
  Graph out;
  for (const auto& [id, label] : g.nodes()) {
    auto it = node_map.find(id);
    if (it == node_map.end()) {
      throw PreconditionError("renumber: node map is partial");
    }
    if (!node_image.insert(it->second).second) {
      throw PreconditionError("renumber: node map is not injective");
    }
    out.add_node(it->second, label);
  }
  auto lookup = [&](NodeId n) {
    auto it = node_map.find(n);
    if (it == node_map.end()) throw PreconditionError("renumber: edge endpoint not mapped");
    return it->second;
  };
  for (const auto& [id, e] : g.edges()) {
    auto it = edge_map.find(id);
    if (it == edge_map.end()) {
      throw PreconditionError("renumber: edge map is partial");
    }
    if (!edge_image.insert(it->second).second) {
      throw PreconditionError("renumber: edge map is not injective");
    }
    out.add_edge(it->second, lookup(e.src), lookup(e.tgt), e.label);
  }
  return out;
}

Graph shift_ids(const Graph& g, std::uint32_t node_offset, std::uint32_t edge_offset) {
  std::map<NodeId, NodeId> nm;
  std::map<EdgeId, EdgeId> em;
  for (const auto& [id, label] : g.nodes()) nm.emplace(id, NodeId{id.value + node_offset});
  for (const auto& [id, e] : g.edges()) em.emplace(id, EdgeId{id.value + edge_offset});
  return renumber(g, nm, em);
}

}  // namespace dpo
