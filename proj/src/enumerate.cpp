#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "dpo/morphism.hpp"

namespace dpo {
namespace {

using EdgeKey = std::tuple<NodeId, NodeId, Label>;

class MorphismEnumerator {
 public:
  MorphismEnumerator(const Graph& g, const Graph& h, bool injective)
      : g_(g), h_(h), injective_(injective) {
    for (const auto& [n, label] : g.nodes()) nodes_.push_back(n);
    for (const auto& [e, edge] : g.edges()) edges_.push_back(e);
    for (const auto& [e, edge] : h.edges()) h_groups_[{edge.src, edge.tgt, edge.label}].push_back(e);
    // edges whose later endpoint (in node order) is assigned at each depth
    incident_.resize(nodes_.size());
    for (const auto& [e, edge] : g.edges()) {
      std::size_t depth = std::max(index_of(edge.src), index_of(edge.tgt));
      if (depth < nodes_.size()) incident_[depth].push_back(e);
    }
  }

  std::vector<Morphism> run() {
    assign_node(0);
    return std::move(out_);
  }

 private:
  std::size_t index_of(NodeId n) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
    return (it != nodes_.end() && *it == n) ? static_cast<std::size_t>(it - nodes_.begin())
                                            : nodes_.size();
  }

  const std::vector<EdgeId>* candidates(EdgeId e) const {
    const Edge& edge = g_.edge(e);
    auto it = h_groups_.find({node_map_.at(edge.src), node_map_.at(edge.tgt), edge.label});
    return it == h_groups_.end() ? nullptr : &it->second;
  }

  void assign_node(std::size_t depth) {
    if (depth == nodes_.size()) {
      assign_edge(0);
      return;
    }
    const NodeId u = nodes_[depth];
    const Label& label = g_.node_label(u);
    for (const auto& [v, hlabel] : h_.nodes()) {
      if (hlabel != label || (injective_ && used_nodes_.contains(v))) continue;
      node_map_[u] = v;
      used_nodes_.insert(v);
      bool viable = true;
      for (EdgeId e : incident_[depth]) {
        if (candidates(e) == nullptr) {
          viable = false;
          break;
        }
      }
      if (viable) assign_node(depth + 1);
      node_map_.erase(u);
      used_nodes_.erase(v);
    }
  }

  void assign_edge(std::size_t depth) {
    if (depth == edges_.size()) {
      out_.push_back(Morphism{g_, h_, node_map_, edge_map_});
      return;
    }
    const EdgeId e = edges_[depth];
    const auto* group = candidates(e);
    if (group == nullptr) return;
    for (EdgeId f : *group) {
      if (injective_ && used_edges_.contains(f)) continue;
      edge_map_[e] = f;
      used_edges_.insert(f);
      assign_edge(depth + 1);
      edge_map_.erase(e);
      used_edges_.erase(f);
    }
  }

  const Graph& g_;
  const Graph& h_;
  bool injective_;
  std::vector<NodeId> nodes_;
  std::vector<EdgeId> edges_;
  std::map<EdgeKey, std::vector<EdgeId>> h_groups_;
  std::vector<std::vector<EdgeId>> incident_;
  std::map<NodeId, NodeId> node_map_;
  std::map<EdgeId, EdgeId> edge_map_;
  std::set<NodeId> used_nodes_;
  std::set<EdgeId> used_edges_;
  std::vector<Morphism> out_;
};

}  // namespace

std::vector<Morphism> enumerate_morphisms(const Graph& g, const Graph& h, bool injective_only) {
  return MorphismEnumerator(g, h, injective_only).run();
}

}  // namespace dpo
