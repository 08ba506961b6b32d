#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "dpo/graph.hpp"

namespace dpo {
namespace {

using Signature = std::tuple<Label, std::size_t, std::size_t>;
using Adjacency = std::map<std::pair<NodeId, NodeId>, std::vector<Label>>;

Adjacency adjacency(const Graph& g) {
  Adjacency adj;
  for (const auto& [id, e] : g.edges()) adj[{e.src, e.tgt}].push_back(e.label);
  for (auto& [key, labels] : adj) std::sort(labels.begin(), labels.end());
  return adj;
}

std::map<NodeId, Signature> signatures(const Graph& g) {
  std::map<NodeId, Signature> sig;
  for (const auto& [id, label] : g.nodes()) sig.emplace(id, Signature{label, 0, 0});
  for (const auto& [id, e] : g.edges()) {
    ++std::get<2>(sig[e.src]);
    ++std::get<1>(sig[e.tgt]);
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), g_adj_(adjacency(g)), h_adj_(adjacency(h)),
        g_sig_(signatures(g)), h_sig_(signatures(h)) {
    for (const auto& [id, label] : g.nodes()) order_.push_back(id);
  }

  std::optional<IsoWitness> run() {
    if (g_.node_count() != h_.node_count() || g_.edge_count() != h_.edge_count()) {
      return std::nullopt;
    }
    std::multiset<Signature> gs, hs;
    for (const auto& [id, s] : g_sig_) gs.insert(s);
    for (const auto& [id, s] : h_sig_) hs.insert(s);
    if (gs != hs) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return IsoWitness{mapping_, edge_mapping()};
  }

 private:
  const std::vector<Label>& labels(const Adjacency& adj, NodeId a, NodeId b) const {
    static const std::vector<Label> none;
    auto it = adj.find({a, b});
    return it == adj.end() ? none : it->second;
  }

  bool compatible(NodeId u, NodeId v) const {
    if (labels(g_adj_, u, u) != labels(h_adj_, v, v)) return false;
    for (const auto& [gu, hv] : mapping_) {
      if (labels(g_adj_, u, gu) != labels(h_adj_, v, hv)) return false;
      if (labels(g_adj_, gu, u) != labels(h_adj_, hv, v)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const NodeId u = order_[depth];
    const Signature& sig = g_sig_.at(u);
    for (const auto& [v, hsig] : h_sig_) {
      if (used_.contains(v) || hsig != sig || !compatible(u, v)) continue;
      mapping_.emplace(u, v);
      used_.insert(v);
      if (extend(depth + 1)) return true;
      mapping_.erase(u);
      used_.erase(v);
    }
    return false;
  }

  // Parallel edges between corresponding endpoints are paired up by
  // (label, id), which is valid because the label multisets agree.
  std::map<EdgeId, EdgeId> edge_mapping() const {
    std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<Label, EdgeId>>> h_groups;
    for (const auto& [id, e] : h_.edges()) h_groups[{e.src, e.tgt}].emplace_back(e.label, id);
    std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<Label, EdgeId>>> g_groups;
    for (const auto& [id, e] : g_.edges()) g_groups[{e.src, e.tgt}].emplace_back(e.label, id);

    std::map<EdgeId, EdgeId> out;
    for (auto& [key, g_edges] : g_groups) {
      auto& h_edges = h_groups[{mapping_.at(key.first), mapping_.at(key.second)}];
      std::sort(g_edges.begin(), g_edges.end());
      std::sort(h_edges.begin(), h_edges.end());
      for (std::size_t i = 0; i < g_edges.size(); ++i) {
        out.emplace(g_edges[i].second, h_edges[i].second);
      }
    }
    return out;
  }

  const Graph& g_;
  const Graph& h_;
  Adjacency g_adj_, h_adj_;
  std::map<NodeId, Signature> g_sig_, h_sig_;
  std::vector<NodeId> order_;
  std::map<NodeId, NodeId> mapping_;
  std::set<NodeId> used_;
};

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h) {
  return IsoSearch(g, h).run();
}

}  // namespace dpo
