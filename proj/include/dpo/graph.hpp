#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dpo/report.hpp"

namespace dpo {

/// Opaque label. Only equality is meaningful.
using Label = std::string;

namespace detail {
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  friend constexpr auto operator<=>(Id, Id) = default;
};
struct NodeTag {};
struct EdgeTag {};
}  // namespace detail

using NodeId = detail::Id<detail::NodeTag>;
using EdgeId = detail::Id<detail::EdgeTag>;

std::ostream& operator<<(std::ostream& os, NodeId id);
std::ostream& operator<<(std::ostream& os, EdgeId id);

struct Edge {
  NodeId src;
  NodeId tgt;
  Label label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite labelled directed multigraph. Loops and parallel edges are allowed.
///
/// Node and edge labels are total by construction. Edge endpoints are not
/// checked on insertion so that malformed graphs (e.g. parsed from a file)
/// remain representable; use validate_graph() to check them.
class Graph {
 public:
  using NodeMap = std::map<NodeId, Label>;
  using EdgeMap = std::map<EdgeId, Edge>;

  Graph() = default;

  /// Throws PreconditionError if the id is already present.
  NodeId add_node(NodeId id, Label label);
  EdgeId add_edge(EdgeId id, NodeId src, NodeId tgt, Label label);

  /// Convenience overloads allocating the next free id.
  NodeId add_node(Label label);
  EdgeId add_edge(NodeId src, NodeId tgt, Label label);

  void remove_node(NodeId id);
  void remove_edge(EdgeId id);

  [[nodiscard]] bool has_node(NodeId id) const { return nodes_.contains(id); }
  [[nodiscard]] bool has_edge(EdgeId id) const { return edges_.contains(id); }

  [[nodiscard]] const Label& node_label(NodeId id) const;
  [[nodiscard]] const Edge& edge(EdgeId id) const;
  [[nodiscard]] NodeId src(EdgeId id) const { return edge(id).src; }
  [[nodiscard]] NodeId tgt(EdgeId id) const { return edge(id).tgt; }
  [[nodiscard]] const Label& edge_label(EdgeId id) const { return edge(id).label; }

  [[nodiscard]] const NodeMap& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const EdgeMap& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] bool empty() const noexcept { return nodes_.empty() && edges_.empty(); }

  /// Smallest id strictly greater than every node id (0 for no nodes).
  [[nodiscard]] NodeId next_node_id() const;
  [[nodiscard]] EdgeId next_edge_id() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeMap nodes_;
  EdgeMap edges_;
};

std::ostream& operator<<(std::ostream& os, const Graph& g);

/// Checks that every edge endpoint lies in the node set.
ValidationReport validate_graph(const Graph& g);

/// Bijective, structure- and label-preserving node/edge maps between two graphs.
struct IsoWitness {
  std::map<NodeId, NodeId> node_map;
  std::map<EdgeId, EdgeId> edge_map;
};

/// Backtracking isomorphism search pruned by (label, in-degree, out-degree)
/// signatures and by edge-multiset compatibility with already mapped nodes.
/// Candidates are tried in ascending id order, so the result is deterministic.
std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h);

/// Returns a copy of g with ids rewritten through the given maps.
/// Throws PreconditionError if a map is partial on g or not injective.
Graph renumber(const Graph& g, const std::map<NodeId, NodeId>& node_map,
               const std::map<EdgeId, EdgeId>& edge_map);

/// Shifts every node and edge id by the given offsets.
Graph shift_ids(const Graph& g, std::uint32_t node_offset, std::uint32_t edge_offset);

}  // namespace dpo

template <class Tag>
struct std::hash<dpo::detail::Id<Tag>> {
  std::size_t operator()(dpo::detail::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
