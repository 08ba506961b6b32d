#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dpo/errors.hpp"
#include "dpo/morphism.hpp"

namespace dpo {

/// Pushout object of an injective span K → R, K → D.
struct GluingResult {
  Graph H;
  Morphism h;  // R → H, injective
  Morphism c;  // D → H, an inclusion: D's ids are kept verbatim
};

/// Pushout complement of K → L → G.
struct DeletionResult {
  Graph D;
  Morphism d;  // K → D
  Morphism c;  // D → G, an inclusion
};

/// Canonical pullback object of a cospan B → D ← C.
struct PullbackResult {
  Graph A;
  Morphism b;  // A → B
  Morphism c;  // A → C
  std::map<NodeId, std::pair<NodeId, NodeId>> node_pair;
  std::map<EdgeId, std::pair<EdgeId, EdgeId>> edge_pair;
  std::map<std::pair<NodeId, NodeId>, NodeId> node_of;
  std::map<std::pair<EdgeId, EdgeId>, EdgeId> edge_of;
};

/// Raised by deletion() when removing the match image would leave edges
/// without an endpoint.
class DanglingError : public Error {
 public:
  explicit DanglingError(std::vector<EdgeId> edges);
  [[nodiscard]] const std::vector<EdgeId>& edges() const noexcept { return edges_; }

 private:
  std::vector<EdgeId> edges_;
};

/// Gluing of D and R along K.
///
/// H keeps every item of D under its own id. Items of R outside b(K) get
/// fresh ids starting at max(id of D) + 1 + fresh_offset, allocated in
/// ascending R-id order. Edge endpoints follow the three-way case split:
/// kept D edges use D's endpoints, new edges attached to the interface are
/// redirected along d ∘ b⁻¹, and the rest use the renumbered R endpoint.
///
/// Throws PreconditionError unless b and d are valid, injective and share
/// their source graph.
GluingResult gluing(const Morphism& b, const Morphism& d, std::uint32_t fresh_offset = 0);

/// Edges of G that would dangle after deleting m(L − b(K)): edges not
/// themselves deleted but incident to a deleted node. Ascending id order.
std::vector<EdgeId> dangling_edges(const Morphism& rule_left, const Morphism& match);

/// Removes m(L − b(K)) from G. D is a subgraph of G with G's ids; d is
/// m ∘ b co-restricted to D.
///
/// Throws PreconditionError for invalid or non-injective inputs and
/// DanglingError if the dangling condition fails.
DeletionResult deletion(const Morphism& rule_left, const Morphism& match);

/// A = {⟨x, y⟩ | f(x) = g(y)} for nodes and edges, with componentwise
/// endpoints and labels taken from B. Ids are consecutive from 0 in
/// lexicographic ⟨x, y⟩ order.
///
/// Throws PreconditionError if f and g are invalid or have different targets.
PullbackResult pullback_construct(const Morphism& f, const Morphism& g);

}  // namespace dpo
