#pragma once

#include <map>
#include <vector>

#include "dpo/graph.hpp"

namespace dpo {

/// A graph morphism stored extensionally: the maps are defined on exactly
/// the nodes and edges of `source`.
///
/// A Morphism value may be malformed (partial, out of range, not
/// structure-preserving); validate_morphism() reports how.
struct Morphism {
  Graph source;
  Graph target;
  std::map<NodeId, NodeId> node_map;
  std::map<EdgeId, EdgeId> edge_map;

  [[nodiscard]] NodeId operator()(NodeId n) const;
  [[nodiscard]] EdgeId operator()(EdgeId e) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

std::ostream& operator<<(std::ostream& os, const Morphism& m);

/// Totality and range of both maps, preservation of sources, targets,
/// node labels and edge labels.
ValidationReport validate_morphism(const Morphism& m);

/// Identity morphism on g.
Morphism identity(const Graph& g);

/// Identity-map morphism from a subgraph into a graph containing it.
/// Throws PreconditionError if `sub` is not contained in `super` item-wise.
Morphism inclusion(const Graph& sub, const Graph& super);

/// True iff both maps are identities, i.e. the morphism is an inclusion.
bool is_inclusion(const Morphism& m);

/// g ∘ f. Throws PreconditionError unless f.target == g.source.
Morphism compose(const Morphism& g, const Morphism& f);

bool is_injective(const Morphism& m);
bool is_surjective(const Morphism& m);
bool is_bijective(const Morphism& m);

/// Inverse of a bijective morphism. Throws PreconditionError otherwise.
Morphism invert(const Morphism& m);

/// Pointwise equality of two parallel morphisms on their source graph.
/// Throws PreconditionError if the endpoints differ.
bool morphisms_agree(const Morphism& m1, const Morphism& m2);

/// Every valid morphism G → H (only injective ones if requested), ordered
/// lexicographically by ascending source id, then ascending target id;
/// nodes are assigned before edges.
std::vector<Morphism> enumerate_morphisms(const Graph& g, const Graph& h, bool injective_only);

/// Wraps an isomorphism witness as a morphism g → h.
Morphism as_morphism(const IsoWitness& iso, const Graph& g, const Graph& h);

/// Restricts the target of m to `sub`, keeping the maps. Throws
/// PreconditionError if m's image is not contained in sub.
Morphism corestrict(const Morphism& m, const Graph& sub);

/// True iff every image of m (nodes and edges) lies in `sub`.
bool image_within(const Morphism& m, const Graph& sub);

}  // namespace dpo
