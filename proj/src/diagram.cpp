#include "dpo/diagram.hpp"

#include <set>
#include <sstream>

namespace dpo {
namespace {

template <class A, class B>
std::string pair_str(std::string_view kind, A a, B b) {
  std::ostringstream os;
  os << kind << " (" << a << ", " << b << ")";
  return os.str();
}

template <class Id>
std::string item_str(std::string_view kind, Id id) {
  std::ostringstream os;
  os << kind << ' ' << id;
  return os.str();
}

}  // namespace

Square transpose(const Square& sq) { return Square{sq.ac, sq.ab, sq.cd, sq.bd}; }

void check_endpoints(const Square& sq) {
  if (!(sq.ab.source == sq.ac.source)) throw PreconditionError("square: ab and ac differ in source");
  if (!(sq.bd.target == sq.cd.target)) throw PreconditionError("square: bd and cd differ in target");
  if (!(sq.ab.target == sq.bd.source)) throw PreconditionError("square: ab target is not bd source");
  if (!(sq.ac.target == sq.cd.source)) throw PreconditionError("square: ac target is not cd source");
}

CheckReport commutes(const Square& sq) {
  check_endpoints(sq);
  for (const Morphism* m : {&sq.ab, &sq.ac, &sq.bd, &sq.cd}) {
    if (!validate_morphism(*m).ok()) throw PreconditionError("square: invalid morphism");
  }
  for (const auto& [a, label] : sq.ab.source.nodes()) {
    if (sq.bd(sq.ab(a)) != sq.cd(sq.ac(a))) return CheckReport::fail("commutativity", item_str("node", a));
  }
  for (const auto& [a, edge] : sq.ab.source.edges()) {
    if (sq.bd(sq.ab(a)) != sq.cd(sq.ac(a))) return CheckReport::fail("commutativity", item_str("edge", a));
  }
  return CheckReport::pass();
}

CheckReport reduced_chain_condition(const Square& sq) {
  check_endpoints(sq);
  std::set<std::pair<NodeId, NodeId>> node_pairs;
  std::set<std::pair<EdgeId, EdgeId>> edge_pairs;
  for (const auto& [a, label] : sq.ab.source.nodes()) node_pairs.emplace(sq.ab(a), sq.ac(a));
  for (const auto& [a, edge] : sq.ab.source.edges()) edge_pairs.emplace(sq.ab(a), sq.ac(a));

  std::map<NodeId, std::vector<NodeId>> c_nodes_over;
  std::map<EdgeId, std::vector<EdgeId>> c_edges_over;
  for (const auto& [y, label] : sq.cd.source.nodes()) c_nodes_over[sq.cd(y)].push_back(y);
  for (const auto& [y, edge] : sq.cd.source.edges()) c_edges_over[sq.cd(y)].push_back(y);

  for (const auto& [x, label] : sq.bd.source.nodes()) {
    auto it = c_nodes_over.find(sq.bd(x));
    if (it == c_nodes_over.end()) continue;
    for (NodeId y : it->second) {
      if (!node_pairs.contains({x, y})) return CheckReport::fail("reduced chain-condition", pair_str("nodes", x, y));
    }
  }
  for (const auto& [x, edge] : sq.bd.source.edges()) {
    auto it = c_edges_over.find(sq.bd(x));
    if (it == c_edges_over.end()) continue;
    for (EdgeId y : it->second) {
      if (!edge_pairs.contains({x, y})) return CheckReport::fail("reduced chain-condition", pair_str("edges", x, y));
    }
  }
  return CheckReport::pass();
}

CheckReport jointly_surjective(const Morphism& bd, const Morphism& cd) {
  if (!(bd.target == cd.target)) throw PreconditionError("jointly_surjective: targets differ");
  std::set<NodeId> nodes;
  std::set<EdgeId> edges;
  for (const Morphism* m : {&bd, &cd}) {
    for (const auto& [from, to] : m->node_map) nodes.insert(to);
    for (const auto& [from, to] : m->edge_map) edges.insert(to);
  }
  for (const auto& [n, label] : bd.target.nodes()) {
    if (!nodes.contains(n)) return CheckReport::fail("joint surjectivity", item_str("node", n));
  }
  for (const auto& [e, edge] : bd.target.edges()) {
    if (!edges.contains(e)) return CheckReport::fail("joint surjectivity", item_str("edge", e));
  }
  return CheckReport::pass();
}

CheckReport is_pushout_injective(const Square& sq) {
  check_endpoints(sq);
  const char* names[] = {"ab", "ac", "bd", "cd"};
  const Morphism* legs[] = {&sq.ab, &sq.ac, &sq.bd, &sq.cd};
  for (int i = 0; i < 4; ++i) {
    if (!validate_morphism(*legs[i]).ok()) throw PreconditionError(std::string("square: invalid morphism ") + names[i]);
    if (!is_injective(*legs[i])) throw ScopeError(std::string("pushout check: leg ") + names[i] + " is not injective");
  }
  if (auto r = commutes(sq); !r) return r;
  if (auto r = reduced_chain_condition(sq); !r) return r;
  return jointly_surjective(sq.bd, sq.cd);
}

CheckReport is_pullback(const Square& sq) {
  if (!commutes(sq)) throw PreconditionError("is_pullback: square does not commute");
  const PullbackResult canonical = pullback_construct(sq.bd, sq.cd);

  Morphism u{sq.ab.source, canonical.A, {}, {}};
  for (const auto& [a, label] : sq.ab.source.nodes()) u.node_map.emplace(a, canonical.node_of.at({sq.ab(a), sq.ac(a)}));
  for (const auto& [a, edge] : sq.ab.source.edges()) u.edge_map.emplace(a, canonical.edge_of.at({sq.ab(a), sq.ac(a)}));

  if (auto report = validate_morphism(u); !report.ok()) {
    return CheckReport::fail("mediating morphism invalid", report.violations.front().item);
  }
  std::map<NodeId, NodeId> node_seen;
  for (const auto& [a, p] : u.node_map) {
    if (auto [it, fresh] = node_seen.emplace(p, a); !fresh) {
      return CheckReport::fail("mediating morphism not injective", pair_str("nodes", it->second, a));
    }
  }
  std::map<EdgeId, EdgeId> edge_seen;
  for (const auto& [a, p] : u.edge_map) {
    if (auto [it, fresh] = edge_seen.emplace(p, a); !fresh) {
      return CheckReport::fail("mediating morphism not injective", pair_str("edges", it->second, a));
    }
  }
  for (const auto& [p, xy] : canonical.node_pair) {
    if (!node_seen.contains(p)) return CheckReport::fail("mediating morphism not surjective", pair_str("nodes", xy.first, xy.second));
  }
  for (const auto& [p, xy] : canonical.edge_pair) {
    if (!edge_seen.contains(p)) return CheckReport::fail("mediating morphism not surjective", pair_str("edges", xy.first, xy.second));
  }
  return CheckReport::pass();
}

Square compose_squares_horizontal(const Square& sq1, const Square& sq2) {
  check_endpoints(sq1);
  check_endpoints(sq2);
  if (!(sq1.bd.source == sq2.ac.source) || !(sq1.bd.target == sq2.ac.target) ||
      !morphisms_agree(sq1.bd, sq2.ac)) {
    throw PreconditionError("compose_squares_horizontal: shared edge B -> D does not match");
  }
  return Square{compose(sq2.ab, sq1.ab), sq1.ac, sq2.bd, compose(sq2.cd, sq1.cd)};
}

bool squares_agree(const Square& s1, const Square& s2) {
  auto same = [](const Morphism& x, const Morphism& y) {
    return x.source == y.source && x.target == y.target && morphisms_agree(x, y);
  };
  return same(s1.ab, s2.ab) && same(s1.ac, s2.ac) && same(s1.bd, s2.bd) && same(s1.cd, s2.cd);
}

Square gluing_square(const Morphism& b, const Morphism& d, const GluingResult& result) {
  return Square{b, d, result.h, result.c};
}

Square pullback_square(const Morphism& f, const Morphism& g, const PullbackResult& result) {
  return Square{result.b, result.c, f, g};
}

Square special_square(const Morphism& m) {
  const Morphism id = identity(m.source);
  return Square{id, id, m, m};
}

}  // namespace dpo
