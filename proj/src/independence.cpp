#include "dpo/independence.hpp"

#include <functional>
#include <sstream>

namespace dpo {
namespace {

// First item of m's image that is missing from sub, if any.
std::optional<std::string> escaping_item(const Morphism& m, const Graph& sub) {
  for (const auto& [from, to] : m.node_map) {
    if (!sub.has_node(to)) {
      std::ostringstream os;
      os << "node " << from << " -> " << to;
      return os.str();
    }
  }
  for (const auto& [from, to] : m.edge_map) {
    if (!sub.has_edge(to)) {
      std::ostringstream os;
      os << "edge " << from << " -> " << to;
      return os.str();
    }
  }
  return std::nullopt;
}

// K → D for the pullback D of D1 → G ← D2, from the two legs K → D1, K → D2.
Morphism mediate(const Morphism& to_d1, const Morphism& to_d2, const PullbackResult& pb) {
  Morphism out{to_d1.source, pb.A, {}, {}};
  for (const auto& [k, label] : to_d1.source.nodes()) {
    auto it = pb.node_of.find({to_d1(k), to_d2(k)});
    if (it == pb.node_of.end()) throw PreconditionError("no mediating node in pullback");
    out.node_map.emplace(k, it->second);
  }
  for (const auto& [k, edge] : to_d1.source.edges()) {
    auto it = pb.edge_of.find({to_d1(k), to_d2(k)});
    if (it == pb.edge_of.end()) throw PreconditionError("no mediating edge in pullback");
    out.edge_map.emplace(k, it->second);
  }
  return out;
}

// Morphism out of a gluing object: D-items go through `on_context`, fresh
// R-items through `on_rule`. Throws if the two disagree on the interface.
Morphism out_of_gluing(const GluingResult& glue, const Morphism& on_context, const Morphism& on_rule,
                       const Graph& target) {
  Morphism out{glue.H, target, {}, {}};
  auto put = [](auto& map, auto key, auto value) {
    auto [it, fresh] = map.emplace(key, value);
    if (!fresh && it->second != value) throw PreconditionError("gluing legs disagree on the interface");
  };
  for (const auto& [x, label] : glue.c.source.nodes()) put(out.node_map, glue.c(x), on_context(x));
  for (const auto& [x, edge] : glue.c.source.edges()) put(out.edge_map, glue.c(x), on_context(x));
  for (const auto& [r, label] : glue.h.source.nodes()) put(out.node_map, glue.h(r), on_rule(r));
  for (const auto& [r, edge] : glue.h.source.edges()) put(out.edge_map, glue.h(r), on_rule(r));
  return out;
}

Morphism retarget(Morphism m, const Graph& target) {
  m.target = target;
  return m;
}

}  // namespace

bool SquareChecks::all_pass() const {
  for (const auto& [label, report] : squares) {
    if (!report) return false;
  }
  return true;
}

CheckReport SquareChecks::summary() const {
  for (const auto& [label, report] : squares) {
    if (!report) {
      std::ostringstream os;
      os << report;
      return CheckReport::fail(label, os.str());
    }
  }
  return CheckReport::pass();
}

const CheckReport* SquareChecks::find(std::string_view label) const {
  for (const auto& [l, report] : squares) {
    if (l == label) return &report;
  }
  return nullptr;
}

CheckReport parallel_independence_report(const ParallelPair& pair) {
  if (!(pair.d1.G() == pair.d2.G())) throw PreconditionError("parallel pair: derivations start from different graphs");
  if (auto item = escaping_item(pair.d1.match, pair.d2.D())) return CheckReport::fail("L1 -> D2 triangle", *item);
  if (auto item = escaping_item(pair.d2.match, pair.d1.D())) return CheckReport::fail("L2 -> D1 triangle", *item);
  return CheckReport::pass();
}

std::optional<IndependenceWitness> parallel_independent(const ParallelPair& pair) {
  if (!parallel_independence_report(pair)) return std::nullopt;
  IndependenceWitness w{corestrict(pair.d1.match, pair.d2.D()), corestrict(pair.d2.match, pair.d1.D())};
  if (!morphisms_agree(compose(pair.d2.deletion.c, w.j1), pair.d1.match) ||
      !morphisms_agree(compose(pair.d1.deletion.c, w.j2), pair.d2.match)) {
    throw InternalConsistencyError("parallel independence: forced witness does not commute");
  }
  return w;
}

std::optional<SequentialWitness> sequential_independent(const DirectDerivation& first,
                                                        const DirectDerivation& second) {
  if (!(second.G() == first.H())) throw PreconditionError("sequential pair: second derivation does not start at H");
  if (!image_within(first.comatch, second.D()) || !image_within(second.match, first.D())) return std::nullopt;
  SequentialWitness w{corestrict(first.comatch, second.D()), corestrict(second.match, first.D())};
  if (!morphisms_agree(compose(second.deletion.c, w.r1_to_d2), first.comatch) ||
      !morphisms_agree(compose(first.gluing.c, w.l2_to_d1), second.match)) {
    throw InternalConsistencyError("sequential independence: forced witness does not commute");
  }
  return w;
}

std::pair<Match, Match> residual_match(const ParallelPair& pair, const IndependenceWitness& witness) {
  Match m2 = compose(pair.d1.gluing.c, witness.j2);
  Match m1 = compose(pair.d2.gluing.c, witness.j1);
  auto check = [](const Rule& rule, const Match& m, std::string_view name) {
    if (!validate_morphism(m).ok() || !is_injective(m)) {
      throw InternalConsistencyError(std::string(name) + " is not an injective morphism");
    }
    if (auto r = dangling_condition(rule, m); !r) {
      throw InternalConsistencyError(std::string(name) + " violates the dangling condition at " +
                                     r.counterexample.value_or(""));
    }
  };
  check(pair.d2.rule, m2, "residual match L2 -> H1");
  check(pair.d1.rule, m1, "residual match L1 -> H2");
  return {std::move(m2), std::move(m1)};
}

CommutationResult commute(const ParallelPair& pair, ApplyOptions options) {
  auto report = parallel_independence_report(pair);
  if (!report) {
    std::ostringstream msg;
    msg << "commute: pair is not parallel independent: " << report;
    throw DependentPairError(msg.str());
  }
  const auto witness = parallel_independent(pair);
  auto [m2r, m1r] = residual_match(pair, *witness);

  auto step = [&](const Rule& rule, const Match& m) {
    try {
      return apply(rule, m, options);
    } catch (const ApplicationError& e) {
      throw InternalConsistencyError(std::string("commute: residual application failed: ") + e.what());
    }
  };
  DirectDerivation e1 = step(pair.d2.rule, m2r);
  DirectDerivation e2 = step(pair.d1.rule, m1r);

  auto iso = is_isomorphic(e1.H(), e2.H());
  if (!iso) throw InternalConsistencyError("commute: the two results are not isomorphic");
  if (!sequential_independent(pair.d1, e1) || !sequential_independent(pair.d2, e2)) {
    throw InternalConsistencyError("commute: composite derivations are not sequentially independent");
  }
  Graph gp = e1.H();
  return CommutationResult{std::move(gp), std::move(m2r), std::move(m1r), std::move(e1), std::move(e2), std::move(*iso)};
}

SquareChecks verify_commutation_squares(const ParallelPair& pair, const IndependenceWitness& witness,
                                        const CommutationResult& result) {
  SquareChecks out;
  auto run = [&](std::string label, const std::function<CheckReport()>& check) {
    try {
      out.squares.emplace_back(std::move(label), check());
    } catch (const Error& e) {
      out.squares.emplace_back(std::move(label), CheckReport::fail("construction failed", e.what()));
    }
  };
  auto agree = [](const Morphism& x, const Morphism& y) {
    return x.source == y.source && x.target == y.target && morphisms_agree(x, y);
  };
  auto pushout_and = [&](const Square& sq, const std::vector<std::pair<bool, std::string>>& extra) {
    if (auto r = is_pushout_injective(sq); !r) return r;
    for (const auto& [ok, what] : extra) {
      if (!ok) return CheckReport::fail("composite disagrees", what);
    }
    return CheckReport::pass();
  };
  auto pasted = [&](const Square& composite, const Square& original) {
    return squares_agree(composite, original) ? CheckReport::pass()
                                              : CheckReport::fail("composite disagrees", "original square");
  };

  const DirectDerivation& d1 = pair.d1;
  const DirectDerivation& d2 = pair.d2;
  const Morphism& b1 = d1.rule.b;
  const Morphism& b2 = d2.rule.b;
  const Morphism& r1 = d1.rule.r;
  const Morphism& r2 = d2.rule.r;
  const Morphism& c1 = d1.deletion.c;
  const Morphism& c2 = d2.deletion.c;
  const Morphism& g1 = d1.gluing.c;
  const Morphism& g2 = d2.gluing.c;

  // Stage 1: vertical decomposition through the pullback D.
  const PullbackResult pb = pullback_construct(c1, c2);
  const Morphism& q1 = pb.b;  // D → D1
  const Morphism& q2 = pb.c;  // D → D2
  const Square sq12{q1, q2, c1, c2};
  const Square sq32 = transpose(sq12);
  run("(12)", [&] { return is_pullback(sq12); });
  run("(32)", [&] { return is_pullback(sq32); });

  std::optional<Morphism> k1d, k2d;
  try {
    k1d = mediate(d1.deletion.d, compose(witness.j1, b1), pb);
    k2d = mediate(compose(witness.j2, b2), d2.deletion.d, pb);
  } catch (const Error& e) {
    for (const char* label : {"(11)", "(31)"}) out.squares.emplace_back(label, CheckReport::fail("mediating morphism", e.what()));
    return out;
  }

  const Square sq11{*k1d, b1, q2, witness.j1};
  const Square sq31{*k2d, b2, q1, witness.j2};
  run("(11)", [&] { return is_pushout_injective(sq11); });
  run("(31)", [&] { return is_pushout_injective(sq31); });
  run("(1)=(11)+(12)", [&] { return pasted(compose_squares_horizontal(sq11, sq12), transpose(d1.left_square())); });
  run("(3)=(31)+(32)", [&] { return pasted(compose_squares_horizontal(sq31, sq32), transpose(d2.left_square())); });

  const GluingResult glue21 = gluing(r1, *k1d);  // D̄2
  const GluingResult glue41 = gluing(r2, *k2d);  // D̄1
  run("(21)", [&] { return is_pushout_injective(gluing_square(r1, *k1d, glue21)); });
  run("(41)", [&] { return is_pushout_injective(gluing_square(r2, *k2d, glue41)); });

  std::optional<Morphism> u1, u2;
  try {
    u1 = out_of_gluing(glue21, compose(g1, q1), d1.comatch, d1.H());
    u2 = out_of_gluing(glue41, compose(g2, q2), d2.comatch, d2.H());
  } catch (const Error& e) {
    for (const char* label : {"(22)", "(42)"}) out.squares.emplace_back(label, CheckReport::fail("mediating morphism", e.what()));
    return out;
  }
  const Square sq22{glue21.c, q1, *u1, g1};
  const Square sq42{glue41.c, q2, *u2, g2};
  run("(22)", [&] { return is_pushout_injective(sq22); });
  run("(42)", [&] { return is_pushout_injective(sq42); });
  run("(2)=(21)+(22)", [&] {
    return pasted(compose_squares_horizontal(Square{*k1d, r1, glue21.c, glue21.h}, transpose(sq22)),
                  transpose(d1.right_square()));
  });
  run("(4)=(41)+(42)", [&] {
    return pasted(compose_squares_horizontal(Square{*k2d, r2, glue41.c, glue41.h}, transpose(sq42)),
                  transpose(d2.right_square()));
  });

  // Stage 2: the new pushout (5) into G' and the rearranged composites.
  const Graph& gp = result.Gp;
  std::optional<Square> sq5;
  try {
    Morphism v2 = retarget(compose(result.e1.gluing.c, corestrict(*u1, result.e1.D())), gp);
    Morphism v1 = out_of_gluing(glue41, compose(v2, glue21.c), retarget(result.e1.comatch, gp), gp);
    sq5 = Square{glue21.c, glue41.c, v2, v1};
  } catch (const Error& e) {
    out.squares.emplace_back("(5)", CheckReport::fail("construction failed", e.what()));
    return out;
  }
  run("(5)", [&] {
    for (const Morphism* m : {&sq5->bd, &sq5->cd}) {
      if (auto v = validate_morphism(*m); !v.ok()) return CheckReport::fail("invalid morphism into G'", v.violations.front().item);
    }
    if (!validate_graph(gp).ok()) return CheckReport::fail("invalid graph", "G'");
    return is_pushout_injective(*sq5);
  });
  run("(5) object", [&] {
    const GluingResult glue5 = gluing(glue21.c, glue41.c);
    return is_isomorphic(glue5.H, gp) ? CheckReport::pass() : CheckReport::fail("pushout object", "G' not isomorphic");
  });

  run("(31)+(22)", [&] {
    const Square left = compose_squares_horizontal(sq31, sq22);
    const bool context_iso = image_within(*u1, result.e1.D()) && is_bijective(corestrict(*u1, result.e1.D()));
    return pushout_and(left, {{agree(left.cd, result.m2_residual), "residual match L2 -> H1"},
                              {agree(left.cd, result.e1.match), "match of H1 => G'"},
                              {context_iso, "context of H1 => G'"}});
  });
  run("(41)+(5)", [&] {
    const Square right = compose_squares_horizontal(Square{*k2d, r2, glue41.c, glue41.h}, *sq5);
    return pushout_and(right, {{agree(right.cd, retarget(result.e1.comatch, gp)), "comatch R2 -> G'"}});
  });
  run("(11)+(42)", [&] {
    const Square left = compose_squares_horizontal(sq11, sq42);
    const bool context_iso = image_within(*u2, result.e2.D()) && is_bijective(corestrict(*u2, result.e2.D()));
    return pushout_and(left, {{agree(left.cd, result.m1_residual), "residual match L1 -> H2"},
                              {agree(left.cd, result.e2.match), "match of H2 => G'"},
                              {context_iso, "context of H2 => G'"}});
  });
  run("(21)+(5)", [&] {
    return is_pushout_injective(compose_squares_horizontal(Square{*k1d, r1, glue21.c, glue21.h}, transpose(*sq5)));
  });
  return out;
}

}  // namespace dpo
