#include "dpo/rewriting.hpp"

#include <sstream>

namespace dpo {

Rule make_rule(const Morphism& b, const Morphism& r) {
  return Rule{b.target, b.source, r.target, b, r};
}

Rule identity_rule(const Graph& g) {
  const Morphism id = identity(g);
  return make_rule(id, id);
}

Square DirectDerivation::left_square() const {
  return Square{rule.b, deletion.d, match, deletion.c};
}

Square DirectDerivation::right_square() const {
  return Square{rule.r, deletion.d, comatch, gluing.c};
}

ApplicationError::ApplicationError(CheckReport report)
    : Error("rule not applicable: dangling edges " + report.counterexample.value_or("")),
      report_(std::move(report)) {}

ValidationReport validate_rule(const Rule& rule) {
  ValidationReport report;
  auto graph = [&](const Graph& g, std::string_view name) {
    for (const auto& v : validate_graph(g).violations) report.add(std::string(name) + " " + v.item, v.clause);
  };
  graph(rule.L, "L");
  graph(rule.K, "K");
  graph(rule.R, "R");

  auto leg = [&](const Morphism& m, std::string_view name, const Graph& to) {
    if (!(m.source == rule.K) || !(m.target == to)) {
      report.add(std::string(name), "endpoint mismatch");
      return;
    }
    auto v = validate_morphism(m);
    for (const auto& violation : v.violations) report.add(std::string(name) + " " + violation.item, violation.clause);
    if (v.ok() && !is_injective(m)) report.add(std::string(name), std::string(name) + " not injective");
  };
  leg(rule.b, "b", rule.L);
  leg(rule.r, "r", rule.R);
  return report;
}

std::vector<Match> find_matches(const Rule& rule, const Graph& g) {
  return enumerate_morphisms(rule.L, g, /*injective_only=*/true);
}

CheckReport dangling_condition(const Rule& rule, const Match& match) {
  auto edges = dangling_edges(rule.b, match);
  if (edges.empty()) return CheckReport::pass();
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? ", " : "") << "edge " << edges[i];
  return CheckReport::fail("dangling condition", os.str());
}

DirectDerivation apply(const Rule& rule, const Match& match, ApplyOptions options) {
  if (auto report = validate_rule(rule); !report.ok()) {
    std::ostringstream msg;
    msg << "apply: invalid rule: " << report;
    throw PreconditionError(msg.str());
  }
  if (!(match.source == rule.L)) throw PreconditionError("apply: match source is not the rule's left-hand side");
  if (auto report = validate_morphism(match); !report.ok()) {
    std::ostringstream msg;
    msg << "apply: invalid match: " << report;
    throw PreconditionError(msg.str());
  }
  if (!is_injective(match)) throw PreconditionError("apply: match is not injective");
  if (auto report = dangling_condition(rule, match); !report) throw ApplicationError(std::move(report));

  DeletionResult del = deletion(rule.b, match);
  GluingResult glue = gluing(rule.r, del.d, options.fresh_id_offset);
  Morphism comatch = glue.h;
  DirectDerivation out{rule, match, std::move(del), std::move(glue), std::move(comatch)};

  if (auto r = is_pushout_injective(out.left_square()); !r) {
    std::ostringstream msg;
    msg << "apply: deletion square is not a pushout: " << r;
    throw InternalConsistencyError(msg.str());
  }
  if (auto r = is_pushout_injective(out.right_square()); !r) {
    std::ostringstream msg;
    msg << "apply: gluing square is not a pushout: " << r;
    throw InternalConsistencyError(msg.str());
  }
  return out;
}

bool derivations_isomorphic(const DirectDerivation& d1, const DirectDerivation& d2) {
  return is_isomorphic(d1.D(), d2.D()).has_value() && is_isomorphic(d1.H(), d2.H()).has_value();
}

}  // namespace dpo
