#pragma once

#include <cstdint>
#include <vector>

#include "dpo/constructions.hpp"
#include "dpo/diagram.hpp"

namespace dpo {

/// L ← K → R with injective legs b: K → L and r: K → R.
struct Rule {
  Graph L;
  Graph K;
  Graph R;
  Morphism b;
  Morphism r;
};

/// Builds a rule from its two legs; the graphs are taken from the morphisms.
Rule make_rule(const Morphism& b, const Morphism& r);

/// The rule L ← L → L with identity legs.
Rule identity_rule(const Graph& g);

/// A match is an injective morphism L → G.
using Match = Morphism;

/// G ⇒ H by a rule at a match: the deletion square (K→L, K→D, L→G, D→G)
/// and the gluing square (K→R, K→D, R→H, D→H).
struct DirectDerivation {
  Rule rule;
  Match match;
  DeletionResult deletion;
  GluingResult gluing;
  Morphism comatch;  // R → H

  [[nodiscard]] const Graph& G() const noexcept { return match.target; }
  [[nodiscard]] const Graph& D() const noexcept { return deletion.D; }
  [[nodiscard]] const Graph& H() const noexcept { return gluing.H; }
  [[nodiscard]] Square left_square() const;
  [[nodiscard]] Square right_square() const;
};

/// Raised by apply() when the match violates the dangling condition.
class ApplicationError : public Error {
 public:
  explicit ApplicationError(CheckReport report);
  [[nodiscard]] const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

struct ApplyOptions {
  /// Added to the base of freshly allocated ids in the gluing step.
  std::uint32_t fresh_id_offset = 0;
};

ValidationReport validate_rule(const Rule& rule);

/// All injective morphisms L → G, in enumerate_morphisms order. The
/// dangling condition is not applied here.
std::vector<Match> find_matches(const Rule& rule, const Graph& g);

/// Edges of G not deleted by the rule but attached to a deleted node.
CheckReport dangling_condition(const Rule& rule, const Match& match);

/// Deletion followed by gluing. Both squares are re-checked as pushouts on
/// every call; a failing check raises InternalConsistencyError.
///
/// Throws PreconditionError for an invalid rule or match and
/// ApplicationError if the dangling condition fails.
DirectDerivation apply(const Rule& rule, const Match& match, ApplyOptions options = {});

/// D ≅ D' and H ≅ H'.
bool derivations_isomorphic(const DirectDerivation& d1, const DirectDerivation& d2);

}  // namespace dpo
