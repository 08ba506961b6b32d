#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpo/rewriting.hpp"

namespace dpo {

/// Two direct derivations G ⇒ H1 and G ⇒ H2 out of the same graph.
struct ParallelPair {
  DirectDerivation d1;
  DirectDerivation d2;
};

/// j1: L1 → D2 and j2: L2 → D1 with c2 ∘ j1 = m1 and c1 ∘ j2 = m2.
struct IndependenceWitness {
  Morphism j1;
  Morphism j2;
};

/// For G ⇒ H ⇒ H': R1 → D2 and L2 → D1 commuting with the comatch of the
/// first step and the match of the second step.
struct SequentialWitness {
  Morphism r1_to_d2;
  Morphism l2_to_d1;
};

/// Thrown by commute() on a pair that is not parallel independent.
class DependentPairError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct CommutationResult {
  Graph Gp;                // common result G'
  Match m2_residual;       // L2 → H1
  Match m1_residual;       // L1 → H2
  DirectDerivation e1;     // H1 ⇒ G' by rule 2
  DirectDerivation e2;     // H2 ⇒ G' by rule 1
  IsoWitness iso;          // e1.H() → e2.H()
};

/// Labelled outcome of every square of the commutation decomposition.
struct SquareChecks {
  std::vector<std::pair<std::string, CheckReport>> squares;

  [[nodiscard]] bool all_pass() const;
  /// First failing square, its label as failed_clause.
  [[nodiscard]] CheckReport summary() const;
  [[nodiscard]] const CheckReport* find(std::string_view label) const;
};

/// Which of the two triangles fails, if any.
CheckReport parallel_independence_report(const ParallelPair& pair);

/// The witness is forced: context inclusions are identities, so it exists
/// iff m1(L1) ⊆ D2 and m2(L2) ⊆ D1.
/// Throws PreconditionError if the derivations start from different graphs.
std::optional<IndependenceWitness> parallel_independent(const ParallelPair& pair);

/// Throws PreconditionError if `second` does not start at first.H().
std::optional<SequentialWitness> sequential_independent(const DirectDerivation& first,
                                                        const DirectDerivation& second);

/// (m2', m1') with m2' = (D1 ↪ H1) ∘ j2 and m1' = (D2 ↪ H2) ∘ j1. Both are
/// checked for validity, injectivity and the dangling condition; a failure
/// raises InternalConsistencyError.
std::pair<Match, Match> residual_match(const ParallelPair& pair, const IndependenceWitness& witness);

/// Applies each rule at its residual match on the other branch and closes
/// the diamond with an isomorphism. Also checks that both composite
/// two-step derivations are sequentially independent.
///
/// Throws DependentPairError if the pair is not parallel independent and
/// InternalConsistencyError if the diamond does not close.
CommutationResult commute(const ParallelPair& pair, ApplyOptions options = {});

/// Rebuilds the vertical decomposition of the four derivation squares
/// through the pullback D of D1 → G ← D2 and checks each piece:
///
///   (12), (32)          D1 ← D → D2 over G, pullbacks
///   (11), (31)          K_i → D, L_i → D_j, pushouts
///   (21), (41)          gluings of R_i along K_i → D, pushouts
///   (22), (42)          into H1 / H2, pushouts
///   (5)                 D̄2 ← D → D̄1 into G', pushout
///   (1)..(4)            pasted pieces agree with the original squares
///   (31)+(22), (41)+(5) left/right squares of H1 ⇒ G'
///   (11)+(42), (21)+(5) left/right squares of H2 ⇒ G'
SquareChecks verify_commutation_squares(const ParallelPair& pair, const IndependenceWitness& witness,
                                        const CommutationResult& result);

}  // namespace dpo
