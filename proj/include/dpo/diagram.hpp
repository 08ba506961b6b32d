#pragma once

#include "dpo/constructions.hpp"
#include "dpo/morphism.hpp"

namespace dpo {

/// Square
///
///     A --ab--> B
///     |         |
///    ac        bd
///     v         v
///     C --cd--> D
struct Square {
  Morphism ab;
  Morphism ac;
  Morphism bd;
  Morphism cd;
};

/// Raised when a pushout check is asked about a square outside the
/// all-injective fragment where the characterization applies.
class ScopeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Swaps the roles of B and C.
Square transpose(const Square& sq);

/// Throws PreconditionError unless the four endpoint graphs line up.
void check_endpoints(const Square& sq);

/// bd ∘ ab = cd ∘ ac pointwise.
CheckReport commutes(const Square& sq);

/// Every pair b' ∈ B, c' ∈ C with bd(b') = cd(c') has a common preimage in A.
CheckReport reduced_chain_condition(const Square& sq);

/// Every item of the common target is hit by bd or cd.
CheckReport jointly_surjective(const Morphism& bd, const Morphism& cd);

/// Pushout recognition for all-injective squares: commutativity, reduced
/// chain-condition and joint surjectivity. Throws ScopeError if any leg is
/// not injective.
CheckReport is_pushout_injective(const Square& sq);

/// Pullback recognition. Builds the canonical pullback of (bd, cd) and
/// checks that a ↦ ⟨ab(a), ac(a)⟩ is a bijective morphism.
/// Throws PreconditionError if the square does not commute.
CheckReport is_pullback(const Square& sq);

/// Pastes sq2 to the right of sq1 along sq1.bd = sq2.ac:
///
///     A --> B --> E
///     |     |     |
///     C --> D --> F
///
/// Returns the outer rectangle (A→E, A→C, E→F, C→F).
/// Throws PreconditionError if the shared edge does not match.
Square compose_squares_horizontal(const Square& sq1, const Square& sq2);

/// All four legs agree pointwise.
bool squares_agree(const Square& s1, const Square& s2);

/// Square form of a gluing: (K→R, K→D, R→H, D→H).
Square gluing_square(const Morphism& b, const Morphism& d, const GluingResult& result);

/// Square form of a canonical pullback: (A→B, A→C, B→D, C→D).
Square pullback_square(const Morphism& f, const Morphism& g, const PullbackResult& result);

/// The commuting square (id, id, m, m), a pullback whenever m is injective.
Square special_square(const Morphism& m);

}  // namespace dpo
