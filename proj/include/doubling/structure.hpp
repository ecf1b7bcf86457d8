#pragma once

#include <optional>
#include <vector>

#include "doubling/product_set.hpp"
#include "doubling/witness.hpp"

namespace doubling {

/// Tests whether S = {y, yx, ..., yx^(k-1)} for commuting y, x. The only
/// candidate that can work is y = x_1, x = x_1^-1 x_2, so that single
/// candidate is tested; on success the witness has exponents 0..k-1.
std::optional<ProgressionWitness> is_geometric_progression(const OrderedSet& s);

struct MinimalDoublingClassification {
  bool is_gp = false;
  std::optional<ProgressionWitness> witness;
  std::size_t doubling = 0;
};

/// Splits the dichotomy: either S is a geometric progression with
/// |S^2| = 2k-1, or it is not and |S^2| >= 2k. Cross-checks both directions
/// and raises LemmaViolationError if they disagree.
MinimalDoublingClassification classify_minimal_doubling(const OrderedSet& s);

/// Under |S^2| = 2k-1, returns the forced chain x_2 x_j = x_1 x_(j+1) for
/// j = 1..k-1, each equality verified by multiplication.
DerivationRecord lemma_l2_forced_relations(const OrderedSet& s);

/// k = 3 base case: verifies the squeezed equalities x_1 x_3 = x_2^2 and
/// x_1 x_2 = x_2 x_1, then returns the witness (y = x_1, x = x_1^-1 x_2,
/// exponents 0,1,2).
ProgressionWitness recover_base_k3(const OrderedSet& s);
ProgressionWitness recover_base_k3(const OrderedSet& s, DerivationRecord& record);

/// Case 1 extension: given a normalized witness for T = S minus its maximum,
/// finds a coincidence x_k * (y x^i) = (y x^u)(y x^v) in x_k T ∩ T^2 and
/// appends the exponent u+v-i for x_k. The counting hypothesis |S^2| <= 3k-4
/// guarantees the intersection is nonempty.
ProgressionWitness extend_witness_case1(const ProgressionWitness& t_witness,
                                        const GroupElement& x_k, const OrderedSet& s);
ProgressionWitness extend_witness_case1(const ProgressionWitness& t_witness,
                                        const GroupElement& x_k, const OrderedSet& s,
                                        DerivationRecord& record);

/// Case 2: verifies the forced equalities x_(k-1) x_k = x_k x_(k-1) and
/// x_(k-2) x_k = x_k x_(k-2) = x_(k-1)^2, sets y = x_k, x = x_(k-1) x_k^-1
/// (a step below the identity), and finds the remaining exponents by bounded
/// search (t <= 2k-4). Returns the witness unnormalized.
ProgressionWitness derive_case2(const OrderedSet& s);
ProgressionWitness derive_case2(const OrderedSet& s, DerivationRecord& record);

struct RecoveryResult {
  ProgressionWitness witness;
  DerivationRecord record;
};

/// Full inductive driver: base case k = 3, otherwise split on |T^2| for
/// T = S minus its maximum; normalizes the combined witness, certifies the
/// exponent bound through the integer progression-cover theorem, and returns
/// it with bound N = |S^2| - k.
RecoveryResult recover_structure(const OrderedSet& s);

/// Independent cross-check: requires the differences x_1^-1 x_(i+1) to
/// commute pairwise and with x_1, finds a common step by order-guided
/// subtractive reduction, and reads off exponents by bounded search.
/// Returns nullopt on any failure.
std::optional<ProgressionWitness> recover_via_step_euclid(const OrderedSet& s);

/// Canonicalizes: flips a below-identity step, shifts the minimum exponent
/// to 0, and divides the exponents by their gcd (replacing x by x^gcd).
/// Idempotent; preserves the covered set.
ProgressionWitness normalize_witness(const Group& group, ProgressionWitness w);

/// Soundness check: y x^(t_i) = x_i for every i, x and y commute, and for a
/// normalized witness the exponents are ascending within [0, bound].
bool verify_witness(const OrderedSet& s, const ProgressionWitness& w);

/// Exhaustive check over all k^4 index quadruples that
/// x_a x_b = x_c x_d holds exactly when t_a + t_b = t_c + t_d.
bool two_isomorphism_check(const OrderedSet& s, const ProgressionWitness& w);

struct AbelianCheckResult {
  bool abelian = false;
  DerivationRecord record;
};

/// Checks every pairwise commutator of S. When |S^2| <= 3k-3 a non-commuting
/// pair contradicts the abelian-subgroup theorem and raises
/// TheoremViolationError; otherwise the violating pair is recorded.
AbelianCheckResult abelian_generation_check(const OrderedSet& s);

/// True iff the witness reconstructs every element of S from y and x,
/// certifying that <S> needs at most two generators.
bool rank_bound_check(const OrderedSet& s, const ProgressionWitness& w);

}  // namespace doubling
