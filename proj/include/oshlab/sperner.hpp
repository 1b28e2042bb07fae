#pragma once

// Chain-bounded witness construction. For a target A = {a_1 < ... < a_k} the
// exact dyadic sum of 2^{-(a_i - i)} decides whether some family with no
// chain of ell+1 members order-shatters A; when it does, an exact witness of
// size 2^|A| is assembled by composing block constructions.

#include <optional>
#include <vector>

#include "oshlab/core.hpp"
#include "oshlab/shatter.hpp"

namespace oshlab {

inline constexpr int kDefaultExhaustiveGround = 5;

// Sum of 2^{-(a_i - i)} over the elements of a in increasing order (i is the
// 1-based rank); zero for the empty set.
DyadicRational criterion_sum(ElementSet a);

// criterion_sum(a) < ell, compared exactly.
bool criterion_holds(ElementSet a, int ell);

// A family with no chain of ell+1 members that order-shatters its target
// with exactly 2^|target| members. The ground size family.n reports the
// space the construction needed; normalized constructions use max(target)
// (or 1 for the empty target).
struct SpernerWitness {
  ElementSet target;
  int ell = 1;
  SetFamily family;
};

// Chain bound, order-shattering, exactness, and ground containment in one go.
bool verify_witness(const SpernerWitness& w);

// Witness for the full block [g+1, g+ell*2^g-1]: members pair each subset A'
// of the block with a fixed set G in [g] selected by |A'| / ell, where the
// 2^g candidate sets are ordered by size descending then bitmask ascending.
SpernerWitness construct_single_block(int g, int ell);

// Appends, after a gap of g, the block [end+g+1, end+g+2^g-1] to a normalized
// witness: each new combination Y joins the G chosen by |Y| from the gap
// interval, crossed with every existing member.
SpernerWitness extend_with_gap(const SpernerWitness& w, int g);

// For a target ending in {..., a_t, gap of exactly g, run of length r}:
// moves a_t into a fresh tail block of (p+1)*2^g - 1 elements starting at
// a_t + g, where p = ceil((r+1) / 2^g).
SpernerWitness shift_and_extend(const SpernerWitness& w, int g);

// For a target whose final run has length at least r+1: r applications of
// shift_and_extend after a full extension, yielding the tail run
// [a_t+g+1, a_t+g+(r+1)*2^g-1] where a_t is the run element r positions from
// the end. r == 0 means "use the whole final run", i.e. r = run length - 1.
SpernerWitness extend_consecutive(const SpernerWitness& w, int g, int r = 0);

// For a target ending in {gap of 1 at a_t, run of length r >= 2}: pulls the
// run one position down, producing {..., a_t} ∪ [a_t+2, a_t+2p-2] with
// p = ceil((r+1)/2).
SpernerWitness shift_back(const SpernerWitness& w);

// Iterated shift_back across a gap of g (final run length r >= 2^g):
// produces {..., a_t, ..., a_t + ceil((r+1)/2^g) - 2} where a_t is the first
// element of the length-g gap below the run.
SpernerWitness shift_back_by_gap(const SpernerWitness& w, int g);

// End-to-end: exact witness for any target satisfying the criterion, by
// induction on the gap/run block encoding. Throws kCriterionFails (with the
// exact sum in the message) when the criterion does not hold, and
// kGroundTooLarge when any stage would need a ground beyond max_ground.
SpernerWitness construct_sperner_witness(ElementSet a, int ell,
                                         int max_ground = kDefaultEnumerationCap);

// True when no family over [n] with longest chain <= ell order-shatters a.
// Walks every such family by depth-first search over P([n]) in canonical
// order with an incremental longest-chain bound.
bool exhaustive_nonexistence(ElementSet a, int n, int ell,
                             int cap = kDefaultExhaustiveGround);

}  // namespace oshlab
