#pragma once

#include <cstdint>

#include "amf/antichain.hpp"

namespace amf {

// Union of all member sets; span of the empty family and of {∅} is ∅.
Mask span(const AntiChain& a);

// Restriction to a sub-ground-set followed by sup. The result keeps the
// original ground set so operator expressions compose freely.
AntiChain project(const AntiChain& a, Mask n_prime);

// Greatest common lower bound: sup of pairwise intersections.
AntiChain meet(const AntiChain& a, const AntiChain& b);

// Least common upper bound: sup of the union.
AntiChain join(const AntiChain& a, const AntiChain& b);
AntiChain join_nary(GroundSet ground, const std::vector<AntiChain>& family);

// sup{(A \ sp(b)) ∪ (B \ sp(a)) ∪ (A ∩ B)}: the largest antichain with span
// sp(a) ∪ sp(b) whose projections onto the two spans are dominated by a, b.
// Neutral element {∅}, annihilator ∅.
AntiChain external_product(const AntiChain& a, const AntiChain& b);
AntiChain product_nary(GroundSet ground, const std::vector<AntiChain>& family);

// Number of distinct subsets of members (size of the associated down-set),
// counted with a visited bitmap. Spans above 62 elements are rejected.
std::uint64_t rank(const AntiChain& a);

// Inclusion-exclusion evaluation of the same quantity; exponential in the
// family size, retained as an independent cross-check for |a| <= 20.
std::uint64_t rank_inclusion_exclusion(const AntiChain& a);

// rank(a) + rank(b) - 2 rank(a ∧ b): symmetric difference of the down-sets.
std::uint64_t distance(const AntiChain& a, const AntiChain& b);

namespace detail {

// Bits of `set` (a subset of `within`) moved to the low positions.
Mask compress_mask(Mask set, Mask within);

// Down-set of the projection onto `part` (|part| <= 6) as a single word:
// bit k is set iff the k-th subset of `part` (bits compressed to the low
// positions) is a subset of some member.
std::uint64_t downset_word(const AntiChain& a, Mask part);

// distance(project(lower, part), project(upper, part)) without building
// the projections; |part| <= 6.
std::uint64_t projected_distance_small(const AntiChain& lower, const AntiChain& upper, Mask part);

}  // namespace detail

}  // namespace amf
