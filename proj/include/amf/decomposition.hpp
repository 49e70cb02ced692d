#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "amf/intervals.hpp"

namespace amf {

// One coordinate cell: the generating sigma and the chosen kappa_S per block.
struct CellFamily {
  AntiChain sigma;
  std::vector<std::pair<Mask, AntiChain>> assignment;  // block -> kappa_S
};

using CellSink = std::function<void(const CellFamily&, const Interval&)>;
using IntervalSink = std::function<void(const Interval&)>;

enum class SplitPolicy {
  kBalanced,  // bipartition of span(upper) maximizing min projected distance
  kSimple,    // descent-proof choice: a member of upper \ lower vs its complement
};

// Disjoint X, Y covering span(upper) with positive projected distance on X
// (and on Y whenever attainable). Empty result only in the size-<=2 base
// cases of the interval listing.
std::optional<std::pair<Mask, Mask>> find_descent_split(
    const AntiChain& lower, const AntiChain& upper,
    SplitPolicy policy = SplitPolicy::kBalanced);

// General coordinate system: cells {kappa_S in Upsilon_S | S in sigma} with
// interval [join kappa_S, product kappa_S]. Empty cells are yielded too.
void coordinate_cells(GroundSet ground, Mask n, const AntiChain& sigma, const CellSink& sink);

// Same with sigma a partition of n; every cell is nonempty.
void orthogonal_cells(GroundSet ground, const std::vector<Mask>& blocks, const CellSink& sink);

// Full-space decomposition: the {∅} singleton plus cells over families
// kappa_S in AMT(S) \ {∅}; a disjoint cover of AMT(N).
void full_space_cells(GroundSet ground, const std::vector<Mask>& blocks, const IntervalSink& sink);

// Interval decomposition: cells [join kappa_S ∨ lower, product kappa_S ∧ upper]
// over families kappa_S in [project(lower,S), project(upper,S)].
void decompose_interval(const AntiChain& lower, const AntiChain& upper, const AntiChain& sigma,
                        const IntervalSink& sink);

// CLI partition syntax: "1,2|3,4".
std::vector<Mask> parse_blocks(const std::string& text, GroundSet ground);

}  // namespace amf
