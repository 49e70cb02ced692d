#pragma once

#include "amf/antichain.hpp"
#include "amf/operators.hpp"

namespace amf {

// An interval [lower, upper] in the antichain order. Empty intervals
// (lower not <= upper) are first-class values.
class Interval {
 public:
  Interval(AntiChain lower, AntiChain upper);

  const AntiChain& lower() const { return lower_; }
  const AntiChain& upper() const { return upper_; }
  const GroundSet& ground() const { return lower_.ground(); }
  bool is_empty() const { return empty_; }

  bool contains(const AntiChain& k) const { return leq(lower_, k) && leq(k, upper_); }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  AntiChain lower_;
  AntiChain upper_;
  bool empty_;
};

Interval make_interval(AntiChain lower, AntiChain upper);

// [join of lowers, meet of uppers]; membership is the conjunction.
Interval intersect(const Interval& i, const Interval& j);

// Υ_N = [α_N, ω_N], the antichains with span exactly N.
// Υ_∅ is the singleton interval [{∅}, {∅}].
Interval upsilon(GroundSet ground, Mask n);
AntiChain alpha_of(GroundSet ground, Mask n);
AntiChain omega_of(GroundSet ground, Mask n);

// [a ∨ b, a × b].
Interval product_interval(const AntiChain& a, const AntiChain& b);

// "[<antichain> .. <antichain>]"
std::string format(const Interval& i);
Interval parse_interval(const std::string& text, GroundSet ground, bool normalize = false);

}  // namespace amf
