#include "amf/intervals.hpp"

namespace amf {

Interval::Interval(AntiChain lower, AntiChain upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_ground(lower_, upper_);
  empty_ = !leq(lower_, upper_);
}

Interval make_interval(AntiChain lower, AntiChain upper) {
  return Interval(std::move(lower), std::move(upper));
}

Interval intersect(const Interval& i, const Interval& j) {
  return Interval(join(i.lower(), j.lower()), meet(i.upper(), j.upper()));
}

AntiChain alpha_of(GroundSet ground, Mask n) {
  if (n == 0) return AntiChain::unit(ground);
  return AntiChain::all_singletons(ground, n);
}

AntiChain omega_of(GroundSet ground, Mask n) {
  if (n == 0) return AntiChain::unit(ground);
  return AntiChain::single(ground, n);
}

Interval upsilon(GroundSet ground, Mask n) {
  if (!subset_of(n, ground.mask())) throw std::invalid_argument("span outside ground set");
  return Interval(alpha_of(ground, n), omega_of(ground, n));
}

Interval product_interval(const AntiChain& a, const AntiChain& b) {
  return Interval(join(a, b), external_product(a, b));
}

std::string format(const Interval& i) {
  return "[" + format(i.lower()) + " .. " + format(i.upper()) + "]";
}

Interval parse_interval(const std::string& text, GroundSet ground, bool normalize) {
  std::size_t open = text.find('[');
  std::size_t sep = text.find("..");
  std::size_t close = text.rfind(']');
  if (open == std::string::npos || sep == std::string::npos || close == std::string::npos ||
      !(open < sep && sep < close))
    throw ParseError("expected \"[<antichain> .. <antichain>]\"");
  AntiChain lo = parse(text.substr(open + 1, sep - open - 1), ground, normalize);
  AntiChain hi = parse(text.substr(sep + 2, close - sep - 2), ground, normalize);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace amf
