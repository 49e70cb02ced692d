#include "amf/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace amf {

Mask span(const AntiChain& a) {
  Mask m = 0;
  for (Mask s : a.sets()) m |= s;
  return m;
}

AntiChain project(const AntiChain& a, Mask n_prime) {
  std::vector<Mask> family;
  family.reserve(a.size());
  for (Mask s : a.sets()) family.push_back(s & n_prime);
  return AntiChain::supremum(a.ground(), std::move(family));
}

AntiChain meet(const AntiChain& a, const AntiChain& b) {
  require_same_ground(a, b);
  std::vector<Mask> family;
  family.reserve(a.size() * b.size());
  for (Mask s : a.sets())
    for (Mask t : b.sets()) family.push_back(s & t);
  return AntiChain::supremum(a.ground(), std::move(family));
}

AntiChain join(const AntiChain& a, const AntiChain& b) {
  require_same_ground(a, b);
  std::vector<Mask> family = a.sets();
  family.insert(family.end(), b.sets().begin(), b.sets().end());
  return AntiChain::supremum(a.ground(), std::move(family));
}

AntiChain join_nary(GroundSet ground, const std::vector<AntiChain>& family) {
  AntiChain acc = AntiChain::empty(ground);
  for (const AntiChain& a : family) acc = join(acc, a);
  return acc;
}

AntiChain external_product(const AntiChain& a, const AntiChain& b) {
  require_same_ground(a, b);
  if (a.is_empty() || b.is_empty()) return AntiChain::empty(a.ground());
  Mask sa = span(a), sb = span(b);
  std::vector<Mask> family;
  family.reserve(a.size() * b.size());
  for (Mask s : a.sets())
    for (Mask t : b.sets()) family.push_back((s & ~sb) | (t & ~sa) | (s & t));
  return AntiChain::supremum(a.ground(), std::move(family));
}

AntiChain product_nary(GroundSet ground, const std::vector<AntiChain>& family) {
  AntiChain acc = AntiChain::unit(ground);
  for (const AntiChain& a : family) acc = external_product(acc, a);
  return acc;
}

namespace {

// Compresses the bits of `set` (a subset of `sp`) into consecutive low bits.
Mask compress(Mask set, Mask sp) {
  Mask out = 0;
  int idx = 0;
  for (Mask b = sp; b;) {
    Mask low = b & (~b + 1);
    b ^= low;
    if (set & low) out |= Mask{1} << idx;
    ++idx;
  }
  return out;
}

}  // namespace

std::uint64_t rank(const AntiChain& a) {
  Mask sp = span(a);
  int n = popcount(sp);
  if (n > 62) throw std::invalid_argument("rank: span too large");
  if (a.is_empty()) return 0;
  if (n <= 6) return popcount(static_cast<Mask>(detail::downset_word(a, sp)));
  if (n <= 24) {
    std::vector<std::uint64_t> seen((std::size_t{1} << n) / 64 + 1, 0);
    std::uint64_t count = 0;
    for (Mask s : a.sets()) {
      Mask c = compress(s, sp);
      for (Mask sub = c;; sub = (sub - 1) & c) {
        std::uint64_t& word = seen[sub >> 6];
        std::uint64_t bit = std::uint64_t{1} << (sub & 63);
        if (!(word & bit)) {
          word |= bit;
          ++count;
        }
        if (sub == 0) break;
      }
    }
    return count;
  }
  std::unordered_set<Mask> seen;
  for (Mask s : a.sets())
    for (Mask sub = s;; sub = (sub - 1) & s) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  return seen.size();
}

std::uint64_t rank_inclusion_exclusion(const AntiChain& a) {
  if (a.size() > 20) throw std::invalid_argument("inclusion-exclusion limited to 20 members");
  if (popcount(span(a)) > 40) throw std::invalid_argument("inclusion-exclusion span too large");
  const std::vector<Mask>& sets = a.sets();
  long long total = 0;
  std::uint32_t m = a.size();
  for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
    Mask inter = ~Mask{0};
    for (std::uint32_t i = 0; i < m; ++i)
      if (pick & (1u << i)) inter &= sets[i];
    long long term = 1LL << popcount(inter);
    total += (popcount(static_cast<Mask>(pick)) % 2 == 1) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t distance(const AntiChain& a, const AntiChain& b) {
  Mask sp = span(a) | span(b);
  if (popcount(sp) <= 6)
    return popcount(static_cast<Mask>(detail::downset_word(a, sp) ^ detail::downset_word(b, sp)));
  return rank(a) + rank(b) - 2 * rank(meet(a, b));
}

namespace detail {

Mask compress_mask(Mask set, Mask within) { return compress(set, within); }

std::uint64_t downset_word(const AntiChain& a, Mask part) {
  std::uint64_t word = 0;
  for (Mask s : a.sets()) {
    Mask c = compress(s & part, part);
    for (Mask sub = c;; sub = (sub - 1) & c) {
      word |= std::uint64_t{1} << sub;
      if (sub == 0) break;
    }
  }
  return word;
}

std::uint64_t projected_distance_small(const AntiChain& lower, const AntiChain& upper,
                                       Mask part) {
  return popcount(static_cast<Mask>(downset_word(lower, part) ^ downset_word(upper, part)));
}

}  // namespace detail

}  // namespace amf
