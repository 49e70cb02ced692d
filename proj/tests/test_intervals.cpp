#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amf/enumeration.hpp"

using namespace amf;

namespace {

AntiChain ac(const std::string& text, int n) { return parse(text, GroundSet::prefix(n), true); }

}  // namespace

TEST_CASE("make_interval and membership") {
  GroundSet g2 = GroundSet::prefix(2);
  AntiChain a = ac("{{1},{2}}", 2);
  Interval singleton = make_interval(a, a);
  CHECK_FALSE(singleton.is_empty());
  CHECK(singleton.contains(a));
  CHECK_FALSE(singleton.contains(ac("{{1,2}}", 2)));

  Interval empty = make_interval(ac("{{1,2}}", 2), a);
  CHECK(empty.is_empty());
  for (const AntiChain& k : oracle_enumerate(g2)) CHECK_FALSE(empty.contains(k));

  // [α ∨ ∅, α × ∅] = [α, ∅] is empty: ∅ annihilates the product.
  AntiChain nothing = AntiChain::empty(g2);
  CHECK(make_interval(join(a, nothing), external_product(a, nothing)).is_empty());
}

TEST_CASE("interval text form") {
  GroundSet g2 = GroundSet::prefix(2);
  Interval i = make_interval(ac("{{1},{2}}", 2), ac("{{1,2}}", 2));
  CHECK(format(i) == "[{{1},{2}} .. {{1,2}}]");
  CHECK(parse_interval(format(i), g2) == i);
}

TEST_CASE("intersection is bound-wise join/meet") {
  GroundSet g2 = GroundSet::prefix(2);
  Interval i = make_interval(ac("{{1}}", 2), ac("{{1,2}}", 2));
  Interval j = make_interval(ac("{{2}}", 2), ac("{{1,2}}", 2));
  Interval k = intersect(i, j);
  CHECK(k.lower() == ac("{{1},{2}}", 2));
  CHECK(k.upper() == ac("{{1,2}}", 2));
  CHECK(intersect(i, i) == i);
}

TEST_CASE("intersection membership agrees on all AMT(3) interval pairs") {
  std::vector<AntiChain> all = oracle_enumerate(GroundSet::prefix(3));
  std::vector<Interval> intervals;
  for (const AntiChain& lo : all)
    for (const AntiChain& hi : all)
      if (leq(lo, hi)) intervals.push_back(make_interval(lo, hi));
  // member bitsets make the pairwise comparison cheap
  std::vector<std::vector<bool>> member(intervals.size(), std::vector<bool>(all.size()));
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t e = 0; e < all.size(); ++e) member[i][e] = intervals[i].contains(all[e]);
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i; j < intervals.size(); ++j) {
      Interval meet_ij = intersect(intervals[i], intervals[j]);
      for (std::size_t e = 0; e < all.size(); ++e)
        CHECK(meet_ij.contains(all[e]) == (member[i][e] && member[j][e]));
    }
}

TEST_CASE("upsilon intervals") {
  GroundSet g3 = GroundSet::prefix(3);
  CHECK(upsilon(g3, 0) == make_interval(AntiChain::unit(g3), AntiChain::unit(g3)));
  Interval u1 = upsilon(g3, mask_of_element(1));
  CHECK(u1.lower() == ac("{{1}}", 3));
  CHECK(u1.upper() == ac("{{1}}", 3));
  Interval u12 = upsilon(g3, GroundSet::of({1, 2}).mask());
  CHECK(u12.lower() == ac("{{1},{2}}", 3));
  CHECK(u12.upper() == ac("{{1,2}}", 3));
  CHECK(interval_members(u12.lower(), u12.upper()).size() == 2);
  CHECK(interval_members(alpha_of(g3, g3.mask()), omega_of(g3, g3.mask())).size() == 9);
}

TEST_CASE("upsilon members are exactly the span-N antichains") {
  for (int n = 0; n <= 4; ++n) {
    GroundSet g = GroundSet::prefix(n);
    std::vector<AntiChain> all = oracle_enumerate(g);
    for (Mask s = 0; s <= g.mask(); ++s) {
      if (!subset_of(s, g.mask())) continue;
      Interval u = upsilon(g, s);
      for (const AntiChain& a : all) {
        bool in_u = !a.is_empty() && span(a) == s;
        CHECK(u.contains(a) == in_u);
      }
    }
    // {Υ_S} ∪ {∅} tiles AMT(N): span is a well-defined cell label.
    std::size_t total = 1;
    for (Mask s = 0; s <= g.mask(); ++s)
      total += interval_members(alpha_of(g, s), omega_of(g, s)).size();
    CHECK(total == all.size());
  }
}

TEST_CASE("product intervals") {
  GroundSet g3 = GroundSet::prefix(3);
  for (const AntiChain& a : oracle_enumerate(g3)) {
    if (a.is_empty()) continue;
    Interval i = product_interval(a, AntiChain::unit(g3));
    CHECK(i.lower() == a);
    CHECK(i.upper() == a);
  }
  CHECK(product_interval(ac("{{1}}", 3), ac("{{2}}", 3)) ==
        make_interval(ac("{{1},{2}}", 3), ac("{{1,2}}", 3)));
  CHECK(product_interval(ac("{{1},{2}}", 3), ac("{{3}}", 3)) ==
        make_interval(ac("{{1},{2},{3}}", 3), ac("{{1,3},{2,3}}", 3)));
}

TEST_CASE("uniform span inside product intervals (n = 4 partitions)") {
  GroundSet g4 = GroundSet::prefix(4);
  std::vector<std::pair<Mask, Mask>> partitions;
  Mask full = g4.mask();
  for (Mask x = 1; x < full; ++x)
    if (x & 1) partitions.emplace_back(x, full & ~x);
  for (auto [x, y] : partitions) {
    std::vector<AntiChain> kx = interval_members(alpha_of(g4, x), omega_of(g4, x));
    std::vector<AntiChain> ky = interval_members(alpha_of(g4, y), omega_of(g4, y));
    for (const AntiChain& a : kx)
      for (const AntiChain& b : ky) {
        AntiChain lo = join(a, b);
        for (const AntiChain& k : interval_members(lo, external_product(a, b))) {
          CHECK(span(k) == span(lo));           // uniform span
          CHECK(project(k, x) == a);            // projection invariant
          CHECK(project(k, y) == b);
        }
      }
  }
}
