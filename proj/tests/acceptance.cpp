// Acceptance suite: one line per criterion, "criterion N: PASS/FAIL — ...".
// Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "amf/enumeration.hpp"
#include "amf/lattice.hpp"

using namespace amf;

namespace {

int failures = 0;

struct Criterion {
  int id;
  bool pass = true;
  std::ostringstream note;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(int id) : id(id) {}
  void require(bool ok, const std::string& why) {
    if (!ok) {
      if (pass) note << (note.str().empty() ? "" : "; ") << why;
      pass = false;
    }
  }
  ~Criterion() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " — " << note.str()
              << " [" << secs << " s]" << std::endl;
    if (!pass) ++failures;
  }
};

const char* kSequence[] = {"2", "3", "6", "20", "168", "7581", "7828354", "2414682040998"};

std::vector<AntiChain> upsilon_oracle(GroundSet g) {
  std::vector<AntiChain> out;
  for (AntiChain& a : oracle_enumerate(g))
    if (span(a) == g.mask()) out.push_back(std::move(a));
  return out;
}

bool covers_exactly_once(const std::vector<AntiChain>& universe,
                         const std::vector<Interval>& cells) {
  for (const AntiChain& a : universe) {
    int hits = 0;
    for (const Interval& c : cells)
      if (!c.is_empty() && c.contains(a)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<std::vector<Mask>> all_partitions(Mask universe) {
  std::vector<Mask> current;
  std::vector<std::vector<Mask>> results;
  auto rec = [&](auto&& self, Mask rest) -> void {
    if (!rest) {
      results.push_back(current);
      return;
    }
    Mask low = rest & (~rest + 1);
    Mask others = rest & ~low;
    for (Mask sub = others;; sub = (sub - 1) & others) {
      current.push_back(low | sub);
      self(self, rest & ~(low | sub));
      current.pop_back();
      if (!sub) break;
    }
  };
  rec(rec, universe);
  return results;
}

void criterion_1() {
  Criterion c(1);
  for (int n = 0; n <= 5; ++n) {
    std::size_t got = oracle_enumerate(GroundSet::prefix(n)).size();
    c.require(BigCount(got) == BigCount(kSequence[n]),
              "oracle |AMT(" + std::to_string(n) + ")| = " + std::to_string(got));
  }
  c.note << "oracle |AMT(n)|, n = 0..5, exact";
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
  c.require(secs < 60.0, "exceeded the 60 s budget");
}

void criterion_2() {
  Criterion c(2);
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 0; n <= 6; ++n) {
    BigCount want(kSequence[n]);
    c.require(dedekind_span_expansion(n) == want, "span expansion wrong at n=" + std::to_string(n));
    if (n >= 1)
      c.require(dedekind_one_element(n) == want, "one-element wrong at n=" + std::to_string(n));
    for (int n1 = 1; n1 < n; ++n1)
      c.require(dedekind_interval_recursion(n, n1) == want,
                "interval recursion wrong at n=" + std::to_string(n) +
                    ", n1=" + std::to_string(n1));
  }
  double sequential = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(sequential < 600.0, "single-threaded run exceeded 10 min");
  t0 = std::chrono::steady_clock::now();
  EnumOptions par;
  par.jobs = 8;
  c.require(dedekind_span_expansion(6, par) == BigCount(kSequence[6]), "8-worker value wrong");
  double parallel = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(parallel < 180.0, "8-worker span expansion exceeded 3 min");
  c.note << "all recursions n = 0..6 exact; sequential sweep " << sequential
         << " s, 8-worker span expansion " << parallel << " s";
}

void criterion_3() {
  Criterion c(3);
  const std::size_t expect[] = {0, 1, 2, 9, 114};
  for (int k = 1; k <= 4; ++k) {
    GroundSet g = GroundSet::prefix(k);
    std::size_t by_oracle = upsilon_oracle(g).size();
    c.require(by_oracle == expect[k], "oracle |Upsilon| wrong at k=" + std::to_string(k));
    for (int n1 = 1; n1 < k; ++n1)
      c.require(upsilon_count(k, n1) == expect[k],
                "split count wrong at k=" + std::to_string(k) + ", n1=" + std::to_string(n1));
  }
  c.note << "|Upsilon_k| = 1, 2, 9, 114 by oracle and by every split";
}

void criterion_4() {
  Criterion c(4);
  GroundSet g4 = GroundSet::prefix(4);
  std::vector<AntiChain> univ4 = upsilon_oracle(g4);
  std::size_t partitions = 0;
  for (const std::vector<Mask>& blocks : all_partitions(g4.mask())) {
    std::vector<Interval> cells;
    orthogonal_cells(g4, blocks,
                     [&](const CellFamily&, const Interval& cell) { cells.push_back(cell); });
    for (const Interval& cell : cells)
      c.require(!cell.is_empty(), "orthogonal cell empty");
    c.require(covers_exactly_once(univ4, cells), "orthogonal cover violated");
    ++partitions;
  }

  GroundSet g3 = GroundSet::prefix(3);
  std::vector<AntiChain> univ3 = upsilon_oracle(g3);
  std::size_t sigmas3 = 0;
  for (const AntiChain& sigma : univ3) {
    std::vector<Interval> cells;
    coordinate_cells(g3, g3.mask(), sigma,
                     [&](const CellFamily&, const Interval& cell) { cells.push_back(cell); });
    c.require(covers_exactly_once(univ3, cells), "general cover violated at n=3");
    ++sigmas3;
  }

  std::vector<AntiChain> sigmas4;
  std::mt19937 rng(2026);
  std::sample(univ4.begin(), univ4.end(), std::back_inserter(sigmas4), 100, rng);
  std::size_t empty_flagged = 0;
  for (const AntiChain& sigma : sigmas4) {
    std::vector<Interval> cells;
    coordinate_cells(g4, g4.mask(), sigma, [&](const CellFamily&, const Interval& cell) {
      c.require(cell.is_empty() == !leq(cell.lower(), cell.upper()), "empty flag wrong");
      if (cell.is_empty()) ++empty_flagged;
      cells.push_back(cell);
    });
    c.require(covers_exactly_once(univ4, cells), "general cover violated at n=4");
  }
  c.note << partitions << " partitions (n=4), " << sigmas3 << " sigma (n=3), "
         << sigmas4.size() << " sampled sigma (n=4), " << empty_flagged
         << " empty cells flagged; zero violations";
}

void criterion_5() {
  Criterion c(5);
  GroundSet g3 = GroundSet::prefix(3);
  std::vector<AntiChain> all = oracle_enumerate(g3);
  auto disjoint_blocks = [](const AntiChain& sigma) {
    Mask seen = 0;
    for (Mask s : sigma.sets()) {
      if (s & seen) return false;
      seen |= s;
    }
    return true;
  };
  std::size_t triples = 0;
  for (const AntiChain& lower : all) {
    if (lower.is_empty()) continue;
    for (const AntiChain& upper : all) {
      if (!leq(lower, upper)) continue;
      std::vector<AntiChain> members;
      for (const AntiChain& k : all)
        if (leq(lower, k) && leq(k, upper)) members.push_back(k);
      for (const AntiChain& sigma : all) {
        if (sigma.is_empty() || !leq(sigma, upper) || span(sigma) != span(upper) ||
            !disjoint_blocks(sigma))
          continue;
        std::vector<Interval> cells;
        decompose_interval(lower, upper, sigma,
                           [&](const Interval& cell) { cells.push_back(cell); });
        c.require(covers_exactly_once(members, cells), "decomposition cover violated");
        ++triples;
      }
    }
  }
  c.note << triples << " (lower, upper, sigma) triples over AMT(3); zero violations";
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
  c.require(secs < 120.0, "exceeded the 120 s budget");
}

void criterion_6() {
  Criterion c(6);
  std::vector<AntiChain> all3 = oracle_enumerate(GroundSet::prefix(3));
  std::size_t pairs = 0;
  try {
    for (const AntiChain& lo : all3)
      for (const AntiChain& hi : all3) {
        std::vector<AntiChain> listed = interval_members(lo, hi);
        std::vector<AntiChain> expect;
        for (const AntiChain& a : all3)
          if (leq(lo, a) && leq(a, hi)) expect.push_back(a);
        c.require(listed == expect, "listing mismatch on AMT(3)");
        std::set<std::string> unique;
        for (const AntiChain& a : listed) unique.insert(format(a));
        c.require(unique.size() == listed.size(), "duplicate emission");
        ++pairs;
      }
    std::vector<AntiChain> all4 = oracle_enumerate(GroundSet::prefix(4));
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> pick(0, all4.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const AntiChain& lo = all4[pick(rng)];
      const AntiChain& hi = all4[pick(rng)];
      std::vector<AntiChain> listed = interval_members(lo, hi);
      std::vector<AntiChain> expect;
      for (const AntiChain& a : all4)
        if (leq(lo, a) && leq(a, hi)) expect.push_back(a);
      c.require(listed == expect, "listing mismatch on AMT(4)");
      ++pairs;
    }
  } catch (const std::logic_error& e) {
    // the descent assertion inside the recursion surfaces as logic_error
    c.require(false, std::string("descent assertion fired: ") + e.what());
  }
  c.note << pairs << " bound pairs listed (all of AMT(3), 1000 sampled AMT(4)); "
         << "descent assertion never fired";
}

void criterion_7() {
  Criterion c(7);
  for (const AntiChain& a : oracle_enumerate(GroundSet::prefix(4)))
    c.require(rank_inclusion_exclusion(a) == to_monotone(a).size(),
              "rank mismatch at " + format(a));
  std::vector<AntiChain> all3 = oracle_enumerate(GroundSet::prefix(3));
  for (const AntiChain& a : all3)
    for (const AntiChain& b : all3) {
      MonotoneFamily fa = to_monotone(a), fb = to_monotone(b);
      std::size_t sym = 0;
      for (Mask s : fa.sets()) sym += !fb.contains(s);
      for (Mask s : fb.sets()) sym += !fa.contains(s);
      c.require(distance(a, b) == sym, "distance mismatch");
    }
  c.note << "rank = inclusion-exclusion = down-set size on AMT(4); "
         << "distance = down-set symmetric difference on all AMT(3) pairs";
}

void criterion_8() {
  Criterion c(8);
  GroundSet g4 = GroundSet::prefix(4);  // {4} is the fresh element
  AntiChain fresh = AntiChain::single(g4, mask_of_element(4));
  std::size_t checked = 0;
  for (const AntiChain& a3 : oracle_enumerate(GroundSet::prefix(3))) {
    if (a3.is_empty()) continue;
    AntiChain a = a3.with_ground(g4);
    BigCount lhs = count_interval(join(a, fresh), external_product(a, fresh));
    BigCount rhs = count_interval(AntiChain::unit(g4), a);
    c.require(lhs == rhs, "identity fails at " + format(a));
    ++checked;
  }
  c.note << "|[a ∨ {{4}}, a × {{4}}]| = |[{∅}, a]| for all " << checked
         << " nonempty a in AMT(3)";
}

void criterion_9() {
  Criterion c(9);
  GroundSet g3 = GroundSet::prefix(3);
  AmfLattice amt(g3);
  c.require(generic_partition_check(amt, amt.index_of(parse("{{1,2}}", g3)),
                                    amt.index_of(parse("{{3}}", g3)))
                .pass,
            "AMF generic partition failed");
  for (int box = 2; box <= 4; ++box) {
    YoungLattice young(box, box);
    c.require(generic_partition_check(young, young.index_of(vs(2)), young.index_of(hs(2))).pass,
              "Young generic partition failed");
  }
  PartitionReport yp = young_partition(4, 4);
  c.require(yp.pass && yp.covered == 69, "young_partition(4,4) wrong");
  // the two recorded divergences must be visible, not silently absorbed
  AmfLattice amt2(GroundSet::prefix(2));
  AntiChain one = AntiChain::single(GroundSet::prefix(2), mask_of_element(1));
  c.require(amt2.elements()[generic_product(amt2, amt2.index_of(one), amt2.index_of(one))] !=
                external_product(one, one),
            "non-covering-span divergence not observed");
  YoungLattice y3(3, 3);
  std::size_t u = y3.index_of(YoungDiagram{1});
  c.require(y3.elements()[generic_product(y3, u, u)] != rectangle(1, 1),
            "vs1 x hs1 degeneracy not observed");
  c.note << "generic partitions pass (AMF n=3, Young boxes to 4x4); 69 diagrams covered once; "
         << "both divergences observed";
}

void criterion_10() {
  Criterion c(10);
  double worst = 0;
  c.note << "calls / (output · n):";
  for (int n = 4; n <= 6; ++n) {
    GroundSet g = GroundSet::prefix(n);
    EnumStats stats;
    EnumOptions opts;
    opts.stats = &stats;
    BigCount out = count_interval(alpha_of(g, g.mask()), omega_of(g, g.mask()), opts);
    double ratio = static_cast<double>(stats.calls.load()) /
                   (out.convert_to<double>() * static_cast<double>(n));
    worst = std::max(worst, ratio);
    c.note << " n=" << n << ": " << ratio << " (" << stats.calls.load() << " calls, " << out
           << " elements);";
  }
  c.note << " C = " << worst << " (regression-tracked, not gated)";
  c.require(worst > 0, "no measurement produced");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::cout << "acceptance: all criteria PASS" << std::endl;
  else
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return failures;
}
