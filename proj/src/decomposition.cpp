#include "amf/decomposition.hpp"

#include <algorithm>
#include <limits>

#include "amf/enumeration.hpp"

namespace amf {

namespace {

std::uint64_t projected_distance(const AntiChain& lower, const AntiChain& upper, Mask part) {
  if (popcount(part) <= 6) return detail::projected_distance_small(lower, upper, part);
  return distance(project(lower, part), project(upper, part));
}

std::optional<std::pair<Mask, Mask>> best_bipartition(const AntiChain& lower,
                                                      const AntiChain& upper, Mask sp_u,
                                                      bool balanced_only) {
  int k = popcount(sp_u);
  int half = k / 2;
  Mask anchor = sp_u & (~sp_u + 1);  // fix the lowest span bit in X to skip mirrors
  std::optional<std::pair<Mask, Mask>> best;
  std::uint64_t best_min = 0;
  std::uint64_t best_gap = std::numeric_limits<std::uint64_t>::max();
  for (Mask x = sp_u;; x = (x - 1) & sp_u) {
    if (x != 0 && x != sp_u && (x & anchor) &&
        (!balanced_only || popcount(x) == half || popcount(x) == k - half)) {
      Mask y = sp_u & ~x;
      std::uint64_t dx = projected_distance(lower, upper, x);
      std::uint64_t dy = projected_distance(lower, upper, y);
      std::uint64_t lo = std::min(dx, dy);
      std::uint64_t gap = std::max(dx, dy) - lo;
      if (lo >= 1 && (lo > best_min || (lo == best_min && gap < best_gap))) {
        best = std::make_pair(x, y);
        best_min = lo;
        best_gap = gap;
      }
    }
    if (x == 0) break;
  }
  return best;
}

// Prop. 7 style choice: a member of upper absent from lower (or a span set
// minus one element when upper is a single set) against its complement.
std::optional<std::pair<Mask, Mask>> descent_fallback(const AntiChain& lower,
                                                      const AntiChain& upper, Mask sp_u) {
  std::vector<Mask> candidates;
  for (Mask a : upper.sets())
    if (a != 0 && a != sp_u &&
        std::find(lower.sets().begin(), lower.sets().end(), a) == lower.sets().end())
      candidates.push_back(a);
  for (Mask b = sp_u; b;) {
    Mask low = b & (~b + 1);
    b ^= low;
    if (sp_u ^ low) candidates.push_back(sp_u ^ low);
  }
  for (Mask x : candidates) {
    Mask y = sp_u & ~x;
    if (y == 0) continue;
    if (projected_distance(lower, upper, x) >= 1) return std::make_pair(x, y);
    if (projected_distance(lower, upper, y) >= 1) return std::make_pair(y, x);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Mask, Mask>> find_descent_split(const AntiChain& lower,
                                                        const AntiChain& upper,
                                                        SplitPolicy policy) {
  Mask sp_u = span(upper);
  if (popcount(sp_u) < 2) return std::nullopt;
  if (policy == SplitPolicy::kBalanced) {
    if (auto s = best_bipartition(lower, upper, sp_u, /*balanced_only=*/true)) return s;
    if (auto s = best_bipartition(lower, upper, sp_u, /*balanced_only=*/false)) return s;
  }
  return descent_fallback(lower, upper, sp_u);
}

namespace {

// Members of Upsilon_S; the S = ∅ convention yields the single {∅} function.
std::vector<AntiChain> upsilon_members(GroundSet ground, Mask s) {
  if (s == 0) return {AntiChain::unit(ground)};
  return interval_members(alpha_of(ground, s), omega_of(ground, s));
}

// Odometer over per-block choices, in canonical (block, member) order.
void cartesian_cells(const std::vector<std::vector<AntiChain>>& choices,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return;
  while (true) {
    visit(idx);
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

void emit_family_cells(GroundSet ground, const AntiChain& sigma,
                       const std::vector<std::vector<AntiChain>>& choices, const CellSink& sink,
                       const AntiChain* raise_to, const AntiChain* clip_to) {
  const std::vector<Mask>& blocks = sigma.sets();
  cartesian_cells(choices, [&](const std::vector<std::size_t>& idx) {
    std::vector<AntiChain> family;
    family.reserve(idx.size());
    CellFamily cell{sigma, {}};
    for (std::size_t i = 0; i < idx.size(); ++i) {
      family.push_back(choices[i][idx[i]]);
      cell.assignment.emplace_back(blocks[i], choices[i][idx[i]]);
    }
    AntiChain lo = join_nary(ground, family);
    AntiChain hi = product_nary(ground, family);
    if (raise_to) lo = join(lo, *raise_to);
    if (clip_to) hi = meet(hi, *clip_to);
    sink(cell, Interval(std::move(lo), std::move(hi)));
  });
}

}  // namespace

void coordinate_cells(GroundSet ground, Mask n, const AntiChain& sigma, const CellSink& sink) {
  if (span(sigma) != n) throw std::invalid_argument("span(sigma) must equal N");
  std::vector<std::vector<AntiChain>> choices;
  for (Mask s : sigma.sets()) choices.push_back(upsilon_members(ground, s));
  emit_family_cells(ground, sigma, choices, sink, nullptr, nullptr);
}

void orthogonal_cells(GroundSet ground, const std::vector<Mask>& blocks, const CellSink& sink) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw std::invalid_argument("empty partition block");
    if (b & seen) throw std::invalid_argument("partition blocks overlap");
    seen |= b;
  }
  AntiChain sigma = AntiChain::of(ground, blocks);
  coordinate_cells(ground, seen, sigma, sink);
}

void full_space_cells(GroundSet ground, const std::vector<Mask>& blocks,
                      const IntervalSink& sink) {
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw std::invalid_argument("empty partition block");
    if (b & seen) throw std::invalid_argument("partition blocks overlap");
    seen |= b;
  }
  // The ∅ function forms its own singleton cell.
  sink(Interval(AntiChain::empty(ground), AntiChain::empty(ground)));
  AntiChain sigma = AntiChain::of(ground, blocks);
  std::vector<std::vector<AntiChain>> choices;
  for (Mask s : blocks)  // AMT(S) \ {∅} = [{∅}, {S}]
    choices.push_back(interval_members(AntiChain::unit(ground), AntiChain::single(ground, s)));
  emit_family_cells(
      ground, sigma, choices,
      [&](const CellFamily&, const Interval& cell) { sink(cell); }, nullptr, nullptr);
}

void decompose_interval(const AntiChain& lower, const AntiChain& upper, const AntiChain& sigma,
                        const IntervalSink& sink) {
  require_same_ground(lower, upper);
  require_same_ground(lower, sigma);
  if (lower.is_empty()) throw std::invalid_argument("lower bound must not be ∅");
  if (!leq(lower, upper)) throw std::invalid_argument("lower must be <= upper");
  if (!leq(sigma, upper)) throw std::invalid_argument("sigma must be <= upper");
  if (span(sigma) != span(upper)) throw std::invalid_argument("span(sigma) != span(upper)");
  std::vector<std::vector<AntiChain>> choices;
  for (Mask s : sigma.sets())
    choices.push_back(interval_members(project(lower, s), project(upper, s)));
  emit_family_cells(
      lower.ground(), sigma, choices,
      [&](const CellFamily&, const Interval& cell) { sink(cell); }, &lower, &upper);
}

std::vector<Mask> parse_blocks(const std::string& text, GroundSet ground) {
  std::vector<Mask> blocks;
  Mask current = 0;
  std::size_t pos = 0;
  auto flush = [&] {
    blocks.push_back(current);
    current = 0;
  };
  while (pos < text.size()) {
    if (text[pos] == '|') {
      flush();
      ++pos;
      continue;
    }
    if (text[pos] == ',' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("bad partition syntax near position " + std::to_string(pos));
    int e = std::stoi(text.substr(start, pos - start));
    if (!ground.contains(e)) throw ParseError("element " + std::to_string(e) + " outside ground set");
    current |= mask_of_element(e);
  }
  flush();
  return blocks;
}

}  // namespace amf
