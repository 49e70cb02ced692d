#include "amf/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace amf {

std::vector<AntiChain> oracle_enumerate(GroundSet ground) {
  if (ground.size() > 5) throw std::invalid_argument("oracle bound: |ground| <= 5");
  std::unordered_set<AntiChain, AntiChainHash> seen;
  std::vector<AntiChain> frontier{AntiChain::empty(ground)};
  seen.insert(frontier.front());
  std::vector<AntiChain> out;
  while (!frontier.empty()) {
    std::vector<AntiChain> next;
    for (const AntiChain& a : frontier) {
      out.push_back(a);
      for (AntiChain& b : immediate_successors(a))
        if (seen.insert(b).second) next.push_back(std::move(b));
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_antichain_less);
  return out;
}

bool canonical_antichain_less(const AntiChain& a, const AntiChain& b) {
  return std::lexicographical_compare(a.sets().begin(), a.sets().end(), b.sets().begin(),
                                      b.sets().end(), canonical_less);
}

namespace {

constexpr std::uint64_t kNoParent = std::numeric_limits<std::uint64_t>::max();

struct Ctx {
  SplitPolicy policy;
  EnumStats* stats;
  const ElementSink* sink;  // null when counting only
};

// --- Counting in the down-set word domain ---
// For spans of at most 6 elements the whole down-set of an antichain fits in
// one 64-bit word (bit s = compressed subset s is present). Order is word
// containment and distance is popcount of the XOR, so the interval recursion
// can run entirely on words, never materialising antichain objects.

struct WordCtx {
  int bits;  // |span| of the top-level upper bound
  EnumStats* stats;
};

// Word whose bit s is set iff subset s is contained in `part`.
std::uint64_t submask_word(int bits, Mask part) {
  std::uint64_t out = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s)
    if (!(s & ~part)) out |= std::uint64_t{1} << s;
  return out;
}

// Down-set of the cylinder over `part`: bit s copies bit (s ∩ part) of w.
std::uint64_t expand_word(int bits, std::uint64_t w, Mask part) {
  std::uint64_t out = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s)
    if (w >> (s & part) & 1) out |= std::uint64_t{1} << s;
  return out;
}

Mask word_span(std::uint64_t w) {
  Mask sp = 0;
  while (w) {
    sp |= static_cast<Mask>(std::countr_zero(w));
    w &= w - 1;
  }
  return sp;
}

// Bipartition of span(upper) with both projected distances positive,
// preferring the most balanced descent. Throws when none exists.
std::pair<Mask, Mask> word_split(const WordCtx& c, std::uint64_t wl, std::uint64_t wu) {
  Mask sp = word_span(wu);
  Mask anchor = sp & (~sp + 1);  // lowest span element stays on the X side
  Mask rest = sp & ~anchor;
  int best_min = 0, best_gap = 0;
  Mask best_x = 0;
  Mask one_sided = 0;  // fallback: only one projection moves, keep it on the X side
  for (Mask t = rest;; t = (t - 1) & rest) {
    Mask x = anchor | t;
    if (x != sp) {
      Mask y = sp & ~x;
      std::uint64_t sx = submask_word(c.bits, x);
      std::uint64_t sy = submask_word(c.bits, y);
      int dx = popcount(static_cast<Mask>((wl ^ wu) & sx));
      int dy = popcount(static_cast<Mask>((wl ^ wu) & sy));
      int mn = std::min(dx, dy), gap = dx < dy ? dy - dx : dx - dy;
      if (mn >= 1 && (!best_x || mn > best_min || (mn == best_min && gap < best_gap))) {
        best_min = mn;
        best_gap = gap;
        best_x = x;
      }
      if (!one_sided && dx + dy >= 1) one_sided = dx >= 1 ? x : y;
    }
    if (t == 0) break;
  }
  if (!best_x) best_x = one_sided;
  if (!best_x) throw std::logic_error("no descent split outside the base cases");
  return {best_x, sp & ~best_x};
}

// Counts [wl, wu]; when `out` is given, also appends every member word.
BigCount count_words(const WordCtx& c, std::uint64_t wl, std::uint64_t wu,
                     std::uint64_t parent_distance, std::vector<std::uint64_t>* out) {
  if (c.stats) c.stats->calls.fetch_add(1, std::memory_order_relaxed);
  if (wl & ~wu) return 0;
  std::uint64_t d = popcount(static_cast<Mask>(wl ^ wu));
  if (d >= parent_distance)
    throw std::logic_error("interval recursion failed to shrink a fragment");
  if (d == 0) {
    if (out) out->push_back(wl);
    return 1;
  }
  if (d == 1) {
    if (out) {
      out->push_back(wl);
      out->push_back(wu);
    }
    return 2;
  }
  auto [x, y] = word_split(c, wl, wu);
  std::uint64_t sx = submask_word(c.bits, x);
  std::uint64_t sy = submask_word(c.bits, y);
  std::vector<std::uint64_t> ks, ls;
  count_words(c, wl & sx, wu & sx, kNoParent, &ks);
  count_words(c, wl & sy, wu & sy, kNoParent, &ls);
  std::vector<std::uint64_t> ek(ks.size()), el(ls.size());
  for (std::size_t i = 0; i < ks.size(); ++i) ek[i] = expand_word(c.bits, ks[i], x);
  for (std::size_t j = 0; j < ls.size(); ++j) el[j] = expand_word(c.bits, ls[j], y);
  BigCount total = 0;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (c.stats) c.stats->fragments.fetch_add(1, std::memory_order_relaxed);
      total += count_words(c, ks[i] | ls[j] | wl, ek[i] & el[j] & wu, d, out);
    }
  return total;
}


void emit(const Ctx& ctx, const AntiChain& a) {
  if (ctx.sink && *ctx.sink) (*ctx.sink)(a);
}

// Core of the recursive listing. Bounds are nonempty antichains over the
// same ground set. parent_distance enforces strict descent across fragments.
BigCount recurse(const AntiChain& lower, const AntiChain& upper, std::uint64_t parent_distance,
                 const Ctx& ctx) {
  std::uint64_t dist;
  Mask sp_u = span(upper);
  if (!subset_of(span(lower), sp_u)) {
    if (ctx.stats) ctx.stats->calls.fetch_add(1, std::memory_order_relaxed);
    return 0;
  }
  bool listing = ctx.sink && *ctx.sink;
  if (popcount(sp_u) <= 6) {
    // Down-sets as subset-indexed words: containment is the order relation.
    std::uint64_t wl = detail::downset_word(lower, sp_u);
    std::uint64_t wu = detail::downset_word(upper, sp_u);
    if (!listing) {
      WordCtx wc{popcount(sp_u), ctx.stats};
      return count_words(wc, wl, wu, parent_distance, nullptr);
    }
    if (ctx.stats) ctx.stats->calls.fetch_add(1, std::memory_order_relaxed);
    if (wl & ~wu) return 0;
    dist = popcount(static_cast<Mask>(wl ^ wu));
  } else {
    if (ctx.stats) ctx.stats->calls.fetch_add(1, std::memory_order_relaxed);
    if (!leq(lower, upper)) return 0;
    dist = rank(upper) - rank(lower);
  }
  if (dist >= parent_distance)
    throw std::logic_error("interval recursion failed to shrink a fragment");
  if (dist == 0) {  // lower == upper
    emit(ctx, lower);
    return 1;
  }
  if (dist == 1) {  // lower <_im upper, the two-element base case
    emit(ctx, lower);
    emit(ctx, upper);
    return 2;
  }
  auto split = find_descent_split(lower, upper, ctx.policy);
  if (!split) throw std::logic_error("no descent split outside the base cases");
  auto [x, y] = *split;
  std::vector<AntiChain> kappas, lambdas;
  {
    ElementSink grab = [&kappas](const AntiChain& a) { kappas.push_back(a); };
    Ctx c{ctx.policy, ctx.stats, &grab};
    recurse(project(lower, x), project(upper, x), kNoParent, c);
  }
  {
    ElementSink grab = [&lambdas](const AntiChain& a) { lambdas.push_back(a); };
    Ctx c{ctx.policy, ctx.stats, &grab};
    recurse(project(lower, y), project(upper, y), kNoParent, c);
  }
  BigCount total = 0;
  for (const AntiChain& k : kappas)
    for (const AntiChain& l : lambdas) {
      if (ctx.stats) ctx.stats->fragments.fetch_add(1, std::memory_order_relaxed);
      AntiChain frag_lower = join(join(k, l), lower);
      AntiChain frag_upper = meet(external_product(k, l), upper);
      total += recurse(frag_lower, frag_upper, dist, ctx);
    }
  return total;
}

// Distributes top-level fragments over a worker pool; counts combine by
// associative addition so the result matches the sequential run.
BigCount recurse_parallel(const AntiChain& lower, const AntiChain& upper, const Ctx& ctx,
                          int jobs) {
  if (ctx.stats) ctx.stats->calls.fetch_add(1, std::memory_order_relaxed);
  if (!subset_of(span(lower), span(upper)) || !leq(lower, upper)) return 0;
  std::uint64_t dist = rank(upper) - rank(lower);
  if (dist == 0) {
    emit(ctx, lower);
    return 1;
  }
  if (dist == 1) {
    emit(ctx, lower);
    emit(ctx, upper);
    return 2;
  }
  auto split = find_descent_split(lower, upper, ctx.policy);
  if (!split) throw std::logic_error("no descent split outside the base cases");
  auto [x, y] = *split;
  std::vector<AntiChain> kappas, lambdas;
  {
    ElementSink grab = [&kappas](const AntiChain& a) { kappas.push_back(a); };
    Ctx c{ctx.policy, ctx.stats, &grab};
    recurse(project(lower, x), project(upper, x), kNoParent, c);
  }
  {
    ElementSink grab = [&lambdas](const AntiChain& a) { lambdas.push_back(a); };
    Ctx c{ctx.policy, ctx.stats, &grab};
    recurse(project(lower, y), project(upper, y), kNoParent, c);
  }
  struct Fragment {
    AntiChain lower, upper;
  };
  std::vector<Fragment> fragments;
  fragments.reserve(kappas.size() * lambdas.size());
  for (const AntiChain& k : kappas)
    for (const AntiChain& l : lambdas) {
      if (ctx.stats) ctx.stats->fragments.fetch_add(1, std::memory_order_relaxed);
      fragments.push_back({join(join(k, l), lower), meet(external_product(k, l), upper)});
    }
  std::vector<BigCount> partial(fragments.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = cursor.fetch_add(1); i < fragments.size(); i = cursor.fetch_add(1))
        partial[i] = recurse(fragments[i].lower, fragments[i].upper, dist, ctx);
    } catch (...) {
      std::lock_guard<std::mutex> hold(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  BigCount total = 0;
  for (const BigCount& p : partial) total += p;
  return total;
}

BigCount run(const AntiChain& lower, const AntiChain& upper, const Ctx& ctx, int jobs) {
  if (jobs > 1) return recurse_parallel(lower, upper, ctx, jobs);
  return recurse(lower, upper, kNoParent, ctx);
}

}  // namespace

BigCount list_interval(const AntiChain& lower, const AntiChain& upper, const ElementSink& sink,
                       const EnumOptions& opts) {
  require_same_ground(lower, upper);
  Ctx ctx{opts.policy, opts.stats, &sink};
  if (lower.is_empty()) {
    // ∅ is the global minimum: [∅, β] = {∅} ∪ [{∅}, β].
    emit(ctx, lower);
    if (upper.is_empty()) return 1;
    return 1 + run(AntiChain::unit(lower.ground()), upper, ctx, opts.jobs);
  }
  if (upper.is_empty()) return 0;
  return run(lower, upper, ctx, opts.jobs);
}

BigCount count_interval(const AntiChain& lower, const AntiChain& upper, const EnumOptions& opts) {
  return list_interval(lower, upper, nullptr, opts);
}

std::vector<AntiChain> interval_members(const AntiChain& lower, const AntiChain& upper,
                                        const EnumOptions& opts) {
  std::vector<AntiChain> out;
  EnumOptions sequential = opts;
  sequential.jobs = 1;
  list_interval(lower, upper, [&out](const AntiChain& a) { out.push_back(a); }, sequential);
  std::sort(out.begin(), out.end(), canonical_antichain_less);
  return out;
}

namespace {

BigCount binomial(int n, int k) {
  BigCount num = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    num /= i + 1;
  }
  return num;
}

}  // namespace

BigCount upsilon_count(int n, int n1, const EnumOptions& opts) {
  if (n1 < 1 || n1 >= n) throw std::invalid_argument("need 1 <= n1 < n");
  GroundSet ground = GroundSet::prefix(n);
  Mask left = GroundSet::range(1, n1).mask();
  Mask right = GroundSet::range(n1 + 1, n).mask();
  std::vector<AntiChain> alphas =
      interval_members(alpha_of(ground, left), omega_of(ground, left), opts);
  std::vector<AntiChain> betas =
      interval_members(alpha_of(ground, right), omega_of(ground, right), opts);
  BigCount total = 0;
  for (const AntiChain& a : alphas)
    for (const AntiChain& b : betas)
      total += count_interval(join(a, b), external_product(a, b), opts);
  return total;
}

namespace {

BigCount upsilon_size(int k, const EnumOptions& opts) {
  if (k <= 1) return 1;  // Upsilon_∅ = {{∅}}, Upsilon_{1} = {{{1}}}
  return upsilon_count(k, k / 2, opts);
}

}  // namespace

BigCount dedekind_span_expansion(int n, const EnumOptions& opts) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  BigCount total = 1;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * upsilon_size(k, opts);
  return total;
}

BigCount dedekind_interval_recursion(int n, int n1, const EnumOptions& opts) {
  if (n1 < 1 || n1 >= n) throw std::invalid_argument("need 1 <= n1 < n");
  GroundSet ground = GroundSet::prefix(n);
  Mask left = GroundSet::range(1, n1).mask();
  Mask right = GroundSet::range(n1 + 1, n).mask();
  // AMT(S) \ {∅} = [{∅}, {S}]
  std::vector<AntiChain> alphas =
      interval_members(AntiChain::unit(ground), AntiChain::single(ground, left), opts);
  std::vector<AntiChain> betas =
      interval_members(AntiChain::unit(ground), AntiChain::single(ground, right), opts);
  BigCount total = 1;
  for (const AntiChain& a : alphas)
    for (const AntiChain& b : betas)
      total += count_interval(join(a, b), external_product(a, b), opts);
  return total;
}

BigCount dedekind_one_element(int n, const EnumOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  GroundSet ground = GroundSet::prefix(n - 1);
  Mask all = ground.mask();
  std::vector<AntiChain> alphas;
  alphas.push_back(AntiChain::empty(ground));
  for (AntiChain& a :
       interval_members(AntiChain::unit(ground), AntiChain::single(ground, all), EnumOptions{}))
    alphas.push_back(std::move(a));
  BigCount total = 0;
  for (const AntiChain& a : alphas) total += count_interval(AntiChain::empty(ground), a, opts);
  return total;
}

}  // namespace amf
