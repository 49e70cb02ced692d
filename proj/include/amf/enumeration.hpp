#pragma once

#include <atomic>
#include <cstdint>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "amf/decomposition.hpp"

namespace amf {

// Exact counts; |AMT(8)| already exceeds 64 bits.
using BigCount = boost::multiprecision::cpp_int;

struct EnumStats {
  std::atomic<std::uint64_t> calls{0};      // recursive interval visits
  std::atomic<std::uint64_t> fragments{0};  // (kappa, lambda) fragments built
};

struct EnumOptions {
  SplitPolicy policy = SplitPolicy::kBalanced;
  int jobs = 1;  // fragments at the top recursion level go to a worker pool
  EnumStats* stats = nullptr;
};

using ElementSink = std::function<void(const AntiChain&)>;

// Every element of AMT over `ground`, by breadth-first closure under
// immediate_successors from ∅. Practical oracle bound: |ground| <= 5.
std::vector<AntiChain> oracle_enumerate(GroundSet ground);

// Deterministic total order used for sorted listings.
bool canonical_antichain_less(const AntiChain& a, const AntiChain& b);

// Recursive interval listing. Emits every element of [lower, upper] exactly
// once into `sink` (may be null for counting) and returns the count. Bounds
// may be ∅; the ∅ lower bound is peeled off as 1 + |[{∅}, upper]|. With
// jobs > 1 the emission order is unspecified.
BigCount list_interval(const AntiChain& lower, const AntiChain& upper, const ElementSink& sink,
                       const EnumOptions& opts = {});

BigCount count_interval(const AntiChain& lower, const AntiChain& upper,
                        const EnumOptions& opts = {});

// Members of [lower, upper] in canonical order.
std::vector<AntiChain> interval_members(const AntiChain& lower, const AntiChain& upper,
                                        const EnumOptions& opts = {});

// |Upsilon_{1..n}| by splitting at n1 (1 <= n1 < n).
BigCount upsilon_count(int n, int n1, const EnumOptions& opts = {});

// |AMT(n)| = 1 + sum_k C(n,k) |Upsilon_{1..k}|.
BigCount dedekind_span_expansion(int n, const EnumOptions& opts = {});

// |AMT(n)| = 1 + sum over AMT(1,n1)\∅ x AMT(n1+1,n)\∅ of |[a∨b, a×b]|.
BigCount dedekind_interval_recursion(int n, int n1, const EnumOptions& opts = {});

// |AMT(n)| = sum over a in AMT(1,n-1) of |[∅, a]|.
BigCount dedekind_one_element(int n, const EnumOptions& opts = {});

}  // namespace amf
