#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace amf {

// A subset of the ground set: bit i-1 <-> element i. Ground sets are
// limited to elements 1..64 so one machine word always suffices.
using Mask = std::uint64_t;

constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask mask_of_element(int e) { return Mask{1} << (e - 1); }

// Canonical member order: cardinality first, then numeric mask value.
inline bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

class GroundMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite ground set of positive integers <= 64.
class GroundSet {
 public:
  GroundSet() : mask_(0) {}
  explicit GroundSet(Mask mask) : mask_(mask) {}

  // {1, ..., n}
  static GroundSet prefix(int n);
  // {lo, ..., hi}
  static GroundSet range(int lo, int hi);
  static GroundSet of(const std::vector<int>& elements);

  Mask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool contains(int e) const { return e >= 1 && e <= 64 && (mask_ & mask_of_element(e)); }
  std::vector<int> elements() const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  Mask mask_;
};

// An antimonotonic function: a family of pairwise incomparable subsets of
// the ground set, kept in canonical order. The empty family and the family
// {∅} are distinct values.
class AntiChain {
 public:
  AntiChain() = default;
  explicit AntiChain(GroundSet ground) : ground_(ground) {}

  // Builds from an arbitrary family by taking maximal elements (sup).
  static AntiChain supremum(GroundSet ground, std::vector<Mask> family);
  // Builds from a family that must already be an antichain.
  static AntiChain of(GroundSet ground, std::vector<Mask> family);

  static AntiChain empty(GroundSet ground) { return AntiChain(ground); }
  static AntiChain unit(GroundSet ground) { return of(ground, {Mask{0}}); }
  // alpha_N = {{x} | x in N}
  static AntiChain all_singletons(GroundSet ground, Mask n);
  // omega_N = {N}
  static AntiChain single(GroundSet ground, Mask set) { return of(ground, {set}); }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& sets() const { return sets_; }
  bool is_empty() const { return sets_.empty(); }
  std::size_t size() const { return sets_.size(); }

  // Same masks reinterpreted over a larger ground set.
  AntiChain with_ground(GroundSet g) const;

  friend bool operator==(const AntiChain&, const AntiChain&) = default;

 private:
  std::vector<Mask> sets_;
  GroundSet ground_;
};

// A monotonic function: a down-closed family of subsets, materialized.
class MonotoneFamily {
 public:
  MonotoneFamily() = default;
  explicit MonotoneFamily(GroundSet ground) : ground_(ground) {}
  static MonotoneFamily of(GroundSet ground, std::vector<Mask> family);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Mask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(Mask s) const;

  friend bool operator==(const MonotoneFamily&, const MonotoneFamily&) = default;

 private:
  std::vector<Mask> sets_;  // canonical order
  GroundSet ground_;
};

// sup: maximal elements of a family (Eq. removing dominated members).
std::vector<Mask> sup_family(std::vector<Mask> family);

// Induced ordering: a <= b iff every member of a has a superset in b.
bool leq(const AntiChain& a, const AntiChain& b);
bool lt(const AntiChain& a, const AntiChain& b);

bool leq(const MonotoneFamily& f, const MonotoneFamily& g);

// The mt/amt bijection.
MonotoneFamily to_monotone(const AntiChain& a);
AntiChain to_antichain(const MonotoneFamily& f);

// Covering relation: all beta with beta >_im a.
std::vector<AntiChain> immediate_successors(const AntiChain& a);
std::vector<MonotoneFamily> immediate_successors_mono(const MonotoneFamily& f);
bool is_immediate_successor(const AntiChain& a, const AntiChain& b);  // a <_im b

// Canonical text grammar: "{{1,2},{3}}"; whitespace ignored on input.
std::string format(const AntiChain& a);
AntiChain parse(const std::string& text, GroundSet ground, bool normalize = false);

// Mask <-> "{1,2}" helpers shared by the interval/CLI layers.
std::string format_set(Mask s);

struct AntiChainHash {
  std::size_t operator()(const AntiChain& a) const {
    std::size_t h = std::hash<Mask>{}(a.ground().mask());
    for (Mask s : a.sets()) h = h * 1099511628211ULL + std::hash<Mask>{}(s);
    return h;
  }
};

void require_same_ground(const AntiChain& a, const AntiChain& b);

}  // namespace amf
