#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "amf/antichain.hpp"

namespace amf {

// A finite distributive lattice with all elements materialized; the generic
// operators below work on element indices by exhaustive evaluation.
class FiniteDistributiveLattice {
 public:
  virtual ~FiniteDistributiveLattice() = default;

  virtual std::size_t size() const = 0;
  virtual bool leq(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t meet(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t join(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t bottom() const = 0;
  virtual std::size_t top() const = 0;
  virtual std::string describe(std::size_t x) const = 0;
};

// Immediate successors: minimal strict upper bounds, by scan.
std::vector<std::size_t> next_up(const FiniteDistributiveLattice& l, std::size_t x);

// The unit 1: the unique immediate successor of the bottom element.
std::size_t unit_element(const FiniteDistributiveLattice& l);

// base(x) = x ∧ (∨ Next(1))
std::size_t base_of(const FiniteDistributiveLattice& l, std::size_t x);

// top(x) = ∨ {κ | base(κ) = base(x)}
std::size_t top_of(const FiniteDistributiveLattice& l, std::size_t x);

// a × b = ∨ {κ | top(a) ∧ κ <= a and top(b) ∧ κ <= b}
std::size_t generic_product(const FiniteDistributiveLattice& l, std::size_t a, std::size_t b);

struct PartitionReport {
  bool pass = true;
  std::size_t cells = 0;          // index pairs (κ_a, κ_b) examined
  std::size_t covered = 0;        // elements of the outer interval covered
  std::string message;            // first violation, with witnesses
};

// Verifies the generic partition of [base(a)∨base(b), top(a)×top(b)] into
// intervals [κ_a∨κ_b, κ_a×κ_b]; violations become report content.
PartitionReport generic_partition_check(const FiniteDistributiveLattice& l, std::size_t a,
                                        std::size_t b);

// Lattice-axiom and distributivity spot checks over sampled triples
// (exhaustive when size^3 stays below the given budget).
PartitionReport check_lattice_axioms(const FiniteDistributiveLattice& l,
                                     std::size_t triple_budget = 200000);

// AMT over a ground set, as a generic-lattice instance (|ground| <= 4).
class AmfLattice : public FiniteDistributiveLattice {
 public:
  explicit AmfLattice(GroundSet ground);

  std::size_t size() const override { return elements_.size(); }
  bool leq(std::size_t a, std::size_t b) const override;
  std::size_t meet(std::size_t a, std::size_t b) const override;
  std::size_t join(std::size_t a, std::size_t b) const override;
  std::size_t bottom() const override;
  std::size_t top() const override;
  std::string describe(std::size_t x) const override;

  const std::vector<AntiChain>& elements() const { return elements_; }
  std::size_t index_of(const AntiChain& a) const;

 private:
  GroundSet ground_;
  std::vector<AntiChain> elements_;  // canonical order
};

// A partition bounded by an n_v x n_h box: weakly decreasing row lengths,
// no trailing zeros.
using YoungDiagram = std::vector<int>;

std::string format_young(const YoungDiagram& d);  // "3,1,1"; empty diagram "0"
YoungDiagram parse_young(const std::string& text);

bool young_leq(const YoungDiagram& a, const YoungDiagram& b);
YoungDiagram young_meet(const YoungDiagram& a, const YoungDiagram& b);
YoungDiagram young_join(const YoungDiagram& a, const YoungDiagram& b);

YoungDiagram vs(int i);                  // vertical strip (1^i)
YoungDiagram hs(int j);                  // horizontal strip (j)
YoungDiagram hook(int i, int j);         // vs_i ∨ hs_j = (j, 1^{i-1})
YoungDiagram rectangle(int i, int j);    // vs_i × hs_j = (j^i)

class YoungLattice : public FiniteDistributiveLattice {
 public:
  YoungLattice(int n_v, int n_h);

  std::size_t size() const override { return elements_.size(); }
  bool leq(std::size_t a, std::size_t b) const override;
  std::size_t meet(std::size_t a, std::size_t b) const override;
  std::size_t join(std::size_t a, std::size_t b) const override;
  std::size_t bottom() const override;
  std::size_t top() const override;
  std::string describe(std::size_t x) const override;

  int rows_bound() const { return n_v_; }
  int cols_bound() const { return n_h_; }
  const std::vector<YoungDiagram>& elements() const { return elements_; }
  std::size_t index_of(const YoungDiagram& d) const;

 private:
  int n_v_, n_h_;
  std::vector<YoungDiagram> elements_;
};

// Verifies that every nonempty diagram in the box lies in exactly one
// interval [hook(i,j), rectangle(i,j)] with i its row count, j its first row.
PartitionReport young_partition(int n_v, int n_h);

}  // namespace amf
