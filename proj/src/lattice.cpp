#include "amf/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "amf/enumeration.hpp"
#include "amf/operators.hpp"

namespace amf {

std::vector<std::size_t> next_up(const FiniteDistributiveLattice& l, std::size_t x) {
  std::vector<std::size_t> above;
  for (std::size_t k = 0; k < l.size(); ++k)
    if (k != x && l.leq(x, k)) above.push_back(k);
  std::vector<std::size_t> out;
  for (std::size_t k : above) {
    bool minimal = true;
    for (std::size_t m : above)
      if (m != k && l.leq(m, k)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(k);
  }
  return out;
}

std::size_t unit_element(const FiniteDistributiveLattice& l) {
  std::vector<std::size_t> nb = next_up(l, l.bottom());
  if (nb.size() != 1) throw std::logic_error("lattice has no unique unit element");
  return nb.front();
}

std::size_t base_of(const FiniteDistributiveLattice& l, std::size_t x) {
  std::size_t acc = l.bottom();
  for (std::size_t k : next_up(l, unit_element(l))) acc = l.join(acc, k);
  return l.meet(x, acc);
}

std::size_t top_of(const FiniteDistributiveLattice& l, std::size_t x) {
  std::size_t bx = base_of(l, x);
  std::size_t acc = l.bottom();
  bool any = false;
  for (std::size_t k = 0; k < l.size(); ++k)
    if (base_of(l, k) == bx) {
      acc = any ? l.join(acc, k) : k;
      any = true;
    }
  return acc;
}

std::size_t generic_product(const FiniteDistributiveLattice& l, std::size_t a, std::size_t b) {
  std::size_t ta = top_of(l, a), tb = top_of(l, b);
  std::size_t acc = l.bottom();
  for (std::size_t k = 0; k < l.size(); ++k)
    if (l.leq(l.meet(ta, k), a) && l.leq(l.meet(tb, k), b)) acc = l.join(acc, k);
  return acc;
}

PartitionReport generic_partition_check(const FiniteDistributiveLattice& l, std::size_t a,
                                        std::size_t b) {
  PartitionReport report;
  std::size_t ba = base_of(l, a), ta = top_of(l, a);
  std::size_t bb = base_of(l, b), tb = top_of(l, b);
  std::size_t outer_lo = l.join(ba, bb);
  std::size_t outer_hi = generic_product(l, ta, tb);

  std::vector<std::size_t> as, bs;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l.leq(ba, k) && l.leq(k, ta)) as.push_back(k);
    if (l.leq(bb, k) && l.leq(k, tb)) bs.push_back(k);
  }
  // owner per element of the outer interval; size() marks "uncovered".
  std::vector<std::size_t> owner(l.size(), l.size());
  for (std::size_t ka : as)
    for (std::size_t kb : bs) {
      ++report.cells;
      std::size_t lo = l.join(ka, kb);
      std::size_t hi = generic_product(l, ka, kb);
      for (std::size_t g = 0; g < l.size(); ++g)
        if (l.leq(lo, g) && l.leq(g, hi)) {
          if (!(l.leq(outer_lo, g) && l.leq(g, outer_hi))) {
            report.pass = false;
            if (report.message.empty())
              report.message = "cell element " + l.describe(g) + " escapes the outer interval";
            continue;
          }
          if (owner[g] != l.size() && owner[g] != report.cells) {
            report.pass = false;
            if (report.message.empty())
              report.message = "element " + l.describe(g) + " covered by two cells";
          }
          owner[g] = report.cells;
        }
    }
  for (std::size_t g = 0; g < l.size(); ++g)
    if (l.leq(outer_lo, g) && l.leq(g, outer_hi)) {
      if (owner[g] == l.size()) {
        report.pass = false;
        if (report.message.empty())
          report.message = "element " + l.describe(g) + " not covered by any cell";
      } else {
        ++report.covered;
      }
    }
  return report;
}

PartitionReport check_lattice_axioms(const FiniteDistributiveLattice& l,
                                     std::size_t triple_budget) {
  PartitionReport report;
  std::size_t n = l.size();
  std::size_t stride = 1;
  while ((n / stride) * (n / stride) * (n / stride) > triple_budget && n / stride > 1)
    ++stride;  // stride-sample triples when the full cube is too large
  auto fail = [&](const std::string& what, std::size_t a, std::size_t b, std::size_t c) {
    report.pass = false;
    if (report.message.empty())
      report.message =
          what + " at (" + l.describe(a) + ", " + l.describe(b) + ", " + l.describe(c) + ")";
  };
  for (std::size_t a = 0; a < n; a += stride)
    for (std::size_t b = 0; b < n; b += stride) {
      if (l.meet(a, b) != l.meet(b, a)) fail("meet not commutative", a, b, b);
      if (l.join(a, b) != l.join(b, a)) fail("join not commutative", a, b, b);
      if (l.join(a, l.meet(a, b)) != a) fail("absorption broken", a, b, b);
      if (l.meet(a, l.join(a, b)) != a) fail("absorption broken", a, b, b);
      if (l.leq(a, b) != (l.meet(a, b) == a)) fail("order disagrees with meet", a, b, b);
      for (std::size_t c = 0; c < n; c += stride) {
        ++report.cells;
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c)) fail("meet not associative", a, b, c);
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          fail("not distributive", a, b, c);
      }
    }
  return report;
}

AmfLattice::AmfLattice(GroundSet ground) : ground_(ground) {
  if (ground.size() > 4) throw std::invalid_argument("AmfLattice limited to |ground| <= 4");
  elements_ = oracle_enumerate(ground);
}

std::size_t AmfLattice::index_of(const AntiChain& a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a, canonical_antichain_less);
  if (it == elements_.end() || !(*it == a)) throw std::invalid_argument("not a lattice element");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool AmfLattice::leq(std::size_t a, std::size_t b) const {
  return amf::leq(elements_[a], elements_[b]);
}
std::size_t AmfLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(amf::meet(elements_[a], elements_[b]));
}
std::size_t AmfLattice::join(std::size_t a, std::size_t b) const {
  return index_of(amf::join(elements_[a], elements_[b]));
}
std::size_t AmfLattice::bottom() const { return index_of(AntiChain::empty(ground_)); }
std::size_t AmfLattice::top() const {
  return index_of(AntiChain::single(ground_, ground_.mask()));
}
std::string AmfLattice::describe(std::size_t x) const { return format(elements_[x]); }

std::string format_young(const YoungDiagram& d) {
  if (d.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

YoungDiagram parse_young(const std::string& text) {
  if (text == "0" || text.empty()) return {};
  YoungDiagram d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    d.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] < d[i + 1]) throw ParseError("row lengths must be weakly decreasing");
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

bool young_leq(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

YoungDiagram young_meet(const YoungDiagram& a, const YoungDiagram& b) {
  YoungDiagram out;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    out.push_back(std::min(a[i], b[i]));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

YoungDiagram young_join(const YoungDiagram& a, const YoungDiagram& b) {
  YoungDiagram out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    int ra = i < a.size() ? a[i] : 0;
    int rb = i < b.size() ? b[i] : 0;
    out.push_back(std::max(ra, rb));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

YoungDiagram vs(int i) {
  if (i < 1) throw std::invalid_argument("strip size must be positive");
  return YoungDiagram(static_cast<std::size_t>(i), 1);
}

YoungDiagram hs(int j) {
  if (j < 1) throw std::invalid_argument("strip size must be positive");
  return {j};
}

YoungDiagram hook(int i, int j) {
  YoungDiagram d = vs(i);
  d[0] = j;
  return d;
}

YoungDiagram rectangle(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("rectangle sides must be positive");
  return YoungDiagram(static_cast<std::size_t>(i), j);
}

namespace {

void enumerate_box(int n_v, int n_h, YoungDiagram& prefix, int cap,
                   std::vector<YoungDiagram>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == n_v) return;
  for (int row = 1; row <= cap; ++row) {
    prefix.push_back(row);
    enumerate_box(n_v, n_h, prefix, row, out);
    prefix.pop_back();
  }
}

}  // namespace

YoungLattice::YoungLattice(int n_v, int n_h) : n_v_(n_v), n_h_(n_h) {
  if (n_v < 1 || n_h < 1) throw std::invalid_argument("box bounds must be positive");
  YoungDiagram prefix;
  enumerate_box(n_v, n_h, prefix, n_h, elements_);
  std::sort(elements_.begin(), elements_.end());
}

std::size_t YoungLattice::index_of(const YoungDiagram& d) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), d);
  if (it == elements_.end() || *it != d) throw std::invalid_argument("diagram outside the box");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool YoungLattice::leq(std::size_t a, std::size_t b) const {
  return young_leq(elements_[a], elements_[b]);
}
std::size_t YoungLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(young_meet(elements_[a], elements_[b]));
}
std::size_t YoungLattice::join(std::size_t a, std::size_t b) const {
  return index_of(young_join(elements_[a], elements_[b]));
}
std::size_t YoungLattice::bottom() const { return index_of({}); }
std::size_t YoungLattice::top() const { return index_of(rectangle(n_v_, n_h_)); }
std::string YoungLattice::describe(std::size_t x) const { return format_young(elements_[x]); }

PartitionReport young_partition(int n_v, int n_h) {
  PartitionReport report;
  YoungLattice box(n_v, n_h);
  for (const YoungDiagram& d : box.elements()) {
    if (d.empty()) continue;
    int i = static_cast<int>(d.size());
    int j = d[0];
    std::size_t hits = 0;
    for (int r = 1; r <= n_v; ++r)
      for (int c = 1; c <= n_h; ++c)
        if (young_leq(hook(r, c), d) && young_leq(d, rectangle(r, c))) {
          ++hits;
          if (r != i || c != j) {
            report.pass = false;
            if (report.message.empty())
              report.message = "diagram " + format_young(d) + " lands in a foreign cell";
          }
        }
    if (hits != 1) {
      report.pass = false;
      if (report.message.empty())
        report.message = "diagram " + format_young(d) + " covered " + std::to_string(hits) +
                         " times";
    } else {
      ++report.covered;
    }
  }
  report.cells = static_cast<std::size_t>(n_v) * static_cast<std::size_t>(n_h);
  return report;
}

}  // namespace amf
