#include "amf/antichain.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace amf {

GroundSet GroundSet::prefix(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("ground set size out of range");
  return GroundSet(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
}

GroundSet GroundSet::range(int lo, int hi) {
  if (lo < 1 || hi > 64 || lo > hi + 1) throw std::invalid_argument("bad ground set range");
  Mask m = 0;
  for (int e = lo; e <= hi; ++e) m |= mask_of_element(e);
  return GroundSet(m);
}

GroundSet GroundSet::of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw std::invalid_argument("ground element out of range");
    if (m & mask_of_element(e)) throw std::invalid_argument("duplicate ground element");
    m |= mask_of_element(e);
  }
  return GroundSet(m);
}

std::vector<int> GroundSet::elements() const {
  std::vector<int> out;
  for (int e = 1; e <= 64; ++e)
    if (mask_ & mask_of_element(e)) out.push_back(e);
  return out;
}

std::vector<Mask> sup_family(std::vector<Mask> family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Mask> maximal;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    // Strict supersets have strictly larger cardinality, so scan forward.
    for (std::size_t j = i + 1; j < family.size() && !dominated; ++j)
      dominated = family[i] != family[j] && subset_of(family[i], family[j]);
    if (!dominated) maximal.push_back(family[i]);
  }
  return maximal;
}

AntiChain AntiChain::supremum(GroundSet ground, std::vector<Mask> family) {
  for (Mask s : family)
    if (!subset_of(s, ground.mask())) throw std::invalid_argument("set outside ground set");
  AntiChain a(ground);
  a.sets_ = sup_family(std::move(family));
  return a;
}

AntiChain AntiChain::of(GroundSet ground, std::vector<Mask> family) {
  std::size_t given = family.size();
  AntiChain a = supremum(ground, std::move(family));
  if (a.sets_.size() != given) throw std::invalid_argument("family is not an antichain");
  return a;
}

AntiChain AntiChain::all_singletons(GroundSet ground, Mask n) {
  std::vector<Mask> sets;
  for (Mask b = n; b;) {
    Mask low = b & (~b + 1);
    sets.push_back(low);
    b ^= low;
  }
  return of(ground, std::move(sets));
}

AntiChain AntiChain::with_ground(GroundSet g) const {
  AntiChain out(g);
  for (Mask s : sets_)
    if (!subset_of(s, g.mask())) throw std::invalid_argument("set outside new ground set");
  out.sets_ = sets_;
  return out;
}

MonotoneFamily MonotoneFamily::of(GroundSet ground, std::vector<Mask> family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  MonotoneFamily f(ground);
  for (Mask s : family)
    if (!subset_of(s, ground.mask())) throw std::invalid_argument("set outside ground set");
  f.sets_ = std::move(family);
  // Down-closure: every subset obtained by dropping one element is present.
  for (Mask s : f.sets_)
    for (Mask b = s; b;) {
      Mask low = b & (~b + 1);
      b ^= low;
      if (!f.contains(s ^ low)) throw std::invalid_argument("family is not down-closed");
    }
  return f;
}

bool MonotoneFamily::contains(Mask s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
}

void require_same_ground(const AntiChain& a, const AntiChain& b) {
  if (!(a.ground() == b.ground())) throw GroundMismatchError("ground set mismatch");
}

bool leq(const AntiChain& a, const AntiChain& b) {
  require_same_ground(a, b);
  for (Mask s : a.sets()) {
    bool dominated = false;
    for (Mask t : b.sets())
      if (subset_of(s, t)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool lt(const AntiChain& a, const AntiChain& b) {
  if (!leq(a, b)) return false;
  for (Mask t : b.sets())
    if (std::find(a.sets().begin(), a.sets().end(), t) == a.sets().end()) return true;
  return false;
}

bool leq(const MonotoneFamily& f, const MonotoneFamily& g) {
  if (!(f.ground() == g.ground())) throw GroundMismatchError("ground set mismatch");
  for (Mask s : f.sets())
    if (!g.contains(s)) return false;
  return true;
}

MonotoneFamily to_monotone(const AntiChain& a) {
  std::unordered_set<Mask> seen;
  for (Mask s : a.sets())
    for (Mask sub = s;; sub = (sub - 1) & s) {
      seen.insert(sub);
      if (sub == 0) break;
    }
  std::vector<Mask> sets(seen.begin(), seen.end());
  std::sort(sets.begin(), sets.end(), canonical_less);
  return MonotoneFamily::of(a.ground(), std::move(sets));
}

AntiChain to_antichain(const MonotoneFamily& f) {
  return AntiChain::supremum(f.ground(), f.sets());
}

namespace {

bool dominated_in(Mask s, const AntiChain& a) {
  for (Mask t : a.sets())
    if (subset_of(s, t)) return true;
  return false;
}

// Candidate new set per the immediate-successor lemma: S itself not yet
// dominated, every proper subset dominated (checking the one-element-removed
// subsets suffices by transitivity).
bool successor_candidate(Mask s, const AntiChain& a) {
  if (dominated_in(s, a)) return false;
  for (Mask b = s; b;) {
    Mask low = b & (~b + 1);
    b ^= low;
    if (!dominated_in(s ^ low, a)) return false;
  }
  return true;
}

}  // namespace

std::vector<AntiChain> immediate_successors(const AntiChain& a) {
  std::vector<AntiChain> out;
  Mask g = a.ground().mask();
  for (Mask s = g;; s = (s - 1) & g) {
    if (successor_candidate(s, a)) {
      std::vector<Mask> family = a.sets();
      family.push_back(s);
      out.push_back(AntiChain::supremum(a.ground(), std::move(family)));
    }
    if (s == 0) break;
  }
  return out;
}

std::vector<MonotoneFamily> immediate_successors_mono(const MonotoneFamily& f) {
  std::vector<MonotoneFamily> out;
  Mask g = f.ground().mask();
  for (Mask s = g;; s = (s - 1) & g) {
    bool ok = !f.contains(s);
    if (ok)
      for (Mask b = s; ok && b;) {
        Mask low = b & (~b + 1);
        b ^= low;
        ok = f.contains(s ^ low);
      }
    if (ok) {
      std::vector<Mask> sets = f.sets();
      sets.push_back(s);
      out.push_back(MonotoneFamily::of(f.ground(), std::move(sets)));
    }
    if (s == 0) break;
  }
  return out;
}

bool is_immediate_successor(const AntiChain& a, const AntiChain& b) {
  if (!lt(a, b)) return false;
  // b \ a must be a single set S with all proper subsets dominated in a.
  std::vector<Mask> fresh;
  for (Mask t : b.sets())
    if (std::find(a.sets().begin(), a.sets().end(), t) == a.sets().end()) fresh.push_back(t);
  if (fresh.size() != 1) return false;
  Mask s = fresh[0];
  for (Mask lo = s; lo;) {
    Mask low = lo & (~lo + 1);
    lo ^= low;
    if (!dominated_in(s ^ low, a)) return false;
  }
  return true;
}

std::string format_set(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e = 1; e <= 64; ++e)
    if (s & mask_of_element(e)) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
  out += '}';
  return out;
}

std::string format(const AntiChain& a) {
  std::string out = "{";
  bool first = true;
  for (Mask s : a.sets()) {
    if (!first) out += ',';
    out += format_set(s);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos));
    return std::stoi(text.substr(start, pos - start));
  }
};

Mask parse_set(Cursor& cur, GroundSet ground) {
  if (!cur.eat('{')) throw ParseError("expected '{' in set");
  Mask s = 0;
  int prev = 0;
  if (cur.peek() != '}')
    do {
      int e = cur.integer();
      if (e < 1 || e > 64 || !ground.contains(e))
        throw ParseError("element " + std::to_string(e) + " outside ground set");
      if (e <= prev) throw ParseError("set elements must be ascending");
      prev = e;
      s |= mask_of_element(e);
    } while (cur.eat(','));
  if (!cur.eat('}')) throw ParseError("expected '}' in set");
  return s;
}

}  // namespace

AntiChain parse(const std::string& text, GroundSet ground, bool normalize) {
  Cursor cur{text};
  if (!cur.eat('{')) throw ParseError("expected '{'");
  std::vector<Mask> family;
  if (cur.peek() != '}')
    do {
      family.push_back(parse_set(cur, ground));
    } while (cur.eat(','));
  if (!cur.eat('}')) throw ParseError("expected '}'");
  cur.skip_ws();
  if (cur.pos != text.size()) throw ParseError("trailing characters after antichain");
  if (normalize) return AntiChain::supremum(ground, std::move(family));
  if (!std::is_sorted(family.begin(), family.end(), canonical_less))
    throw ParseError("sets not in canonical order (use normalize to accept)");
  try {
    return AntiChain::of(ground, std::move(family));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());  // non-antichain input
  }
}

}  // namespace amf
