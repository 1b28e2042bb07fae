#include "oshlab/sperner.hpp"

#include <algorithm>
#include <bit>

namespace oshlab {

namespace {

int ceil_div(int x, int y) { return (x + y - 1) / y; }

void guard_ground(int ground, int cap) {
  if (ground > kMaxGroundSize || ground > cap) {
    throw Error(Errc::kGroundTooLarge,
                "construction needs ground size " + std::to_string(ground) +
                    " exceeding cap " +
                    std::to_string(std::min(cap, kMaxGroundSize)));
  }
}

// Subsets of [lo, hi] ordered by size descending, then bitmask ascending.
// [∅] when lo > hi. This ordering makes the set attached to a tail of size s
// shrink (weakly) as s grows, which is what caps the chain lengths.
std::vector<std::uint64_t> block_pattern_list(int lo, int hi) {
  int width = hi - lo + 1;
  if (width <= 0) return {0};
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
    out.push_back(v << (lo - 1));
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  return out;
}

void require_exact(const SpernerWitness& w) {
  int k = w.target.count();
  if (w.family.size() != (std::size_t{1} << k)) {
    throw Error(Errc::kInvalidParams,
                "witness family has " + std::to_string(w.family.size()) +
                    " members; target " + to_string(w.target) + " needs " +
                    std::to_string(std::size_t{1} << k));
  }
}

void require_normalized(const SpernerWitness& w) {
  int want = w.target.empty() ? 1 : w.target.max_element();
  if (w.family.n != want) {
    throw Error(Errc::kWitnessNotNormalized,
                "witness ground is " + std::to_string(w.family.n) +
                    ", expected " + std::to_string(want) + " for target " +
                    to_string(w.target));
  }
}

// Final maximal run [first, last] of a nonempty target.
std::pair<int, int> final_run(ElementSet target) {
  int last = target.max_element();
  int first = last;
  while (first > 1 && target.has(first - 1)) --first;
  return {first, last};
}

// Target [g+1, g+b] at ground g+b; every subset A' of the target joins the
// pattern set indexed by |A'| / ell.
SpernerWitness single_block_span(int g, int b, int ell, int cap) {
  if (g < 0 || b < 1 || ell < 1 || b > ell * (1 << g) - 1) {
    throw Error(Errc::kInvalidParams,
                "block span g=" + std::to_string(g) + " b=" +
                    std::to_string(b) + " ell=" + std::to_string(ell));
  }
  guard_ground(g + b, cap);
  std::vector<std::uint64_t> patterns = block_pattern_list(1, g);
  std::vector<ElementSet> members;
  members.reserve(std::size_t{1} << b);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << b); ++v) {
    members.push_back(ElementSet(patterns[static_cast<std::size_t>(
                                     std::popcount(v) / ell)] |
                                 (v << g)));
  }
  return SpernerWitness{ElementSet::range(g + 1, g + b), ell,
                        SetFamily::canonical(g + b, std::move(members))};
}

// Appends b new elements after a gap of g; each new combination Y of size s
// also brings the pattern set of size-rank s from the gap interval.
SpernerWitness extend_span(const SpernerWitness& w, int g, int b, int cap) {
  if (g < 1 || b < 1 || b > (1 << g) - 1) {
    throw Error(Errc::kInvalidParams, "extension g=" + std::to_string(g) +
                                          " b=" + std::to_string(b));
  }
  if (w.target.empty()) {
    throw Error(Errc::kShapeMismatch, "cannot extend an empty target");
  }
  require_exact(w);
  require_normalized(w);
  int end = w.target.max_element();
  int ground = end + g + b;
  guard_ground(ground, cap);
  std::vector<std::uint64_t> patterns = block_pattern_list(end + 1, end + g);
  std::vector<ElementSet> members;
  members.reserve(w.family.size() << b);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << b); ++v) {
    std::uint64_t tail =
        patterns[static_cast<std::size_t>(std::popcount(v))] | (v << (end + g));
    for (ElementSet x : w.family.members) {
      members.push_back(ElementSet(x.bits | tail));
    }
  }
  ElementSet target =
      w.target.union_with(ElementSet::range(end + g + 1, end + g + b));
  return SpernerWitness{target, w.ell,
                        SetFamily::canonical(ground, std::move(members))};
}

// Standard-order witness of w.family for w.target; exact witnesses always
// have one, so a failure here means the input was not a witness at all.
std::vector<ElementSet> ordered_members(const SpernerWitness& w) {
  ShatterEngine engine(w.family);
  auto ordered = engine.extract(w.target);
  if (!ordered) {
    throw Error(Errc::kInvalidParams,
                "family does not order-shatter its target " +
                    to_string(w.target));
  }
  return *ordered;
}

// Positions (prefix lengths) of the p chain classes: scan the run prefixes in
// increasing length, group by attached value, and take the first p positions
// of the value whose p-th occurrence comes first.
std::vector<int> chain_positions(const std::vector<std::uint64_t>& values,
                                 int p) {
  std::vector<std::uint64_t> seen;
  std::vector<std::vector<int>> where;
  for (int w = 0; w < static_cast<int>(values.size()); ++w) {
    std::size_t slot = 0;
    while (slot < seen.size() && seen[slot] != values[w]) ++slot;
    if (slot == seen.size()) {
      seen.push_back(values[w]);
      where.emplace_back();
    }
    where[slot].push_back(w);
    if (static_cast<int>(where[slot].size()) == p) {
      return where[slot];
    }
  }
  throw Error(Errc::kInvalidParams, "no value repeats often enough");
}

// Drops everything above max(sub) from an extracted witness for sub; the
// standard order guarantees those bits agree across all members.
SpernerWitness normalized_from_ordered(ElementSet sub, int ell,
                                       std::vector<ElementSet> ordered) {
  int top = sub.empty() ? 0 : sub.max_element();
  std::uint64_t high = (top >= 64) ? 0 : (~std::uint64_t{0} << top);
  std::uint64_t shared = ordered.front().bits & high;
  for (ElementSet& m : ordered) {
    if ((m.bits & high) != shared) {
      throw Error(Errc::kInvalidParams,
                  "witness members disagree above the target");
    }
    m = ElementSet(m.bits & ~high);
  }
  return SpernerWitness{sub, ell,
                        SetFamily::canonical(std::max(top, 1),
                                             std::move(ordered))};
}

SpernerWitness restrict_witness(const SpernerWitness& w, ElementSet sub) {
  ShatterEngine engine(w.family);
  auto ordered = engine.extract(sub);
  if (!ordered) {
    throw Error(Errc::kInvalidParams,
                "family does not order-shatter sub-target " + to_string(sub));
  }
  return normalized_from_ordered(sub, w.ell, std::move(*ordered));
}

SpernerWitness shift_and_extend_impl(const SpernerWitness& w, int g, int cap) {
  if (g < 1) throw Error(Errc::kInvalidParams, "gap must be at least 1");
  if (w.target.empty()) {
    throw Error(Errc::kShapeMismatch, "empty target has no tail run");
  }
  require_exact(w);
  require_normalized(w);
  auto [r0, r1] = final_run(w.target);
  int r = r1 - r0 + 1;
  int at = r0 - g - 1;
  if (at < 1 || !w.target.has(at) ||
      !w.target.intersect(ElementSet::range(r0 - g, r0 - 1)).empty()) {
    throw Error(Errc::kShapeMismatch,
                "target " + to_string(w.target) + " does not end in a gap of " +
                    std::to_string(g) + " followed by a run");
  }
  int k = w.target.count();
  int t = k - r;  // elements up to and including `at`
  std::vector<ElementSet> ordered = ordered_members(w);

  std::uint64_t gap_mask = ElementSet::range(r0 - g, r0 - 1).bits;
  std::vector<std::uint64_t> values;
  values.reserve(static_cast<std::size_t>(r + 1));
  for (int len = 0; len <= r; ++len) {
    std::size_t base = (std::size_t{(std::uint64_t{1} << len) - 1}) << t;
    std::uint64_t b = ordered[base].bits & gap_mask;
    for (std::size_t off = 1; off < (std::size_t{1} << t); ++off) {
      if ((ordered[base + off].bits & gap_mask) != b) {
        throw Error(Errc::kInvalidParams, "gap trace varies inside a class");
      }
    }
    values.push_back(b);
  }
  int p = ceil_div(r + 1, 1 << g);
  std::vector<int> chain = chain_positions(values, p);

  std::uint64_t low_mask = ElementSet::range(1, at - 1).bits;
  std::size_t half = std::size_t{1} << (t - 1);
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(p) +
                                                1);
  for (int i = 0; i < p; ++i) {
    std::size_t base = (std::size_t{(std::uint64_t{1} << chain[i]) - 1}) << t;
    for (std::size_t off = 0; off < half; ++off) {
      parts[i].push_back(ordered[base + off].bits & low_mask);
    }
  }
  {
    std::size_t base =
        (std::size_t{(std::uint64_t{1} << chain[p - 1]) - 1}) << t;
    for (std::size_t off = half; off < 2 * half; ++off) {
      parts[p].push_back(ordered[base + off].bits & low_mask);
    }
  }

  std::vector<std::uint64_t> patterns = block_pattern_list(at, at + g - 1);
  int m3 = (p + 1) * (1 << g) - 1;
  int ground = at + g + m3 - 1;
  guard_ground(ground, cap);
  ElementSet tail = ElementSet::range(at + g, at + g + m3 - 1);
  ElementSet target =
      ElementSet(w.target.bits & low_mask).union_with(tail);

  std::vector<ElementSet> members;
  members.reserve(half << m3);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m3); ++v) {
    int sz = std::popcount(v);
    std::uint64_t common = patterns[static_cast<std::size_t>(sz / (p + 1))] |
                           (v << (at + g - 1));
    for (std::uint64_t x : parts[static_cast<std::size_t>(sz % (p + 1))]) {
      members.push_back(ElementSet(x | common));
    }
  }
  return SpernerWitness{target, w.ell,
                        SetFamily::canonical(ground, std::move(members))};
}

SpernerWitness shift_back_impl(const SpernerWitness& w, int cap) {
  if (w.target.empty()) {
    throw Error(Errc::kShapeMismatch, "empty target has no tail run");
  }
  require_exact(w);
  require_normalized(w);
  auto [r0, r1] = final_run(w.target);
  int r = r1 - r0 + 1;
  int x = r0 - 1;
  if (r < 2 || x < 1) {
    throw Error(Errc::kShapeMismatch,
                "target " + to_string(w.target) +
                    " does not end in a skipped element and a run of >= 2");
  }
  std::uint64_t low_mask = ElementSet::range(1, x - 1).bits;
  int tm1 = ElementSet(w.target.bits & low_mask).count();
  std::vector<ElementSet> ordered = ordered_members(w);

  std::uint64_t x_bit = std::uint64_t{1} << (x - 1);
  std::vector<std::uint64_t> values;
  values.reserve(static_cast<std::size_t>(r + 1));
  for (int len = 0; len <= r; ++len) {
    std::size_t base = (std::size_t{(std::uint64_t{1} << len) - 1}) << tm1;
    values.push_back(ordered[base].bits & x_bit);
    for (std::size_t off = 1; off < (std::size_t{1} << tm1); ++off) {
      if ((ordered[base + off].bits & x_bit) != values.back()) {
        throw Error(Errc::kInvalidParams, "trace at the gap varies in class");
      }
    }
  }
  int p = ceil_div(r + 1, 2);
  std::vector<int> chain = chain_positions(values, p);

  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    std::size_t base = (std::size_t{(std::uint64_t{1} << chain[i]) - 1})
                       << tm1;
    for (std::size_t off = 0; off < (std::size_t{1} << tm1); ++off) {
      parts[i].push_back(ordered[base + off].bits & low_mask);
    }
  }

  int m3 = 2 * p - 3;
  int ground = x + 2 * p - 2;
  guard_ground(ground, cap);
  ElementSet tail = ElementSet::range(x + 2, x + 2 * p - 2);
  ElementSet target = ElementSet(w.target.bits & low_mask)
                          .with(x)
                          .union_with(tail);
  std::uint64_t above_bit = std::uint64_t{1} << x;  // element x+1

  std::vector<ElementSet> members;
  members.reserve(parts[0].size() << (m3 + 1));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m3); ++v) {
    int sz = std::popcount(v);
    std::uint64_t y = v << (x + 1);
    if (sz <= p - 2) {
      std::size_t i = static_cast<std::size_t>(sz);  // chain index i-1
      for (std::uint64_t m : parts[i]) {
        members.push_back(ElementSet(m | above_bit | y));
      }
      for (std::uint64_t m : parts[i + 1]) {
        members.push_back(ElementSet(m | x_bit | above_bit | y));
      }
    } else {
      std::size_t i = static_cast<std::size_t>(sz - p + 1);
      for (std::uint64_t m : parts[i]) {
        members.push_back(ElementSet(m | y));
      }
      for (std::uint64_t m : parts[i + 1]) {
        members.push_back(ElementSet(m | x_bit | y));
      }
    }
  }
  return SpernerWitness{target, w.ell,
                        SetFamily::canonical(ground, std::move(members))};
}

SpernerWitness extend_consecutive_impl(const SpernerWitness& w, int g, int r,
                                       int cap) {
  if (g < 1) throw Error(Errc::kInvalidParams, "gap must be at least 1");
  if (w.target.empty()) {
    throw Error(Errc::kShapeMismatch, "empty target has no tail run");
  }
  auto [r0, r1] = final_run(w.target);
  int run = r1 - r0 + 1;
  if (r == 0) r = run - 1;
  if (r < 1 || r > run - 1) {
    throw Error(Errc::kShapeMismatch,
                "target " + to_string(w.target) + " lacks a tail run of " +
                    std::to_string(r + 1) + " consecutive elements");
  }
  SpernerWitness cur = extend_span(w, g, (1 << g) - 1, cap);
  for (int step = 0; step < r; ++step) {
    cur = shift_and_extend_impl(cur, g, cap);
  }
  return cur;
}

SpernerWitness build_blocks(const std::vector<std::pair<int, int>>& blocks,
                            int ell, int cap) {
  auto [g, b] = blocks.back();
  if (blocks.size() == 1) {
    return single_block_span(g, b, ell, cap);
  }
  if (b <= (1 << g) - 1) {
    std::vector<std::pair<int, int>> prefix(blocks.begin(), blocks.end() - 1);
    return extend_span(build_blocks(prefix, ell, cap), g, b, cap);
  }
  int grow = ceil_div(b + 1, 1 << g);  // >= 2
  std::vector<std::pair<int, int>> grown(blocks.begin(), blocks.end() - 1);
  grown.back().second += grow - 1;
  SpernerWitness wide = extend_consecutive_impl(build_blocks(grown, ell, cap),
                                                g, grow - 1, cap);
  BlockEncoding enc;
  enc.blocks = blocks;
  return restrict_witness(wide, decode_blocks(enc));
}

}  // namespace

DyadicRational criterion_sum(ElementSet a) {
  DyadicRational sum;
  int rank = 0;
  for (int e : a.elements()) {
    ++rank;
    sum += DyadicRational::inverse_pow2(static_cast<unsigned>(e - rank));
  }
  return sum;
}

bool criterion_holds(ElementSet a, int ell) {
  if (ell < 1) throw Error(Errc::kInvalidParams, "chain bound must be >= 1");
  return criterion_sum(a).less_than(static_cast<unsigned>(ell));
}

bool verify_witness(const SpernerWitness& w) {
  int k = w.target.count();
  if (w.family.size() != (std::size_t{1} << k)) return false;
  if (!w.target.subset_of(ElementSet::full(w.family.n))) return false;
  return is_l_sperner(w.family, w.ell) && order_shatters(w.family, w.target);
}

SpernerWitness construct_single_block(int g, int ell) {
  if (g < 1 || ell < 1) {
    throw Error(Errc::kInvalidParams, "need g >= 1 and ell >= 1");
  }
  return single_block_span(g, ell * (1 << g) - 1, ell, kMaxGroundSize);
}

SpernerWitness extend_with_gap(const SpernerWitness& w, int g) {
  if (g < 1) throw Error(Errc::kInvalidParams, "gap must be at least 1");
  return extend_span(w, g, (1 << g) - 1, kMaxGroundSize);
}

SpernerWitness shift_and_extend(const SpernerWitness& w, int g) {
  return shift_and_extend_impl(w, g, kMaxGroundSize);
}

SpernerWitness extend_consecutive(const SpernerWitness& w, int g, int r) {
  return extend_consecutive_impl(w, g, r, kMaxGroundSize);
}

SpernerWitness shift_back(const SpernerWitness& w) {
  return shift_back_impl(w, kMaxGroundSize);
}

SpernerWitness shift_back_by_gap(const SpernerWitness& w, int g) {
  if (g < 1) throw Error(Errc::kInvalidParams, "gap must be at least 1");
  if (w.target.empty()) {
    throw Error(Errc::kShapeMismatch, "empty target has no tail run");
  }
  require_exact(w);
  require_normalized(w);
  auto [r0, r1] = final_run(w.target);
  int r = r1 - r0 + 1;
  int at = r0 - g;
  if (r < (1 << g) || at < 1 ||
      !w.target.intersect(ElementSet::range(at, r0 - 1)).empty()) {
    throw Error(Errc::kShapeMismatch,
                "need a run of >= 2^g after a gap of >= g in " +
                    to_string(w.target));
  }
  SpernerWitness cur = w;
  for (int j = 0; j < g; ++j) {
    int steps = ceil_div(r + 1, 1 << (j + 1)) - 1;
    for (int s = 0; s < steps; ++s) {
      cur = shift_back_impl(cur, kMaxGroundSize);
    }
    cur = restrict_witness(
        cur, cur.target.without(cur.target.max_element()));
  }
  return cur;
}

SpernerWitness construct_sperner_witness(ElementSet a, int ell,
                                         int max_ground) {
  if (ell < 1) throw Error(Errc::kInvalidParams, "chain bound must be >= 1");
  DyadicRational sum = criterion_sum(a);
  if (!sum.less_than(static_cast<unsigned>(ell))) {
    throw Error(Errc::kCriterionFails,
                "sum = " + sum.to_string() + " for " + to_string(a) +
                    " is not below " + std::to_string(ell) +
                    "; criterion fails");
  }
  if (a.empty()) {
    return SpernerWitness{a, ell,
                          SetFamily::canonical(1, {ElementSet{}})};
  }
  SpernerWitness w = build_blocks(encode_blocks(a).blocks, ell, max_ground);
  if (w.target != a) {
    throw Error(Errc::kInvalidParams,
                "internal: constructed target " + to_string(w.target) +
                    " differs from " + to_string(a));
  }
  return w;
}

bool exhaustive_nonexistence(ElementSet a, int n, int ell, int cap) {
  if (ell < 1) throw Error(Errc::kInvalidParams, "chain bound must be >= 1");
  if (n < 1 || n > cap) {
    throw Error(Errc::kGroundTooLarge,
                "ground size " + std::to_string(n) +
                    " exceeds the exhaustive-search cap " +
                    std::to_string(cap));
  }
  if (!a.subset_of(ElementSet::full(n))) {
    throw Error(Errc::kElementOutOfRange,
                "target " + to_string(a) + " not inside [1, " +
                    std::to_string(n) + "]");
  }
  std::vector<std::uint64_t> pool;
  pool.reserve(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    pool.push_back(v);
  }
  std::sort(pool.begin(), pool.end(), [](std::uint64_t l, std::uint64_t r) {
    return canonical_less(ElementSet(l), ElementSet(r));
  });

  std::vector<ElementSet> chosen;
  std::vector<int> depth;  // longest chain ending at chosen[i]
  bool found = false;

  auto probe = [&]() {
    if (chosen.empty()) return;
    SetFamily f = SetFamily::canonical(n, chosen);
    if (order_shatters(f, a)) found = true;
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (found) return;
    if (idx == pool.size()) {
      probe();
      return;
    }
    ElementSet next(pool[idx]);
    int len = 1;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (chosen[i] != next && chosen[i].subset_of(next)) {
        len = std::max(len, depth[i] + 1);
      }
    }
    if (len <= ell) {
      chosen.push_back(next);
      depth.push_back(len);
      self(self, idx + 1);
      chosen.pop_back();
      depth.pop_back();
      if (found) return;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  return !found;
}

}  // namespace oshlab
