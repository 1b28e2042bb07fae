#include "oshlab/twolevel.hpp"

#include <algorithm>

namespace oshlab {

namespace {

ElementSet even_prefix(int m) {
  ElementSet s;
  for (int i = 1; i <= m; ++i) s = s.with(2 * i);
  return s;
}

ElementSet odd_prefix(int k) {
  ElementSet s;
  for (int i = 1; i <= k; ++i) s = s.with(2 * i - 1);
  return s;
}

// The `count` smallest elements of [lo, hi]; throws when they do not fit.
ElementSet lowest_of(int lo, int hi, int count) {
  if (count < 0 || lo + count - 1 > hi) {
    throw Error(Errc::kInvalidParams,
                "internal: cannot take " + std::to_string(count) +
                    " elements from [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  return ElementSet::range(lo, lo + count - 1);
}

MinimalOshSet make_minimal(MinimalSetKind kind, int p1, int p2,
                           ElementSet set) {
  return MinimalOshSet{kind, p1, p2, set, t_min(set)};
}

void append_distance_one(const TwoLevelParams& p,
                         std::vector<MinimalOshSet>& out) {
  int bound = (2 * (p.a + 1) < p.n + 2) ? p.a + 1 : p.n - p.a;
  for (int k = 0; k <= bound; ++k) {
    out.push_back(make_minimal(MinimalSetKind::kOddPrefix, k, 0,
                               odd_prefix(k)));
  }
}

void append_distance_two(const TwoLevelParams& p,
                         std::vector<MinimalOshSet>& out) {
  // The closure is invariant under complementing every member, which swaps
  // the level pair (a, a+2) with (a2, a2+2) for a2 = n-a-2; the formulas
  // below assume the smaller of the two.
  int a2 = std::min(p.a, p.n - p.a - 2);
  out.push_back(make_minimal(MinimalSetKind::kEmpty, 0, 0, ElementSet{}));
  out.push_back(make_minimal(MinimalSetKind::kSingleEven, 0, 0,
                             ElementSet::single(2)));
  if (p.n >= a2 + 3) {
    out.push_back(make_minimal(MinimalSetKind::kEvenOddPair, 0, 0,
                               ElementSet::range(2, 3)));
  }
  int hi = std::min(a2 + 1, p.n - a2 - 1);
  for (int k = 2; k <= hi; ++k) {
    ElementSet s = ElementSet::range(2, 3);
    for (int i = 2; i <= k; ++i) s = s.with(2 * i);
    out.push_back(make_minimal(MinimalSetKind::kPairThenEvens, k, 0, s));
  }
}

void append_distance_many(const TwoLevelParams& p,
                          std::vector<MinimalOshSet>& out) {
  int n = p.n, a = p.a, d = p.d;
  int even_cap = std::max(std::min(a, n - a), std::min(a + d, n - a - d));
  for (int m = 0; m <= even_cap; ++m) {
    out.push_back(make_minimal(MinimalSetKind::kEvenPrefix, m, 0,
                               even_prefix(m)));
  }
  if (2 * a < n && n < 2 * (a + d)) {
    for (int m = 0; m <= a; ++m) {
      for (int j = 1; j <= d - 1; ++j) {
        if (m + j > std::max(a, n - a - d) && 2 * m + d + j - 1 <= n) {
          ElementSet s = even_prefix(m).union_with(
              ElementSet::range(2 * m + d, 2 * m + d + j - 1));
          out.push_back(
              make_minimal(MinimalSetKind::kShortRun, m, j, s));
        }
      }
    }
  }
  for (int m = 0; m <= a; ++m) {
    int run_cap = std::min(std::min(d, a - m + 1),
                           std::min(n - m - a - d + 1, n - 2 * m - 2 * d + 2));
    for (int j = 0; j + 1 <= run_cap; ++j) {
      ElementSet s = even_prefix(m).union_with(
          ElementSet::range(2 * m + d, 2 * m + 2 * d + j - 1));
      out.push_back(make_minimal(MinimalSetKind::kFullRun, m, j, s));
    }
  }
  for (int m = 0; m <= a; ++m) {
    for (int r = 0; m + r + d <= a; ++r) {
      int cap = std::min(a - m - r, std::min(n - m - r - a - d,
                                             n - 2 * m - 2 * r - 2 * d));
      if (d > cap) continue;
      ElementSet s = even_prefix(m)
                         .union_with(ElementSet::range(2 * m + d,
                                                       2 * m + 3 * d - 2));
      for (int i = 0; i <= r; ++i) s = s.with(2 * m + 3 * d + 2 * i);
      out.push_back(make_minimal(MinimalSetKind::kRunThenEvens, m, r, s));
    }
  }
}

// Pair transversals over the `count` pairs starting at element `start`:
// from each pair {start + 2i, start + 2i + 1} pick one element.
std::vector<ElementSet> pair_transversals(int start, int count) {
  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << count);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << count); ++pick) {
    ElementSet s;
    for (int i = 0; i < count; ++i) {
      s = s.with(start + 2 * i + static_cast<int>((pick >> i) & 1));
    }
    out.push_back(s);
  }
  return out;
}

std::vector<ElementSet> subsets_of_range(int lo, int hi) {
  int width = std::max(0, hi - lo + 1);
  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << width); ++v) {
    out.push_back(ElementSet(v << (lo - 1)));
  }
  return out;
}

}  // namespace

void TwoLevelParams::validate() const {
  if (n < 1 || n > kMaxGroundSize || a < 0 || d < 1 || a + d > n) {
    throw Error(Errc::kInvalidParams,
                "level pair (n=" + std::to_string(n) + ", a=" +
                    std::to_string(a) + ", d=" + std::to_string(d) +
                    ") needs 1 <= n <= 63, a >= 0, d >= 1, a + d <= n");
  }
}

SetFamily two_level_family(const TwoLevelParams& p) {
  p.validate();
  return level_union(p.n, {p.a, p.a + p.d});
}

bool is_t_ballot(ElementSet s, int t) {
  if (t < 0) {
    throw Error(Errc::kInvalidParams, "ballot parameter must be >= 0");
  }
  int rank = 0;
  for (int e : s.elements()) {
    ++rank;
    if (e < 2 * rank - t) return false;
  }
  return true;
}

int t_min(ElementSet s) {
  int best = 0;
  int rank = 0;
  for (int e : s.elements()) {
    ++rank;
    best = std::max(best, 2 * rank - e);
  }
  return best;
}

bool consecutive_levels_member(int n, int k, int ell, ElementSet s) {
  if (ell < 1 || k < ell - 1 || k > n || n < 1 || n > kMaxGroundSize) {
    throw Error(Errc::kInvalidParams,
                "need 1 <= ell, ell-1 <= k <= n <= 63; got n=" +
                    std::to_string(n) + " k=" + std::to_string(k) +
                    " ell=" + std::to_string(ell));
  }
  if (!s.subset_of(ElementSet::full(n))) {
    throw Error(Errc::kElementOutOfRange,
                to_string(s) + " is not inside [1, " + std::to_string(n) +
                    "]");
  }
  int bound = (2 * k < n + ell) ? k : n - k + ell - 1;
  return s.count() <= bound && is_t_ballot(s, ell - 1);
}

SetFamily osh_consecutive_levels(int n, int k, int ell, int cap) {
  if (n > cap) {
    throw Error(Errc::kGroundTooLarge,
                "enumerating P([n]) for n = " + std::to_string(n) +
                    " exceeds the cap " + std::to_string(cap));
  }
  std::vector<ElementSet> members;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (consecutive_levels_member(n, k, ell, ElementSet(v))) {
      members.push_back(ElementSet(v));
    }
  }
  return SetFamily::canonical(n, std::move(members));
}

std::uint64_t osh_consecutive_levels_size(int n, int k, int ell) {
  if (ell < 1 || k < ell - 1 || k > n || n < 1 || n > kMaxGroundSize) {
    throw Error(Errc::kInvalidParams,
                "need 1 <= ell, ell-1 <= k <= n <= 63");
  }
  // Pascal row n.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  std::uint64_t total = 0;
  for (int i = k - ell + 1; i <= k; ++i) total += row[i];
  return total;
}

std::vector<MinimalOshSet> minimal_osh_sets(const TwoLevelParams& p) {
  p.validate();
  std::vector<MinimalOshSet> out;
  if (p.d == 1) {
    append_distance_one(p, out);
  } else if (p.d == 2) {
    append_distance_two(p, out);
  } else {
    append_distance_many(p, out);
  }
  std::sort(out.begin(), out.end(),
            [](const MinimalOshSet& x, const MinimalOshSet& y) {
              return canonical_less(x.set, y.set);
            });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].set == out[i - 1].set) {
      throw Error(Errc::kInvalidParams,
                  "internal: duplicate minimal set " + to_string(out[i].set));
    }
  }
  return out;
}

int tmin_bound(const TwoLevelParams& p) {
  p.validate();
  return std::min(std::min(p.d, p.a + 1),
                  std::min(p.n - p.a - p.d + 1, p.n - 2 * p.d + 2));
}

TwoLevelMembership::TwoLevelMembership(const TwoLevelParams& p)
    : p_(p), minimal_(minimal_osh_sets(p)) {
  for (const MinimalOshSet& m : minimal_) {
    std::size_t size = static_cast<std::size_t>(m.set.count());
    if (by_size_.size() <= size) by_size_.resize(size + 1);
    by_size_[size].push_back(m.set);
  }
}

bool TwoLevelMembership::contains(ElementSet s) const {
  if (!s.subset_of(ElementSet::full(p_.n))) {
    throw Error(Errc::kElementOutOfRange,
                to_string(s) + " is not inside [1, " + std::to_string(p_.n) +
                    "]");
  }
  std::size_t size = static_cast<std::size_t>(s.count());
  if (size >= by_size_.size()) return false;
  for (ElementSet m : by_size_[size]) {
    if (prec_leq(m, s)) return true;
  }
  return false;
}

SetFamily transversal_family(int m) {
  if (m < 0 || 2 * m > kMaxGroundSize) {
    throw Error(Errc::kInvalidParams,
                "transversal count must be in [0, 31]");
  }
  return SetFamily::canonical(std::max(2 * m, 1), pair_transversals(1, m));
}

SetFamily witness_full_run(const TwoLevelParams& p, int m, int j) {
  p.validate();
  int n = p.n, a = p.a, d = p.d;
  int run_cap = (m < 0 || m > a)
                    ? 0
                    : std::min(std::min(d, a - m + 1),
                               std::min(n - m - a - d + 1,
                                        n - 2 * m - 2 * d + 2));
  if (m < 0 || j < 0 || j + 1 > run_cap) {
    throw Error(Errc::kBoundViolated,
                "no minimal set with even prefix " + std::to_string(m) +
                    " and run extension " + std::to_string(j) +
                    " exists for these levels");
  }
  int x = std::min(d - 1, a - m);
  int y = a - m - x;
  ElementSet tail = lowest_of(2 * m + 2 * d + j, n, y);
  std::vector<ElementSet> members;
  for (ElementSet head : pair_transversals(1, m)) {
    for (ElementSet mid : subsets_of_range(2 * m + d, 2 * m + 2 * d + j - 1)) {
      int size = mid.count();
      int filler = (size <= x) ? x - size : x + d - size;
      ElementSet g = lowest_of(2 * m + 1, 2 * m + d - 1, filler);
      members.push_back(
          head.union_with(g).union_with(mid).union_with(tail));
    }
  }
  return SetFamily::canonical(n, std::move(members));
}

SetFamily witness_run_then_evens(const TwoLevelParams& p, int m, int r) {
  p.validate();
  int n = p.n, a = p.a, d = p.d;
  int cap = (m < 0 || r < 0)
                ? -1
                : std::min(a - m - r,
                           std::min(n - m - r - a - d,
                                    n - 2 * m - 2 * r - 2 * d));
  if (d > cap) {
    throw Error(Errc::kBoundViolated,
                "no minimal set with even prefix " + std::to_string(m) +
                    ", full run, and " + std::to_string(r + 1) +
                    " trailing even steps exists for these levels");
  }
  int x = d - 1;
  int y = a - m - r - d;
  ElementSet tail = lowest_of(2 * m + 3 * d + 2 * r + 1, n, y);
  std::vector<ElementSet> members;
  for (ElementSet head : pair_transversals(1, m)) {
    for (ElementSet mid : subsets_of_range(2 * m + d, 2 * m + 3 * d - 2)) {
      int size = mid.count();
      int filler = (size <= x) ? x - size : x + d - size;
      ElementSet g = lowest_of(2 * m + 1, 2 * m + d - 1, filler);
      ElementSet base = head.union_with(g).union_with(mid).union_with(tail);
      for (ElementSet high : pair_transversals(2 * m + 3 * d - 1, r + 1)) {
        members.push_back(base.union_with(high));
      }
    }
  }
  return SetFamily::canonical(n, std::move(members));
}

SetFamily witness_short_run(const TwoLevelParams& p, int m, int j) {
  p.validate();
  int n = p.n, a = p.a, d = p.d;
  bool ok = 2 * a < n && n < 2 * (a + d) && m >= 0 && m <= a && j >= 1 &&
            j <= d - 1 && m + j > std::max(a, n - a - d) &&
            2 * m + d + j - 1 <= n;
  if (!ok) {
    throw Error(Errc::kBoundViolated,
                "no minimal set with even prefix " + std::to_string(m) +
                    " and short run " + std::to_string(j) +
                    " exists for these levels");
  }
  std::vector<ElementSet> members;
  for (ElementSet head : pair_transversals(1, m)) {
    for (ElementSet mid : subsets_of_range(2 * m + d, 2 * m + d + j - 1)) {
      int size = mid.count();
      int filler = (size <= a - m) ? a - m - size : a + d - m - size;
      ElementSet g = lowest_of(2 * m + 1, 2 * m + d - 1, filler);
      members.push_back(head.union_with(g).union_with(mid));
    }
  }
  return SetFamily::canonical(n, std::move(members));
}

bool equal_prefix_check(const SetFamily& f, int m) {
  if (m < 0 || 2 * m > kMaxGroundSize) {
    throw Error(Errc::kInvalidParams, "prefix length must be in [0, 31]");
  }
  ElementSet prefix = ElementSet::range(1, 2 * m);
  for (ElementSet s : f.members) {
    if (s.intersect(prefix).count() != m) return false;
  }
  return true;
}

}  // namespace oshlab
