#pragma once

// Closed-form descriptions of the order-shattering closure of unions of
// complete levels: runs of consecutive levels, and pairs of levels at an
// arbitrary distance. Membership in the closure of a two-level family is
// decided by a short list of dominance-minimal sets; explicit witness
// subfamilies certify the nontrivial entries of that list.

#include <cstdint>
#include <vector>

#include "oshlab/core.hpp"

namespace oshlab {

// The union of the two complete levels a and a+d of [n].
struct TwoLevelParams {
  int n = 1;
  int a = 0;
  int d = 1;

  // Requires 1 <= n <= 63, a >= 0, d >= 1, a + d <= n.
  void validate() const;
};

SetFamily two_level_family(const TwoLevelParams& p);

// Ballot predicate: writing s as s_1 < ... < s_k, require s_i >= 2i - t for
// every i. Requires t >= 0.
bool is_t_ballot(ElementSet s, int t);

// Least t >= 0 for which s is a t-ballot set.
int t_min(ElementSet s);

// Membership in the closure of the union of levels k-ell+1, ..., k of [n]:
// s belongs iff s is an (ell-1)-ballot set and |s| <= k when 2k < n + ell,
// |s| <= n - k + ell - 1 otherwise. Requires ell >= 1 and ell-1 <= k <= n.
bool consecutive_levels_member(int n, int k, int ell, ElementSet s);

// The full closure of that union, by enumeration of P([n]) (n <= cap).
SetFamily osh_consecutive_levels(int n, int k, int ell,
                                 int cap = kDefaultEnumerationCap);

// Its cardinality: the binomial sum C(n, k-ell+1) + ... + C(n, k).
std::uint64_t osh_consecutive_levels_size(int n, int k, int ell);

// Shapes of the dominance-minimal closure members of a two-level family.
enum class MinimalSetKind {
  kOddPrefix,      // {1, 3, ..., 2k-1}; p1 = k (distance 1)
  kEmpty,          // {}                          (distance 2)
  kSingleEven,     // {2}                         (distance 2)
  kEvenOddPair,    // {2, 3}                      (distance 2)
  kPairThenEvens,  // {2, 3} + {4, 6, ..., 2k}; p1 = k (distance 2)
  kEvenPrefix,     // {2, 4, ..., 2m}; p1 = m (distance >= 3)
  kShortRun,       // {2,...,2m} + run of j at 2m+d; p1 = m, p2 = j
  kFullRun,        // {2,...,2m} + run of d+j at 2m+d; p1 = m, p2 = j
  kRunThenEvens,   // {2,...,2m} + run of 2d-1 at 2m+d + {2m+3d+2i : i <= r};
                   // p1 = m, p2 = r
};

struct MinimalOshSet {
  MinimalSetKind kind{};
  int p1 = 0;
  int p2 = 0;
  ElementSet set;
  int tmin = 0;
};

// The dominance-minimal members of the closure of two_level_family(p), in
// canonical order. A set s belongs to the closure iff the list contains an
// entry of the same cardinality dominated by s.
std::vector<MinimalOshSet> minimal_osh_sets(const TwoLevelParams& p);

// Upper bound on t_min over closure members that are not 0-ballot sets
// (distance >= 2). May be <= 0, meaning every member is a 0-ballot set.
int tmin_bound(const TwoLevelParams& p);

// Membership oracle that precomputes the minimal-set list once.
class TwoLevelMembership {
 public:
  explicit TwoLevelMembership(const TwoLevelParams& p);

  const TwoLevelParams& params() const { return p_; }
  const std::vector<MinimalOshSet>& minimal_sets() const { return minimal_; }
  bool contains(ElementSet s) const;

 private:
  TwoLevelParams p_;
  std::vector<MinimalOshSet> minimal_;
  std::vector<std::vector<ElementSet>> by_size_;
};

// One element from each pair {2i-1, 2i}, i = 1..m: 2^m sets that order-shatter
// the even prefix {2, 4, ..., 2m}.
SetFamily transversal_family(int m);

// Witness subfamilies inside two_level_family(p) certifying membership of the
// corresponding minimal sets; each throws kBoundViolated outside the range
// where that minimal set exists.
SetFamily witness_full_run(const TwoLevelParams& p, int m, int j);
SetFamily witness_run_then_evens(const TwoLevelParams& p, int m, int r);
SetFamily witness_short_run(const TwoLevelParams& p, int m, int j);

// True when every member of f meets {1, ..., 2m} in exactly m elements.
bool equal_prefix_check(const SetFamily& f, int m);

}  // namespace oshlab
