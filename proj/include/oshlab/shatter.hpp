#pragma once

// The three trace structures of a set family: shattering, strong tracing,
// and order-shattering, each with a closure operator collecting every
// qualifying subset of the ground set. Also: extraction of an ordered
// order-shattering witness and the standard-order verifier.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "oshlab/core.hpp"

namespace oshlab {

// f shatters s: every subset of s appears as m ∩ s for some member m.
bool shatters(const SetFamily& f, ElementSet s);

// All shattered subsets of [n]. Throws kGroundTooLarge when n > cap.
SetFamily sh_all(const SetFamily& f, int cap = kDefaultEnumerationCap);

// f strongly traces s: there is B ⊆ [n] \ s with B ∪ H ∈ f for every H ⊆ s.
bool strongly_traces(const SetFamily& f, ElementSet s);

// All strongly traced subsets of [n].
SetFamily st_all(const SetFamily& f, int cap = kDefaultEnumerationCap);

// f order-shatters s. The empty target needs only a nonempty family; for
// s with largest element p, some trace class of f on [p+1, n] must split at
// p into two halves that each recursively order-shatter s \ {p}.
bool order_shatters(const SetFamily& f, ElementSet s);

// All order-shattered subsets of [n], by direct recursion on the definition.
SetFamily osh_direct(const SetFamily& f, int cap = kDefaultEnumerationCap);

// 2^k members of f arranged so that, writing the target s = {s_1 < ... < s_k},
// member j contains s_i exactly when bit i-1 of j-1 is set, and members in a
// common aligned block of 2^i consecutive positions agree above s_i.
struct ShatterWitness {
  int n = 1;
  ElementSet target;
  std::vector<ElementSet> ordered;
};

// Checks both standard-order conditions and the exact count 2^k.
bool verify_standard_order(const ShatterWitness& w);

// Deterministic witness extraction: at each level the trace class with the
// numerically smallest trace wins; the avoid-half precedes the contain-half;
// a level-0 class is represented by its canonically smallest member.
// Empty result when f does not order-shatter s.
std::optional<ShatterWitness> extract_witness(const SetFamily& f,
                                              ElementSet s);

// Reusable recursion engine over one family. The member list is sorted
// numerically once; every subproblem is a contiguous slice of it, so results
// memoize on (slice begin, slice end, remaining target) across queries.
class ShatterEngine {
 public:
  explicit ShatterEngine(const SetFamily& f);

  bool order_shatters(ElementSet target);
  std::optional<std::vector<ElementSet>> extract(ElementSet target);

 private:
  struct Key {
    std::uint32_t begin;
    std::uint32_t end;
    std::uint64_t target;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.target * 0x9e3779b97f4a7c15ull;
      h ^= (std::uint64_t{k.begin} << 32 | k.end) + (h >> 29);
      return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
    }
  };

  bool check(std::uint32_t begin, std::uint32_t end, std::uint64_t target);
  void extract_rec(std::uint32_t begin, std::uint32_t end,
                   std::uint64_t target, std::vector<std::uint64_t>& out);

  std::vector<std::uint64_t> buf_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace oshlab
