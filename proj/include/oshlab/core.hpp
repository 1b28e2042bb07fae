#pragma once

// Core vocabulary: bitmask subsets of a ground set [n] = {1, ..., n},
// canonically ordered set families, exact dyadic rationals, and the
// gap/run block encoding of a finite set of positive integers.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oshlab {

inline constexpr int kMaxGroundSize = 63;
inline constexpr int kDefaultEnumerationCap = 24;

// Every failure mode raised by the library. The CLI maps DomainNegative-ish
// outcomes (criterion failures, negative verdicts) to exit code 2 and
// everything else to exit code 1.
enum class Errc {
  kEmptySet,
  kMalformedEncoding,
  kGroundTooLarge,
  kInvalidElement,
  kCriterionFails,
  kWitnessNotNormalized,
  kShapeMismatch,
  kBoundViolated,
  kInvalidParams,
  kElementOutOfRange,
  kDuplicateSet,
  kParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Subset of [63] stored as a bitmask; element e corresponds to bit e-1.
// Elements are 1-based everywhere outside this struct's bit twiddling.
struct ElementSet {
  std::uint64_t bits = 0;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t raw) : bits(raw) {}

  static ElementSet single(int e);
  // {lo, lo+1, ..., hi}; the empty set when lo > hi.
  static ElementSet range(int lo, int hi);
  static ElementSet full(int n) { return range(1, n); }

  bool empty() const { return bits == 0; }
  int count() const { return std::popcount(bits); }
  bool has(int e) const {
    return e >= 1 && e <= 64 && ((bits >> (e - 1)) & 1u) != 0;
  }
  ElementSet with(int e) const;
  ElementSet without(int e) const;

  // Smallest / largest element; 0 for the empty set.
  int min_element() const {
    return bits == 0 ? 0 : std::countr_zero(bits) + 1;
  }
  int max_element() const { return std::bit_width(bits); }

  bool subset_of(ElementSet other) const {
    return (bits & ~other.bits) == 0;
  }
  ElementSet union_with(ElementSet o) const { return ElementSet(bits | o.bits); }
  ElementSet intersect(ElementSet o) const { return ElementSet(bits & o.bits); }
  ElementSet minus(ElementSet o) const { return ElementSet(bits & ~o.bits); }
  ElementSet complement_in(int n) const {
    return ElementSet(~bits & full(n).bits);
  }

  // Elements in ascending order.
  std::vector<int> elements() const;

  friend bool operator==(ElementSet a, ElementSet b) { return a.bits == b.bits; }
  friend bool operator!=(ElementSet a, ElementSet b) { return a.bits != b.bits; }
};

// Canonical order on sets: by cardinality, then by bitmask value.
bool canonical_less(ElementSet a, ElementSet b);

// Dominance order on equal-size sets: with both written in increasing order
// s_1 < ... < s_k and t_1 < ... < t_k, a ⪯ b iff s_i <= t_i for every i.
// False whenever the sizes differ.
bool prec_leq(ElementSet a, ElementSet b);

// "{2,3,5}" rendering used in messages and text output; "{}" for the empty set.
std::string to_string(ElementSet s);

// A finite family of distinct subsets of [n], kept sorted in canonical order.
// Families compare equal iff they have the same ground size and member list.
struct SetFamily {
  int n = 1;
  std::vector<ElementSet> members;

  // Sorts into canonical order and validates: 1 <= n <= 63, members within
  // [n], members pairwise distinct (throws kDuplicateSet otherwise).
  static SetFamily canonical(int n, std::vector<ElementSet> members);

  std::size_t size() const { return members.size(); }
  bool contains(ElementSet s) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n == b.n && a.members == b.members;
  }
};

// All subsets of [n] of the given size, canonical order.
SetFamily complete_level(int n, int size);

// Union of several complete levels (sizes pairwise distinct).
SetFamily level_union(int n, const std::vector<int>& sizes);

// Every member replaced by its complement within [n].
SetFamily complement_family(const SetFamily& f);

// Length of the longest chain under strict inclusion (0 for an empty family).
int longest_chain(const SetFamily& f);

// No chain of ell+1 members under strict inclusion.
bool is_l_sperner(const SetFamily& f, int ell);

// Every subset of a member is a member.
bool is_downset(const SetFamily& f);

// Exact non-negative dyadic rational num / 2^log2_den, kept in lowest terms
// (num odd or zero; log2_den == 0 when num == 0).
struct DyadicRational {
  boost::multiprecision::cpp_int num = 0;
  unsigned log2_den = 0;

  static DyadicRational zero() { return {}; }
  // 2^{-e} for e >= 0.
  static DyadicRational inverse_pow2(unsigned e);

  void reduce();
  DyadicRational& operator+=(const DyadicRational& o);

  // Exact comparisons against a non-negative integer.
  bool less_than(unsigned v) const;
  bool equals(unsigned v) const;

  // "num/den" with den printed as the decimal value of 2^log2_den, e.g. "3/4";
  // whole numbers print as "num/1".
  std::string to_string() const;

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.num == b.num && a.log2_den == b.log2_den;
  }
};

// Alternating gap/run encoding of a nonempty set A = {a_1 < ... < a_k}:
// pairs (g_1, b_1), ..., (g_j, b_j) where A is g_1 skipped elements, then a
// run of b_1 consecutive elements, then a gap of g_2, another run of b_2, and
// so on. g_1 >= 0, g_i >= 1 for i >= 2, every b_i >= 1.
struct BlockEncoding {
  std::vector<std::pair<int, int>> blocks;

  friend bool operator==(const BlockEncoding& a, const BlockEncoding& b) {
    return a.blocks == b.blocks;
  }
};

// Throws kEmptySet for the empty set.
BlockEncoding encode_blocks(ElementSet a);

// Inverse of encode_blocks; validates the shape (throws kMalformedEncoding).
ElementSet decode_blocks(const BlockEncoding& enc);

}  // namespace oshlab
