#include "oshlab/core.hpp"

#include <algorithm>
#include <sstream>

namespace oshlab {

ElementSet ElementSet::single(int e) {
  if (e < 1 || e > kMaxGroundSize) {
    throw Error(Errc::kInvalidElement,
                "element " + std::to_string(e) + " outside [1, 63]");
  }
  return ElementSet(std::uint64_t{1} << (e - 1));
}

ElementSet ElementSet::range(int lo, int hi) {
  if (lo > hi) return {};
  if (lo < 1 || hi > kMaxGroundSize) {
    throw Error(Errc::kInvalidElement,
                "range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] outside [1, 63]");
  }
  std::uint64_t width = static_cast<std::uint64_t>(hi - lo + 1);
  std::uint64_t run = (width == 64) ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << width) - 1;
  return ElementSet(run << (lo - 1));
}

ElementSet ElementSet::with(int e) const {
  return union_with(single(e));
}

ElementSet ElementSet::without(int e) const {
  return minus(single(e));
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

bool canonical_less(ElementSet a, ElementSet b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.bits < b.bits;
}

bool prec_leq(ElementSet a, ElementSet b) {
  if (a.count() != b.count()) return false;
  // With equal sizes, s_i <= t_i for all i is equivalent to: every prefix
  // [1, m] of the ground set contains at least as many elements of a as of b.
  std::uint64_t ra = a.bits, rb = b.bits;
  while (rb != 0) {
    int ta = std::countr_zero(ra);
    int tb = std::countr_zero(rb);
    if (ta > tb) return false;
    ra &= ra - 1;
    rb &= rb - 1;
  }
  return true;
}

std::string to_string(ElementSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

SetFamily SetFamily::canonical(int n, std::vector<ElementSet> members) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(Errc::kInvalidParams,
                "ground size " + std::to_string(n) + " outside [1, 63]");
  }
  ElementSet ground = ElementSet::full(n);
  for (ElementSet m : members) {
    if (!m.subset_of(ground)) {
      throw Error(Errc::kElementOutOfRange,
                  "member " + to_string(m) + " not inside [1, " +
                      std::to_string(n) + "]");
    }
  }
  std::sort(members.begin(), members.end(), canonical_less);
  auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end()) {
    throw Error(Errc::kDuplicateSet, "duplicate member " + to_string(*dup));
  }
  SetFamily f;
  f.n = n;
  f.members = std::move(members);
  return f;
}

bool SetFamily::contains(ElementSet s) const {
  return std::binary_search(members.begin(), members.end(), s, canonical_less);
}

SetFamily complete_level(int n, int size) {
  if (size < 0 || size > n) {
    throw Error(Errc::kInvalidParams,
                "level " + std::to_string(size) + " outside [0, n]");
  }
  std::vector<ElementSet> members;
  // Walk subsets of the given size in increasing bitmask order (Gosper).
  if (size == 0) {
    members.push_back({});
  } else {
    std::uint64_t v = (std::uint64_t{1} << size) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
      members.push_back(ElementSet(v));
      std::uint64_t t = v | (v - 1);
      v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
  }
  return SetFamily::canonical(n, std::move(members));
}

SetFamily level_union(int n, const std::vector<int>& sizes) {
  std::vector<ElementSet> members;
  for (int s : sizes) {
    SetFamily lvl = complete_level(n, s);
    members.insert(members.end(), lvl.members.begin(), lvl.members.end());
  }
  return SetFamily::canonical(n, std::move(members));
}

SetFamily complement_family(const SetFamily& f) {
  std::vector<ElementSet> members;
  members.reserve(f.members.size());
  for (ElementSet m : f.members) members.push_back(m.complement_in(f.n));
  return SetFamily::canonical(f.n, std::move(members));
}

int longest_chain(const SetFamily& f) {
  // Members are in canonical order, so any strict superset comes later.
  std::vector<int> best(f.members.size(), 1);
  int overall = f.members.empty() ? 0 : 1;
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (f.members[j].subset_of(f.members[i]) &&
          f.members[j] != f.members[i] && best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
      }
    }
    overall = std::max(overall, best[i]);
  }
  return overall;
}

bool is_l_sperner(const SetFamily& f, int ell) {
  if (ell < 0) throw Error(Errc::kInvalidParams, "negative chain bound");
  return longest_chain(f) <= ell;
}

bool is_downset(const SetFamily& f) {
  for (ElementSet m : f.members) {
    for (std::uint64_t rest = m.bits; rest != 0; rest &= rest - 1) {
      ElementSet sub(m.bits & ~(rest & (~rest + 1)));
      if (!f.contains(sub)) return false;
    }
  }
  return true;
}

DyadicRational DyadicRational::inverse_pow2(unsigned e) {
  DyadicRational r;
  r.num = 1;
  r.log2_den = e;
  return r;
}

void DyadicRational::reduce() {
  if (num == 0) {
    log2_den = 0;
    return;
  }
  while (log2_den > 0 && (num & 1) == 0) {
    num >>= 1;
    --log2_den;
  }
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  unsigned den = std::max(log2_den, o.log2_den);
  num = (num << (den - log2_den)) + (o.num << (den - o.log2_den));
  log2_den = den;
  reduce();
  return *this;
}

bool DyadicRational::less_than(unsigned v) const {
  return num < (boost::multiprecision::cpp_int(v) << log2_den);
}

bool DyadicRational::equals(unsigned v) const {
  return num == (boost::multiprecision::cpp_int(v) << log2_den);
}

std::string DyadicRational::to_string() const {
  boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1)
                                       << log2_den;
  return num.str() + "/" + den.str();
}

BlockEncoding encode_blocks(ElementSet a) {
  if (a.empty()) {
    throw Error(Errc::kEmptySet, "cannot block-encode the empty set");
  }
  BlockEncoding enc;
  int prev_end = 0;  // end of the previous run (0 before the first)
  std::vector<int> elems = a.elements();
  std::size_t i = 0;
  while (i < elems.size()) {
    int start = elems[i];
    std::size_t j = i;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    enc.blocks.emplace_back(start - prev_end - 1, elems[j] - start + 1);
    prev_end = elems[j];
    i = j + 1;
  }
  return enc;
}

ElementSet decode_blocks(const BlockEncoding& enc) {
  if (enc.blocks.empty()) {
    throw Error(Errc::kMalformedEncoding, "empty block list");
  }
  ElementSet out;
  int pos = 0;
  for (std::size_t i = 0; i < enc.blocks.size(); ++i) {
    auto [gap, run] = enc.blocks[i];
    if (run < 1 || gap < 0 || (i > 0 && gap < 1)) {
      throw Error(Errc::kMalformedEncoding,
                  "block " + std::to_string(i) + " has gap " +
                      std::to_string(gap) + ", run " + std::to_string(run));
    }
    int start = pos + gap + 1;
    int end = start + run - 1;
    if (end > kMaxGroundSize) {
      throw Error(Errc::kMalformedEncoding, "decoded set exceeds element 63");
    }
    out = out.union_with(ElementSet::range(start, end));
    pos = end;
  }
  return out;
}

}  // namespace oshlab
