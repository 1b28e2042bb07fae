#include "oshlab/shatter.hpp"

#include <algorithm>
#include <bit>

namespace oshlab {

namespace {

void require_inside_ground(const SetFamily& f, ElementSet s) {
  if (!s.subset_of(ElementSet::full(f.n))) {
    throw Error(Errc::kElementOutOfRange,
                "target " + to_string(s) + " not inside [1, " +
                    std::to_string(f.n) + "]");
  }
}

void require_enumerable(const SetFamily& f, int cap) {
  if (f.n > cap) {
    throw Error(Errc::kGroundTooLarge,
                "ground size " + std::to_string(f.n) +
                    " exceeds enumeration cap " + std::to_string(cap));
  }
}

// Index of m ∩ s within the 2^|s| subsets of s, low element = low bit.
std::uint64_t compress_trace(std::uint64_t m, std::uint64_t s) {
  std::uint64_t idx = 0;
  int out = 0;
  for (std::uint64_t rest = s; rest != 0; rest &= rest - 1, ++out) {
    if (m & rest & (~rest + 1)) idx |= std::uint64_t{1} << out;
  }
  return idx;
}

}  // namespace

bool shatters(const SetFamily& f, ElementSet s) {
  require_inside_ground(f, s);
  int k = s.count();
  if (f.members.size() < (std::uint64_t{1} << std::min(k, 63))) return false;
  std::vector<std::uint64_t> seen((std::size_t{1} << k) / 64 + 1, 0);
  std::uint64_t found = 0, want = std::uint64_t{1} << k;
  for (ElementSet m : f.members) {
    std::uint64_t idx = compress_trace(m.bits, s.bits);
    std::uint64_t& word = seen[idx >> 6];
    std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (!(word & bit)) {
      word |= bit;
      if (++found == want) return true;
    }
  }
  return false;
}

SetFamily sh_all(const SetFamily& f, int cap) {
  require_enumerable(f, cap);
  std::vector<ElementSet> hits;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.n); ++s) {
    if (shatters(f, ElementSet(s))) hits.push_back(ElementSet(s));
  }
  return SetFamily::canonical(f.n, std::move(hits));
}

bool strongly_traces(const SetFamily& f, ElementSet s) {
  require_inside_ground(f, s);
  int k = s.count();
  std::uint64_t want = std::uint64_t{1} << std::min(k, 63);
  if (f.members.size() < want) return false;
  // Members sharing m \ s = B are pairwise distinct, hence have pairwise
  // distinct traces on s; a bucket of size 2^|s| therefore realizes them all.
  std::unordered_map<std::uint64_t, std::uint64_t> bucket;
  bucket.reserve(f.members.size() * 2);
  for (ElementSet m : f.members) {
    if (++bucket[m.bits & ~s.bits] == want) return true;
  }
  return false;
}

SetFamily st_all(const SetFamily& f, int cap) {
  require_enumerable(f, cap);
  std::vector<ElementSet> hits;
  // One flat probe table reused across targets (open addressing, epoch
  // stamped) — st_all runs over 2^n targets and per-target maps get costly.
  std::size_t slots = 1;
  while (slots < f.members.size() * 2 + 2) slots <<= 1;
  std::vector<std::uint64_t> key(slots, 0);
  std::vector<std::uint32_t> stamp(slots, 0), cnt(slots, 0);
  std::uint32_t epoch = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.n); ++s) {
    int k = std::popcount(s);
    std::uint64_t want = std::uint64_t{1} << k;
    if (f.members.size() < want) continue;
    ++epoch;
    bool hit = false;
    for (ElementSet m : f.members) {
      std::uint64_t b = m.bits & ~s;
      std::size_t at = (b * 0x9e3779b97f4a7c15ull) & (slots - 1);
      while (stamp[at] == epoch && key[at] != b) at = (at + 1) & (slots - 1);
      if (stamp[at] != epoch) {
        stamp[at] = epoch;
        key[at] = b;
        cnt[at] = 0;
      }
      if (++cnt[at] == want) {
        hit = true;
        break;
      }
    }
    if (hit) hits.push_back(ElementSet(s));
  }
  return SetFamily::canonical(f.n, std::move(hits));
}

ShatterEngine::ShatterEngine(const SetFamily& f) {
  buf_.reserve(f.members.size());
  for (ElementSet m : f.members) buf_.push_back(m.bits);
  std::sort(buf_.begin(), buf_.end());
}

bool ShatterEngine::order_shatters(ElementSet target) {
  return check(0, static_cast<std::uint32_t>(buf_.size()), target.bits);
}

bool ShatterEngine::check(std::uint32_t begin, std::uint32_t end,
                          std::uint64_t target) {
  if (target == 0) return end > begin;
  int k = std::popcount(target);
  if (std::uint64_t{end - begin} < (std::uint64_t{1} << k)) return false;
  Key memo_key{begin, end, target};
  if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

  int p = 63 - std::countl_zero(target);  // 0-based top bit of the target
  std::uint64_t bit_p = std::uint64_t{1} << p;
  std::uint64_t high = (p >= 63) ? 0 : (~std::uint64_t{0} << (p + 1));
  std::uint64_t rest = target ^ bit_p;
  std::uint64_t half = std::uint64_t{1} << (k - 1);

  bool ok = false;
  std::uint32_t i = begin;
  while (i < end) {
    std::uint64_t cls = buf_[i] & high;
    std::uint32_t j = i;
    while (j < end && (buf_[j] & high) == cls) ++j;
    // The slice is numerically sorted, so within a class the members
    // avoiding p form a prefix.
    std::uint32_t mid = static_cast<std::uint32_t>(
        std::partition_point(buf_.begin() + i, buf_.begin() + j,
                             [&](std::uint64_t v) { return !(v & bit_p); }) -
        buf_.begin());
    if (std::uint64_t{mid - i} >= half && std::uint64_t{j - mid} >= half &&
        check(i, mid, rest) && check(mid, j, rest)) {
      ok = true;
      break;
    }
    i = j;
  }
  memo_.emplace(memo_key, ok);
  return ok;
}

void ShatterEngine::extract_rec(std::uint32_t begin, std::uint32_t end,
                                std::uint64_t target,
                                std::vector<std::uint64_t>& out) {
  if (target == 0) {
    std::uint64_t best = buf_[begin];
    for (std::uint32_t i = begin + 1; i < end; ++i) {
      if (canonical_less(ElementSet(buf_[i]), ElementSet(best))) {
        best = buf_[i];
      }
    }
    out.push_back(best);
    return;
  }
  int p = 63 - std::countl_zero(target);
  std::uint64_t bit_p = std::uint64_t{1} << p;
  std::uint64_t high = (p >= 63) ? 0 : (~std::uint64_t{0} << (p + 1));
  std::uint64_t rest = target ^ bit_p;

  std::uint32_t i = begin;
  while (i < end) {
    std::uint64_t cls = buf_[i] & high;
    std::uint32_t j = i;
    while (j < end && (buf_[j] & high) == cls) ++j;
    std::uint32_t mid = static_cast<std::uint32_t>(
        std::partition_point(buf_.begin() + i, buf_.begin() + j,
                             [&](std::uint64_t v) { return !(v & bit_p); }) -
        buf_.begin());
    if (mid > i && mid < j && check(i, mid, rest) && check(mid, j, rest)) {
      extract_rec(i, mid, rest, out);
      extract_rec(mid, j, rest, out);
      return;
    }
    i = j;
  }
  throw Error(Errc::kInvalidParams, "extraction on a non-shattered target");
}

std::optional<std::vector<ElementSet>> ShatterEngine::extract(
    ElementSet target) {
  std::uint32_t size = static_cast<std::uint32_t>(buf_.size());
  if (!check(0, size, target.bits)) return std::nullopt;
  std::vector<std::uint64_t> raw;
  raw.reserve(std::size_t{1} << target.count());
  extract_rec(0, size, target.bits, raw);
  std::vector<ElementSet> out;
  out.reserve(raw.size());
  for (std::uint64_t v : raw) out.push_back(ElementSet(v));
  return out;
}

bool order_shatters(const SetFamily& f, ElementSet s) {
  require_inside_ground(f, s);
  ShatterEngine engine(f);
  return engine.order_shatters(s);
}

SetFamily osh_direct(const SetFamily& f, int cap) {
  require_enumerable(f, cap);
  ShatterEngine engine(f);
  std::vector<ElementSet> hits;
  hits.reserve(f.members.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.n); ++s) {
    if (engine.order_shatters(ElementSet(s))) hits.push_back(ElementSet(s));
  }
  return SetFamily::canonical(f.n, std::move(hits));
}

std::optional<ShatterWitness> extract_witness(const SetFamily& f,
                                              ElementSet s) {
  require_inside_ground(f, s);
  ShatterEngine engine(f);
  auto ordered = engine.extract(s);
  if (!ordered) return std::nullopt;
  return ShatterWitness{f.n, s, std::move(*ordered)};
}

bool verify_standard_order(const ShatterWitness& w) {
  int k = w.target.count();
  if (w.ordered.size() != (std::size_t{1} << k)) return false;
  ElementSet ground = ElementSet::full(w.n);
  if (!w.target.subset_of(ground)) return false;
  for (ElementSet m : w.ordered) {
    if (!m.subset_of(ground)) return false;
  }
  // Membership pattern: member j realizes the binary trace j-1 on the target.
  for (std::size_t j = 0; j < w.ordered.size(); ++j) {
    if (compress_trace(w.ordered[j].bits, w.target.bits) != j) return false;
  }
  // Aligned blocks of 2^i consecutive members agree above the i-th element.
  std::vector<int> elems = w.target.elements();
  for (int i = 1; i <= k; ++i) {
    int s_i = elems[i - 1];
    std::uint64_t above =
        (s_i >= 64) ? 0 : (~std::uint64_t{0} << s_i);  // bits for > s_i
    std::size_t block = std::size_t{1} << i;
    for (std::size_t base = 0; base < w.ordered.size(); base += block) {
      std::uint64_t want = w.ordered[base].bits & above;
      for (std::size_t j = 1; j < block; ++j) {
        if ((w.ordered[base + j].bits & above) != want) return false;
      }
    }
  }
  return true;
}

}  // namespace oshlab
