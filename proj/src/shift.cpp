#include "oshlab/shift.hpp"

#include <algorithm>

namespace oshlab {

SetFamily shift_element(const SetFamily& f, int j) {
  if (j < 1 || j > f.n) {
    throw Error(Errc::kInvalidElement,
                "shift element " + std::to_string(j) + " outside [1, " +
                    std::to_string(f.n) + "]");
  }
  std::vector<ElementSet> out;
  out.reserve(f.members.size());
  for (ElementSet m : f.members) {
    if (m.has(j) && !f.contains(m.without(j))) {
      out.push_back(m.without(j));
    } else {
      out.push_back(m);
    }
  }
  SetFamily shifted = SetFamily::canonical(f.n, std::move(out));
  if (shifted.size() != f.size()) {
    throw Error(Errc::kInvalidParams, "shift pass changed the family size");
  }
  return shifted;
}

ShiftTrace shift_full(const SetFamily& f) {
  ShiftTrace trace;
  trace.stages.reserve(static_cast<std::size_t>(f.n) + 1);
  trace.stages.push_back(f);
  for (int j = 1; j <= f.n; ++j) {
    trace.stages.push_back(shift_element(trace.stages.back(), j));
  }
  return trace;
}

SetFamily osh_via_shift(const SetFamily& f) {
  SetFamily cur = f;
  for (int j = 1; j <= f.n; ++j) cur = shift_element(cur, j);
  return cur;
}

bool check_stage_invariant(const ShiftTrace& trace, const ShatterWitness& w) {
  if (trace.stages.empty()) return false;
  int n = trace.stages.front().n;
  std::vector<int> elems = w.target.elements();
  int k = static_cast<int>(elems.size());
  for (int h = 1; h <= n + 1; ++h) {
    int i = 0;
    while (i < k && elems[i] < h) ++i;  // i satisfies s_i < h <= s_{i+1}
    ElementSet kept;
    for (int t = 0; t < i; ++t) kept = kept.with(elems[t]);
    if (h <= n) kept = kept.union_with(ElementSet::range(h, n));
    const SetFamily& stage = trace.stages[static_cast<std::size_t>(h - 1)];
    for (ElementSet g : w.ordered) {
      if (!stage.contains(g.intersect(kept))) return false;
    }
  }
  return true;
}

bool check_stage_invariant(const SetFamily& f, const ShatterWitness& w) {
  return check_stage_invariant(shift_full(f), w);
}

}  // namespace oshlab
