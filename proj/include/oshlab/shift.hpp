#pragma once

// The element-wise down-shift operator, the full shift pass over the ground
// set, and the stage invariant relating intermediate shift stages to an
// ordered witness of the original family.

#include <vector>

#include "oshlab/core.hpp"
#include "oshlab/shatter.hpp"

namespace oshlab {

// One pass of the down-shift at element j: a member loses j exactly when it
// contains j and the result of removing j is not already a member. Membership
// is judged against the input family throughout the pass; the map is
// injective, so the result has the same size.
SetFamily shift_element(const SetFamily& f, int j);

// stages[0] is the input; stages[j] is the result of shifting at 1, ..., j.
struct ShiftTrace {
  std::vector<SetFamily> stages;
};

ShiftTrace shift_full(const SetFamily& f);

// The final stage of the full pass — a downset of the same size as f.
SetFamily osh_via_shift(const SetFamily& f);

// For a witness G_1, ..., G_{2^k} of target {s_1 < ... < s_k} extracted from
// stages[0]: for every cut h in [1, n+1], with i the index satisfying
// s_i < h <= s_{i+1} (s_0 = 0, s_{k+1} = n+1), every G_j restricted to
// {s_1, ..., s_i} ∪ [h, n] must be a member of stages[h-1].
bool check_stage_invariant(const ShiftTrace& trace, const ShatterWitness& w);
bool check_stage_invariant(const SetFamily& f, const ShatterWitness& w);

}  // namespace oshlab
