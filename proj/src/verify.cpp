#include "oshlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "oshlab/family_io.hpp"
#include "oshlab/shatter.hpp"
#include "oshlab/shift.hpp"
#include "oshlab/sperner.hpp"
#include "oshlab/twolevel.hpp"

namespace oshlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double kDensities[] = {0.10, 0.25, 0.50, 0.75, 0.90};

std::uint64_t trial_seed(const VerifyOptions& opt, int n, int t) {
  return splitmix64(opt.seed ^ splitmix64((std::uint64_t(n) << 32) ^
                                          std::uint64_t(t)));
}

struct CorpusTag {
  bool random = false;
  int n = 0;
  std::uint64_t index = 0;  // family mask (exhaustive) or trial (random)
  double density = 0.0;
};

std::string describe(const CorpusTag& tag) {
  std::ostringstream out;
  if (tag.random) {
    out << "random family (n=" << tag.n << ", trial=" << tag.index
        << ", density=" << tag.density << ")";
  } else {
    out << "family mask " << tag.index << " over [" << tag.n << "]";
  }
  return out.str();
}

// Visits every family over [1]..[4] (when opt.exhaustive) and then `trials`
// seeded random families per ground size. Stops early when fn returns false.
template <class Fn>
void walk_corpus(const VerifyOptions& opt, int trials, Fn&& fn) {
  if (opt.exhaustive) {
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<ElementSet> members;
        for (int v = 0; v < (1 << n); ++v) {
          if ((mask >> v) & 1u) members.push_back(ElementSet(std::uint64_t(v)));
        }
        if (!fn(SetFamily::canonical(n, std::move(members)),
                CorpusTag{false, n, mask, 0.0})) {
          return;
        }
      }
    }
  }
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    for (int t = 0; t < trials; ++t) {
      double q = kDensities[t % 5];
      SetFamily f = random_family(n, q, trial_seed(opt, n, t));
      if (!fn(std::move(f), CorpusTag{true, n, std::uint64_t(t), q})) return;
    }
  }
}

struct Failure {
  bool failed = false;
  std::string detail;

  void note(const std::string& d) {
    if (!failed) {
      failed = true;
      detail = d;
    }
  }
};

bool subfamily(const SetFamily& inner, const SetFamily& outer) {
  return std::includes(outer.members.begin(), outer.members.end(),
                       inner.members.begin(), inner.members.end(),
                       [](ElementSet a, ElementSet b) {
                         return canonical_less(a, b);
                       });
}

SuiteReport finish(SuiteReport r, const Failure& fail, Clock::time_point t0,
                   const std::string& pass_note) {
  r.passed = !fail.failed;
  r.detail = fail.failed ? fail.detail : pass_note;
  r.seconds = elapsed(t0);
  return r;
}

// Shared parameter grid for the two-level suites.
template <class Fn>
void walk_two_level(int n_max, int d_min, Fn&& fn) {
  for (int n = 2; n <= n_max; ++n) {
    for (int d = d_min; d <= n; ++d) {
      for (int a = 0; a + d <= n; ++a) {
        if (!fn(TwoLevelParams{n, a, d})) return;
      }
    }
  }
}

std::string params_text(const TwoLevelParams& p) {
  return "(n=" + std::to_string(p.n) + ", a=" + std::to_string(p.a) +
         ", d=" + std::to_string(p.d) + ")";
}

}  // namespace

SuiteReport verify_shift_closure(const VerifyOptions& opt) {
  SuiteReport r;
  r.suite = "shift-closure";
  auto t0 = Clock::now();
  Failure fail;
  walk_corpus(opt, opt.trials, [&](const SetFamily& f, const CorpusTag& tag) {
    ++r.checked;
    if (!(osh_via_shift(f) == osh_direct(f))) {
      fail.note("iterated shifts disagree with the direct closure on " +
                describe(tag));
      return false;
    }
    return true;
  });
  return finish(std::move(r), fail, t0,
                "iterated element shifts reproduce the direct closure");
}

SuiteReport verify_closure_laws(const VerifyOptions& opt) {
  SuiteReport r;
  r.suite = "closure-laws";
  auto t0 = Clock::now();
  Failure fail;
  walk_corpus(opt, opt.trials, [&](const SetFamily& f, const CorpusTag& tag) {
    ++r.checked;
    SetFamily sh = sh_all(f);
    SetFamily st = st_all(f);
    SetFamily osh = osh_direct(f);
    auto law = [&](bool cond, const char* what) {
      if (!cond) fail.note(std::string(what) + " fails on " + describe(tag));
      return cond;
    };
    bool ok =
        law(osh.size() == f.size(), "closure size preservation") &&
        law(subfamily(st, osh), "strong traces inside the closure") &&
        law(subfamily(osh, sh), "closure inside the shattered sets") &&
        law(st.size() <= f.size(), "strong-trace count bound") &&
        law(f.size() <= sh.size(), "shattered-set count bound") &&
        law(is_downset(sh) && is_downset(st) && is_downset(osh),
            "downset property of the trace collections") &&
        law(osh_direct(osh) == osh, "idempotence of the closure") &&
        law(osh_direct(complement_family(f)) == osh,
            "complement invariance of the closure");
    return ok;
  });
  return finish(std::move(r), fail, t0,
                "size, inclusion, downset, idempotence and complement laws "
                "hold");
}

SuiteReport verify_witness_construction(const VerifyOptions& opt) {
  SuiteReport r;
  r.suite = "witness-construction";
  auto t0 = Clock::now();
  Failure fail;
  for (std::uint64_t mask = 0; mask < 256 && !fail.failed; ++mask) {
    for (int ell = 1; ell <= 3 && !fail.failed; ++ell) {
      ElementSet a(mask);
      if (!criterion_holds(a, ell)) continue;
      std::string inst = "target " + to_string(a) + ", chain bound " +
                         std::to_string(ell);
      try {
        SpernerWitness w = construct_sperner_witness(a, ell, opt.max_ground);
        ++r.checked;
        if (w.target != a || w.ell != ell) {
          fail.note("construction returned the wrong target for " + inst);
        } else if (w.family.n > opt.max_ground) {
          fail.note("construction exceeded the ground cap for " + inst);
        } else if (w.family.size() != (std::size_t{1} << a.count())) {
          fail.note("constructed family has the wrong size for " + inst);
        } else if (!is_l_sperner(w.family, ell)) {
          fail.note("constructed family has a too-long chain for " + inst);
        } else if (!order_shatters(w.family, a)) {
          fail.note("constructed family does not order-shatter " + inst);
        }
      } catch (const Error& e) {
        if (e.code() == Errc::kGroundTooLarge) {
          ++r.skipped;
        } else {
          fail.note("construction failed for " + inst + ": " + e.what());
        }
      }
    }
  }
  return finish(std::move(r), fail, t0,
                "every criterion-satisfying target over [8] got a verified "
                "witness (ground cap " +
                    std::to_string(opt.max_ground) + ")");
}

SuiteReport verify_witness_nonexistence(const VerifyOptions& opt) {
  (void)opt;
  SuiteReport r;
  r.suite = "witness-nonexistence";
  auto t0 = Clock::now();
  Failure fail;
  for (std::uint64_t mask = 0; mask < 32 && !fail.failed; ++mask) {
    ElementSet a(mask);
    if (criterion_holds(a, 1)) continue;
    ++r.checked;
    if (!exhaustive_nonexistence(a, 5, 1)) {
      fail.note("an antichain over [5] order-shatters " + to_string(a) +
                " although its dyadic sum reaches 1");
    }
  }
  for (int ell = 1; ell <= 2 && !fail.failed; ++ell) {
    for (std::uint64_t mask = 0; mask < 16 && !fail.failed; ++mask) {
      ElementSet a(mask);
      std::string inst =
          to_string(a) + " with chain bound " + std::to_string(ell);
      bool none = exhaustive_nonexistence(a, 4, ell);
      ++r.checked;
      if (!none && !criterion_holds(a, ell)) {
        fail.note("a witness over [4] exists for " + inst +
                  " although the criterion fails");
        break;
      }
      if (criterion_holds(a, ell)) {
        try {
          construct_sperner_witness(a, ell, 4);
          if (none) {
            fail.note("a witness fits inside [4] for " + inst +
                      " but the exhaustive search found none");
          }
        } catch (const Error& e) {
          if (e.code() != Errc::kGroundTooLarge) {
            fail.note("construction failed for " + inst + ": " + e.what());
          }
        }
      }
    }
  }
  return finish(std::move(r), fail, t0,
                "exhaustive searches over [4] and [5] agree with the dyadic "
                "criterion");
}

SuiteReport verify_consecutive_levels(const VerifyOptions& opt) {
  (void)opt;
  SuiteReport r;
  r.suite = "consecutive-levels";
  auto t0 = Clock::now();
  Failure fail;
  for (int n = 1; n <= 12 && !fail.failed; ++n) {
    for (int ell = 1; ell <= 4 && !fail.failed; ++ell) {
      for (int k = ell - 1; k <= n && !fail.failed; ++k) {
        std::vector<int> sizes;
        for (int i = k - ell + 1; i <= k; ++i) sizes.push_back(i);
        SetFamily brute = osh_via_shift(level_union(n, sizes));
        std::string inst = "levels " + std::to_string(k - ell + 1) + ".." +
                           std::to_string(k) + " of [" + std::to_string(n) +
                           "]";
        ++r.checked;
        if (!(osh_consecutive_levels(n, k, ell, 12) == brute)) {
          fail.note("ballot formula disagrees with the closure for " + inst);
        } else if (osh_consecutive_levels_size(n, k, ell) != brute.size()) {
          fail.note("cardinality formula is wrong for " + inst);
        }
      }
    }
  }
  return finish(std::move(r), fail, t0,
                "ballot membership and binomial cardinality match the "
                "closure for all level runs with n <= 12, ell <= 4");
}

SuiteReport verify_two_level_minimals(const VerifyOptions& opt) {
  (void)opt;
  SuiteReport r;
  r.suite = "two-level-minimals";
  auto t0 = Clock::now();
  Failure fail;
  walk_two_level(12, 2, [&](const TwoLevelParams& p) {
    TwoLevelMembership membership(p);
    SetFamily brute = osh_via_shift(two_level_family(p));
    std::vector<char> in_closure(std::size_t{1} << p.n, 0);
    for (ElementSet s : brute.members) in_closure[s.bits] = 1;
    ++r.checked;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << p.n); ++v) {
      if (membership.contains(ElementSet(v)) != (in_closure[v] != 0)) {
        fail.note("minimal-set membership disagrees with the closure at " +
                  to_string(ElementSet(v)) + " for " + params_text(p));
        return false;
      }
    }
    for (const MinimalOshSet& m : membership.minimal_sets()) {
      if (!in_closure[m.set.bits]) {
        fail.note("listed set " + to_string(m.set) +
                  " is not in the closure for " + params_text(p));
        return false;
      }
      for (ElementSet s : brute.members) {
        if (s.count() == m.set.count() && s != m.set && prec_leq(s, m.set)) {
          fail.note("listed set " + to_string(m.set) +
                    " is dominated by the member " + to_string(s) + " for " +
                    params_text(p));
          return false;
        }
      }
    }
    return true;
  });
  return finish(std::move(r), fail, t0,
                "minimal-set membership matches the closure for every level "
                "pair with n <= 12");
}

SuiteReport verify_structural_invariants(const VerifyOptions& opt) {
  SuiteReport r;
  r.suite = "structural-invariants";
  auto t0 = Clock::now();
  Failure fail;

  walk_corpus(opt, opt.invariant_prefix,
              [&](const SetFamily& f, const CorpusTag& tag) {
                ShiftTrace trace = shift_full(f);
                ShatterEngine engine(f);
                for (ElementSet s : trace.stages.back().members) {
                  auto ordered = engine.extract(s);
                  if (!ordered) {
                    fail.note("no witness for closure member " + to_string(s) +
                              " of " + describe(tag));
                    return false;
                  }
                  ShatterWitness w{f.n, s, std::move(*ordered)};
                  if (!verify_standard_order(w)) {
                    fail.note("extracted witness violates the standard order "
                              "for " +
                              to_string(s) + " of " + describe(tag));
                    return false;
                  }
                  if (!check_stage_invariant(trace, w)) {
                    fail.note("shift stages lose the witness trace for " +
                              to_string(s) + " of " + describe(tag));
                    return false;
                  }
                  ++r.checked;
                }
                return true;
              });

  if (!fail.failed) {
    walk_two_level(12, 2, [&](const TwoLevelParams& p) {
      SetFamily family = two_level_family(p);
      SetFamily brute = osh_via_shift(family);
      std::vector<char> in_closure(std::size_t{1} << p.n, 0);
      for (ElementSet s : brute.members) in_closure[s.bits] = 1;

      int bound = tmin_bound(p);
      for (ElementSet s : brute.members) {
        int t = t_min(s);
        if (t >= 1 && t > bound) {
          fail.note("closure member " + to_string(s) +
                    " exceeds the ballot-defect bound for " + params_text(p));
          return false;
        }
      }
      ++r.checked;

      if (p.d >= 3) {
        for (int m = 1; 2 * m + 1 <= p.n; ++m) {
          ElementSet bad;
          for (int i = 1; i <= m; ++i) bad = bad.with(2 * i);
          bad = bad.with(2 * m + 1);
          if (in_closure[bad.bits]) {
            fail.note("even prefix plus its successor " + to_string(bad) +
                      " wrongly belongs to the closure for " +
                      params_text(p));
            return false;
          }
        }
        ShatterEngine engine(family);
        for (const MinimalOshSet& m : minimal_osh_sets(p)) {
          if (m.p1 < 1 || m.kind == MinimalSetKind::kOddPrefix ||
              m.kind == MinimalSetKind::kPairThenEvens) {
            continue;
          }
          auto ordered = engine.extract(m.set);
          if (!ordered) {
            fail.note("no witness for the minimal set " + to_string(m.set) +
                      " in " + params_text(p));
            return false;
          }
          SetFamily w = SetFamily::canonical(p.n, std::move(*ordered));
          if (!equal_prefix_check(w, m.p1)) {
            fail.note("a witness for " + to_string(m.set) +
                      " meets the even prefix unevenly in " + params_text(p));
            return false;
          }
          ++r.checked;
        }
        for (const MinimalOshSet& m : minimal_osh_sets(p)) {
          SetFamily built;
          try {
            switch (m.kind) {
              case MinimalSetKind::kFullRun:
                built = witness_full_run(p, m.p1, m.p2);
                break;
              case MinimalSetKind::kShortRun:
                built = witness_short_run(p, m.p1, m.p2);
                break;
              case MinimalSetKind::kRunThenEvens:
                built = witness_run_then_evens(p, m.p1, m.p2);
                break;
              default:
                continue;
            }
          } catch (const Error& e) {
            fail.note("witness construction failed for " + to_string(m.set) +
                      " in " + params_text(p) + ": " + e.what());
            return false;
          }
          if (!subfamily(built, family)) {
            fail.note("constructed witness for " + to_string(m.set) +
                      " leaves the level pair in " + params_text(p));
            return false;
          }
          if (!order_shatters(built, m.set)) {
            fail.note("constructed witness fails to order-shatter " +
                      to_string(m.set) + " in " + params_text(p));
            return false;
          }
          ++r.checked;
        }
      }
      return true;
    });
  }

  return finish(std::move(r), fail, t0,
                "standard-order witnesses, shift-stage traces, and the "
                "two-level structure properties all hold");
}

std::vector<SuiteReport> verify_all(const VerifyOptions& opt) {
  return {verify_shift_closure(opt),        verify_closure_laws(opt),
          verify_witness_construction(opt), verify_witness_nonexistence(opt),
          verify_consecutive_levels(opt),   verify_two_level_minimals(opt),
          verify_structural_invariants(opt)};
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "shift-closure",        "closure-laws",
      "witness-construction", "witness-nonexistence",
      "consecutive-levels",   "two-level-minimals",
      "structural-invariants"};
  return names;
}

SuiteReport run_verify_suite(const std::string& name,
                             const VerifyOptions& opt) {
  if (name == "shift-closure") return verify_shift_closure(opt);
  if (name == "closure-laws") return verify_closure_laws(opt);
  if (name == "witness-construction") return verify_witness_construction(opt);
  if (name == "witness-nonexistence")
    return verify_witness_nonexistence(opt);
  if (name == "consecutive-levels") return verify_consecutive_levels(opt);
  if (name == "two-level-minimals") return verify_two_level_minimals(opt);
  if (name == "structural-invariants")
    return verify_structural_invariants(opt);
  throw Error(Errc::kInvalidParams, "unknown verification suite: " + name);
}

}  // namespace oshlab
