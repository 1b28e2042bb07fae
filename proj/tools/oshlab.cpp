// Command-line front end for the order-shattering library: closure
// computations, shift traces, chain-bounded witness construction, two-level
// closure descriptions, and the self-verification suites.

#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oshlab/family_io.hpp"
#include "oshlab/shatter.hpp"
#include "oshlab/shift.hpp"
#include "oshlab/sperner.hpp"
#include "oshlab/twolevel.hpp"
#include "oshlab/verify.hpp"

namespace {

using namespace oshlab;

ElementSet parse_set(const std::string& text) {
  ElementSet s;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    size_t begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    size_t end = token.find_last_not_of(" \t");
    int e = 0;
    try {
      e = std::stoi(token.substr(begin, end - begin + 1));
    } catch (const std::exception&) {
      throw Error(Errc::kParseError, "cannot parse element '" + token + "'");
    }
    if (e < 1 || e > kMaxGroundSize) {
      throw Error(Errc::kElementOutOfRange,
                  "element " + std::to_string(e) + " is outside [1, 63]");
    }
    if (s.has(e)) {
      throw Error(Errc::kDuplicateSet,
                  "element " + std::to_string(e) + " listed twice");
    }
    s = s.with(e);
  }
  return s;
}

std::string render_family(const SetFamily& f, const std::string& format) {
  return format == "tsv" ? family_to_tsv(f) : family_to_json(f);
}

nlohmann::json family_sets_json(const SetFamily& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (ElementSet s : f.members) sets.push_back(s.elements());
  return sets;
}

const char* kind_name(MinimalSetKind k) {
  switch (k) {
    case MinimalSetKind::kOddPrefix:
      return "odd-prefix";
    case MinimalSetKind::kEmpty:
      return "empty";
    case MinimalSetKind::kSingleEven:
      return "single-even";
    case MinimalSetKind::kEvenOddPair:
      return "even-odd-pair";
    case MinimalSetKind::kPairThenEvens:
      return "pair-then-evens";
    case MinimalSetKind::kEvenPrefix:
      return "even-prefix";
    case MinimalSetKind::kShortRun:
      return "short-run";
    case MinimalSetKind::kFullRun:
      return "full-run";
    case MinimalSetKind::kRunThenEvens:
      return "run-then-evens";
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-shattering closures, shifts, and chain-bounded "
               "witnesses"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path = "-";
  std::string format = "json";
  int max_ground = kDefaultEnumerationCap;
  std::string set_text;
  int ell = 1;

  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("--in", in_path,
                      "input family file, '-' for standard input")
          ->capture_default_str();
    }
    cmd->add_option("-o,--out", out_path,
                    "output file, '-' for standard output")
        ->capture_default_str();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
  };

  // closures ------------------------------------------------------------
  std::string closure_kind;
  CLI::App* closures =
      app.add_subcommand("closures",
                         "compute a trace collection of an input family");
  closures
      ->add_option("kind", closure_kind,
                   "one of: sh (shattered sets), st (strong traces), "
                   "osh-direct (closure by definition), osh-shift (closure "
                   "by iterated shifts)")
      ->required()
      ->check(CLI::IsMember({"sh", "st", "osh-direct", "osh-shift"}));
  add_io(closures, true);
  closures
      ->add_option("--max-ground", max_ground,
                   "largest ground size accepted for enumeration")
      ->envname("OSHLAB_MAX_GROUND")
      ->capture_default_str();

  // shift ----------------------------------------------------------------
  CLI::App* shift_cmd = app.add_subcommand(
      "shift", "print every stage of the element-by-element shift");
  add_io(shift_cmd, true);

  // sperner ----------------------------------------------------------------
  CLI::App* sperner =
      app.add_subcommand("sperner", "chain-bounded witness families");
  sperner->require_subcommand(1);
  CLI::App* criterion = sperner->add_subcommand(
      "criterion", "evaluate the dyadic criterion sum for a target set");
  criterion->add_option("--set", set_text, "target set, e.g. 2,3")
      ->capture_default_str();
  criterion->add_option("--ell", ell, "chain length bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI::App* construct = sperner->add_subcommand(
      "construct", "build a verified witness family for a target set");
  construct->add_option("--set", set_text, "target set, e.g. 2,3")
      ->capture_default_str();
  construct->add_option("--ell", ell, "chain length bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_io(construct, false);
  construct
      ->add_option("--max-ground", max_ground,
                   "largest ground size the construction may use")
      ->envname("OSHLAB_MAX_GROUND")
      ->capture_default_str();

  // twolevel ---------------------------------------------------------------
  CLI::App* twolevel =
      app.add_subcommand("twolevel", "closures of two complete levels");
  twolevel->require_subcommand(1);
  int tl_n = 1, tl_a = 0, tl_d = 1, tl_k = 0;
  bool count_only = false;
  CLI::App* minimal = twolevel->add_subcommand(
      "minimal", "list the dominance-minimal closure members");
  minimal->add_option("--n", tl_n, "ground size")->required();
  minimal->add_option("--a", tl_a, "lower level")->required();
  minimal->add_option("--d", tl_d, "level distance")->required();
  add_io(minimal, false);
  CLI::App* member = twolevel->add_subcommand(
      "member", "test closure membership of one set");
  member->add_option("--n", tl_n, "ground size")->required();
  member->add_option("--a", tl_a, "lower level")->required();
  member->add_option("--d", tl_d, "level distance")->required();
  member->add_option("--set", set_text, "set to test, e.g. 3,5")
      ->capture_default_str();
  CLI::App* consecutive = twolevel->add_subcommand(
      "consecutive", "closure of a run of consecutive levels");
  consecutive->add_option("--n", tl_n, "ground size")->required();
  consecutive->add_option("--k", tl_k, "highest level")->required();
  consecutive->add_option("--ell", ell, "number of consecutive levels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  consecutive->add_flag("--count-only", count_only,
                        "print only the closure cardinality");
  add_io(consecutive, false);
  consecutive
      ->add_option("--max-ground", max_ground,
                   "largest ground size accepted for enumeration")
      ->envname("OSHLAB_MAX_GROUND")
      ->capture_default_str();

  // verify -------------------------------------------------------------
  CLI::App* verify =
      app.add_subcommand("verify", "run the self-verification suites");
  std::vector<std::string> suite_names;
  VerifyOptions vopt;
  verify
      ->add_option("suites", suite_names,
                   "suites to run (default: all); known: shift-closure, "
                   "closure-laws, witness-construction, "
                   "witness-nonexistence, consecutive-levels, "
                   "two-level-minimals, structural-invariants")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--trials", vopt.trials, "random families per ground")
      ->capture_default_str();
  verify->add_option("--seed", vopt.seed, "corpus seed")
      ->capture_default_str();
  verify->add_option("--n-max", vopt.n_max, "largest random ground size")
      ->capture_default_str();
  verify
      ->add_option("--max-ground", vopt.max_ground,
                   "ground cap for constructed witnesses")
      ->capture_default_str();
  verify
      ->add_option("--invariant-prefix", vopt.invariant_prefix,
                   "random families per ground size receiving the deep "
                   "per-member checks")
      ->capture_default_str();
  verify->add_flag("--exhaustive,!--no-exhaustive", vopt.exhaustive,
                   "sweep every family over [1]..[4]");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*closures) {
      SetFamily f = load_family(in_path);
      SetFamily result;
      if (closure_kind == "sh") {
        result = sh_all(f, max_ground);
      } else if (closure_kind == "st") {
        result = st_all(f, max_ground);
      } else if (closure_kind == "osh-direct") {
        result = osh_direct(f, max_ground);
      } else {
        result = osh_via_shift(f);
      }
      save_text(render_family(result, format), out_path);
      return 0;
    }

    if (*shift_cmd) {
      SetFamily f = load_family(in_path);
      ShiftTrace trace = shift_full(f);
      if (format == "tsv") {
        std::ostringstream out;
        for (std::size_t i = 0; i < trace.stages.size(); ++i) {
          out << "# stage " << i
              << (i == 0 ? " (input)"
                         : " (after shifting element " + std::to_string(i) +
                               ")")
              << "\n"
              << family_to_tsv(trace.stages[i]);
        }
        save_text(out.str(), out_path);
      } else {
        nlohmann::json doc;
        doc["n"] = f.n;
        nlohmann::json stages = nlohmann::json::array();
        for (const SetFamily& stage : trace.stages) {
          stages.push_back(family_sets_json(stage));
        }
        doc["stages"] = std::move(stages);
        save_text(doc.dump() + "\n", out_path);
      }
      return 0;
    }

    if (*criterion) {
      ElementSet a = parse_set(set_text);
      DyadicRational sum = criterion_sum(a);
      bool holds = criterion_holds(a, ell);
      std::cout << "sum = " << sum.to_string() << "\n"
                << "criterion " << (holds ? "holds" : "fails")
                << " for chain bound " << ell << "\n";
      return holds ? 0 : 2;
    }

    if (*construct) {
      ElementSet a = parse_set(set_text);
      SpernerWitness w = construct_sperner_witness(a, ell, max_ground);
      if (format == "tsv") {
        save_text(family_to_tsv(w.family), out_path);
      } else {
        nlohmann::json doc;
        doc["target"] = a.elements();
        doc["ell"] = ell;
        doc["sum"] = criterion_sum(a).to_string();
        doc["n"] = w.family.n;
        doc["sets"] = family_sets_json(w.family);
        save_text(doc.dump() + "\n", out_path);
      }
      return 0;
    }

    if (*minimal) {
      TwoLevelParams p{tl_n, tl_a, tl_d};
      std::vector<MinimalOshSet> sets = minimal_osh_sets(p);
      if (format == "tsv") {
        std::ostringstream out;
        for (const MinimalOshSet& m : sets) {
          out << to_string(m.set) << '\t' << kind_name(m.kind) << '\t'
              << "t_min=" << m.tmin << '\n';
        }
        save_text(out.str(), out_path);
      } else {
        nlohmann::json doc;
        doc["n"] = p.n;
        doc["a"] = p.a;
        doc["d"] = p.d;
        nlohmann::json rows = nlohmann::json::array();
        for (const MinimalOshSet& m : sets) {
          nlohmann::json row;
          row["set"] = m.set.elements();
          row["kind"] = kind_name(m.kind);
          row["p1"] = m.p1;
          row["p2"] = m.p2;
          row["t_min"] = m.tmin;
          rows.push_back(std::move(row));
        }
        doc["minimal"] = std::move(rows);
        save_text(doc.dump() + "\n", out_path);
      }
      return 0;
    }

    if (*member) {
      TwoLevelParams p{tl_n, tl_a, tl_d};
      ElementSet s = parse_set(set_text);
      TwoLevelMembership membership(p);
      if (membership.contains(s)) {
        for (const MinimalOshSet& m : membership.minimal_sets()) {
          if (m.set.count() == s.count() && prec_leq(m.set, s)) {
            std::cout << "member: " << to_string(s)
                      << " dominates the minimal set " << to_string(m.set)
                      << "\n";
            break;
          }
        }
        return 0;
      }
      std::cout << "not a member: " << to_string(s)
                << " dominates no minimal set of its size\n";
      return 2;
    }

    if (*consecutive) {
      if (count_only) {
        std::cout << osh_consecutive_levels_size(tl_n, tl_k, ell) << "\n";
        return 0;
      }
      SetFamily result = osh_consecutive_levels(tl_n, tl_k, ell, max_ground);
      save_text(render_family(result, format), out_path);
      return 0;
    }

    if (*verify) {
      std::vector<SuiteReport> reports;
      if (suite_names.empty()) {
        reports = verify_all(vopt);
      } else {
        for (const std::string& name : suite_names) {
          reports.push_back(run_verify_suite(name, vopt));
        }
      }
      bool all_passed = true;
      for (const SuiteReport& rep : reports) {
        all_passed = all_passed && rep.passed;
        std::cout << (rep.passed ? "[PASS] " : "[FAIL] ") << rep.suite << ": "
                  << rep.detail << " (checked " << rep.checked;
        if (rep.skipped > 0) std::cout << ", skipped " << rep.skipped;
        std::cout << ", " << std::fixed << std::setprecision(2) << rep.seconds
                  << "s)\n";
      }
      return all_passed ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::kCriterionFails ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
