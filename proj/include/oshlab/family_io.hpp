#pragma once

// Reading, writing, and sampling set families. The JSON document shape is
// {"n": 5, "sets": [[1,2],[3],[]]} with 1-based elements.

#include <cstdint>
#include <string>

#include "oshlab/core.hpp"

namespace oshlab {

// Parses a JSON document (throws kParseError on malformed input; element and
// duplicate problems surface as the usual validation errors).
SetFamily family_from_json(const std::string& text);

// Compact one-line JSON rendering, members in canonical order, trailing '\n'.
std::string family_to_json(const SetFamily& f);

// One member per line, elements ascending and tab-separated; the empty set
// renders as an empty line.
std::string family_to_tsv(const SetFamily& f);

// Reads a JSON family from a file, or from standard input when path == "-".
SetFamily load_family(const std::string& path);

// Writes text to a file, or to standard output when path == "-".
void save_text(const std::string& text, const std::string& path);

// Deterministic sample: every subset of [n] is kept independently with
// probability q (clamped to [0, 1]); identical (n, q, seed) triples always
// produce the identical family. Requires n <= kDefaultEnumerationCap.
SetFamily random_family(int n, double q, std::uint64_t seed);

}  // namespace oshlab
