#include "oshlab/family_io.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace oshlab {

SetFamily family_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets") ||
      !doc["n"].is_number_integer() || !doc["sets"].is_array()) {
    throw Error(Errc::kParseError,
                R"(expected an object {"n": <int>, "sets": [[...], ...]})");
  }
  long long n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(Errc::kInvalidParams,
                "ground size must be between 1 and 63, got " +
                    std::to_string(n));
  }
  std::vector<ElementSet> members;
  for (const nlohmann::json& row : doc["sets"]) {
    if (!row.is_array()) {
      throw Error(Errc::kParseError, "every entry of \"sets\" must be a list");
    }
    ElementSet s;
    for (const nlohmann::json& cell : row) {
      if (!cell.is_number_integer()) {
        throw Error(Errc::kParseError, "set elements must be integers");
      }
      long long e = cell.get<long long>();
      if (e < 1 || e > kMaxGroundSize) {
        throw Error(Errc::kElementOutOfRange,
                    "element " + std::to_string(e) +
                        " is outside [1, 63]");
      }
      if (s.has(static_cast<int>(e))) {
        throw Error(Errc::kDuplicateSet,
                    "element " + std::to_string(e) + " listed twice in a set");
      }
      s = s.with(static_cast<int>(e));
    }
    members.push_back(s);
  }
  return SetFamily::canonical(static_cast<int>(n), std::move(members));
}

std::string family_to_json(const SetFamily& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (ElementSet s : f.members) {
    sets.push_back(s.elements());
  }
  nlohmann::json doc;
  doc["n"] = f.n;
  doc["sets"] = std::move(sets);
  return doc.dump() + "\n";
}

std::string family_to_tsv(const SetFamily& f) {
  std::ostringstream out;
  for (ElementSet s : f.members) {
    bool first = true;
    for (int e : s.elements()) {
      if (!first) out << '\t';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

SetFamily load_family(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      throw Error(Errc::kParseError, "cannot open " + path);
    }
    buffer << in.rdbuf();
  }
  return family_from_json(buffer.str());
}

void save_text(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::kParseError, "cannot open " + path + " for writing");
  }
  out << text;
}

SetFamily random_family(int n, double q, std::uint64_t seed) {
  if (n < 1 || n > kDefaultEnumerationCap) {
    throw Error(Errc::kGroundTooLarge,
                "random families are limited to ground sizes up to " +
                    std::to_string(kDefaultEnumerationCap));
  }
  std::mt19937_64 rng(seed);
  std::vector<ElementSet> members;
  if (q >= 1.0) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      members.push_back(ElementSet(v));
    }
  } else if (q > 0.0) {
    // Integer threshold comparison keeps the draw bit-identical across
    // platforms, unlike the floating-point distribution adapters.
    auto threshold = static_cast<std::uint64_t>(
        q * 18446744073709551616.0);  // q * 2^64, q < 1
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      if (rng() < threshold) members.push_back(ElementSet(v));
    }
  }
  return SetFamily::canonical(n, std::move(members));
}

}  // namespace oshlab
