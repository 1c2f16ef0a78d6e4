#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bigramsey/canonical.hpp"
#include "bigramsey/shapes.hpp"

namespace bigramsey {

using BigInt = boost::multiprecision::cpp_int;

enum class Mode { full, count_only };

struct EnumerationOptions {
  Mode mode = Mode::full;
  /// Upper bound on retained codes in full mode.
  std::size_t cap = 1'000'000;
  unsigned jobs = 1;
  /// Hypergraph family only.
  TieReading reading = TieReading::literal;
};

/// Deduplicated isomorphism classes for one family and one input.
struct Catalog {
  Family family = Family::devlin;
  std::size_t n = 0;
  /// Normalized input structure text for graph and hypergraph catalogs.
  std::string input;
  BigInt count = 0;
  bool retained = false;
  /// Sorted, present when `retained`.
  std::vector<CanonicalCode> codes;
  std::map<std::string, std::string> settings;
};

}  // namespace bigramsey
