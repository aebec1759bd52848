#pragma once

// Published distribution tables, used as golden values by the verify suites
// and the acceptance tests.

#include "meshpat/oracle.hpp"
#include "meshpat/pattern.hpp"

#include <string>
#include <vector>

namespace meshpat {

struct PublishedRow {
  int n = 0;
  std::vector<long long> coeffs;  // ascending powers of x
  /// The printed row contains a misprint; coeffs holds the repaired reading
  /// and the row is checked against the oracle rather than byte-for-byte.
  bool misprinted = false;
  std::string note;
  /// The printed coefficients, when the misprint is in the coefficients
  /// themselves rather than in the layout of the display.
  std::vector<long long> printed;
};

struct PublishedTable {
  std::string label;
  Pattern pattern;
  PermClass cls;
  std::vector<PublishedRow> rows;
};

const std::vector<PublishedTable>& published_tables();

}  // namespace meshpat
