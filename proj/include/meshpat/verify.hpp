#pragma once

// Verification suites: each compares independent computations (oracle,
// recursions, closed forms, multivariate engines, series pipelines, published
// tables) and records one Check per comparison.

#include "meshpat/oracle.hpp"
#include "meshpat/report.hpp"

#include <string>
#include <vector>

namespace meshpat {

struct VerifyOptions {
  /// Largest n compared against the oracle. Some suites use a smaller
  /// ceiling of their own (symmetry, q-analogues and direct multivariate
  /// construction stop at 7).
  int max_n = 8;
  OracleOptions oracle;
};

/// symmetry, closed-forms, qanalog, kmax, multivar, bclass, sequences, series.
const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". Throws InvalidInput for an
/// unknown name.
Report run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace meshpat
