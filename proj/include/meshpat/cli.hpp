#pragma once

#include "meshpat/oracle.hpp"
#include "meshpat/pattern.hpp"
#include "meshpat/records.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace meshpat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kHardCap = 12;

struct DistRequest {
  int n = 0;
  Pattern pattern;
  PermClass cls;
  bool bivariate = false;
  /// oracle | recursion | closed | multivar
  std::string via = "oracle";
};

/// Computes one distribution record. Throws InvalidInput when the requested
/// route does not cover the pattern/class, ResourceLimit past the cap.
OutputRecord compute_record(const DistRequest& req, const OracleOptions& opts = {});

/// Resolves the enumeration cap from the flag, then MESHPAT_CAP, then the
/// class defaults (0). Throws InvalidInput above the hard ceiling; writes a
/// runtime warning to warn for caps above 10.
int resolve_cap(std::optional<int> flag, std::ostream& warn);

/// Entry point of the meshpat tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meshpat
