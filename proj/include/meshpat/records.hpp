#pragma once

// Output records shared by the CLI and the Python bindings.

#include "meshpat/poly.hpp"
#include "meshpat/report.hpp"

#include "json.hpp"
#include <string>
#include <vector>

namespace meshpat {

struct OutputRecord {
  int n = 0;
  std::string spec;
  std::string cls = "all";
  /// Ascending coefficients in x as decimal strings; for bivariate records
  /// this is empty and coeffs2 holds rows indexed [x][q].
  std::vector<std::string> coeffs;
  std::vector<std::vector<std::string>> coeffs2;
  bool bivariate = false;
  std::string provenance = "oracle";

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(int n, std::string spec, std::string cls, const IntPoly& p, std::string provenance);
OutputRecord make_record(int n, std::string spec, std::string cls, const BiPoly& p, std::string provenance);

nlohmann::json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);
/// One compact JSON object, no trailing newline.
std::string render_json(const OutputRecord& r);
OutputRecord parse_record(const std::string& text);

nlohmann::json report_to_json(const Report& rep);

}  // namespace meshpat
