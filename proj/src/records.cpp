#include "meshpat/records.hpp"

#include "meshpat/errors.hpp"

namespace meshpat {

using nlohmann::json;

OutputRecord make_record(int n, std::string spec, std::string cls, const IntPoly& p, std::string provenance) {
  OutputRecord r;
  r.n = n;
  r.spec = std::move(spec);
  r.cls = std::move(cls);
  r.coeffs = p.coeff_strings();
  r.provenance = std::move(provenance);
  return r;
}

OutputRecord make_record(int n, std::string spec, std::string cls, const BiPoly& p, std::string provenance) {
  OutputRecord r;
  r.n = n;
  r.spec = std::move(spec);
  r.cls = std::move(cls);
  r.bivariate = true;
  for (const auto& row : p.coeffs()) {
    std::vector<std::string> s;
    for (const auto& c : row) s.push_back(c.str());
    r.coeffs2.push_back(std::move(s));
  }
  r.provenance = std::move(provenance);
  return r;
}

json to_json(const OutputRecord& r) {
  json j;
  j["n"] = r.n;
  j["spec"] = r.spec;
  j["class"] = r.cls;
  if (r.bivariate) {
    j["coeffs"] = r.coeffs2;
  } else {
    j["coeffs"] = r.coeffs;
  }
  j["provenance"] = r.provenance;
  return j;
}

OutputRecord record_from_json(const json& j) {
  try {
    OutputRecord r;
    r.n = j.at("n").get<int>();
    r.spec = j.at("spec").get<std::string>();
    r.cls = j.at("class").get<std::string>();
    const json& c = j.at("coeffs");
    if (!c.empty() && c.front().is_array()) {
      r.bivariate = true;
      r.coeffs2 = c.get<std::vector<std::vector<std::string>>>();
    } else {
      r.coeffs = c.get<std::vector<std::string>>();
    }
    r.provenance = j.at("provenance").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed record: ") + e.what());
  }
}

std::string render_json(const OutputRecord& r) { return to_json(r).dump(); }

OutputRecord parse_record(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed record: ") + e.what());
  }
  return record_from_json(j);
}

json report_to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks()) {
    json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["n"] = c.n ? json(*c.n) : json(nullptr);
    j["status"] = c.status();
    j["soft"] = c.soft;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  json out;
  out["passed"] = !rep.hard_failed();
  out["counts"] = {{"pass", rep.count(true, false) + rep.count(true, true)},
                   {"fail", rep.count(false, false)},
                   {"mismatch", rep.count(false, true)}};
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace meshpat
