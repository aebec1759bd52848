#include "meshpat/cli.hpp"
#include "meshpat/egf_catalog.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/multivar.hpp"
#include "meshpat/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace meshpat;

namespace {

Pattern make_pattern(const std::optional<std::string>& spec, int kmax) {
  if (spec.has_value() == (kmax != 0)) throw InvalidInput("give exactly one of spec and kmax");
  if (kmax != 0) {
    if (kmax < 1) throw InvalidInput("kmax needs k >= 1");
    return KMax{kmax};
  }
  return QuadSpec::parse(*spec);
}

OracleOptions make_options(int cap, unsigned threads) {
  if (cap < 0 || cap > kHardCap) throw InvalidInput("cap must lie in 0.." + std::to_string(kHardCap));
  OracleOptions o;
  o.cap = cap;
  o.threads = threads;
  return o;
}

py::list to_ints(const std::vector<std::string>& coeffs) {
  py::list out;
  for (const auto& c : coeffs) out.append(py::int_(py::str(c)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_meshpat, m) {
  m.doc() = "Distributions of simple marked mesh patterns in permutations";

  py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def(
      "record_json",
      [](int n, std::optional<std::string> spec, int kmax, const std::string& cls, const std::string& via, bool q,
         int cap, unsigned threads) {
        DistRequest req;
        req.n = n;
        req.pattern = make_pattern(spec, kmax);
        req.cls = PermClass::parse(cls);
        req.via = via;
        req.bivariate = q;
        const auto opts = make_options(cap, threads);
        py::gil_scoped_release release;
        return render_json(compute_record(req, opts));
      },
      "n"_a, "spec"_a = py::none(), "kmax"_a = 0, "cls"_a = "all", "via"_a = "oracle", "q"_a = false, "cap"_a = 0,
      "threads"_a = 0u, "One distribution record as a JSON object.");

  m.def(
      "mmp",
      [](std::vector<int> word, std::optional<std::string> spec, int kmax) {
        return mmp_count(Permutation(std::move(word)), make_pattern(spec, kmax));
      },
      "word"_a, "spec"_a = py::none(), "kmax"_a = 0, "Number of entries of the permutation matching the pattern.");

  m.def(
      "series",
      [](const std::string& id, int order, int k) {
        if (order < 0) throw InvalidInput("order must be >= 0");
        const EgfSeries s = build_series(id, static_cast<std::size_t>(order), k);
        py::list out;
        for (const auto& t : s.terms()) out.append(to_ints(t.coeff_strings()));
        return out;
      },
      "id"_a, "order"_a, "k"_a = 0, "Coefficient polynomials P_0..P_order of sum P_m t^m/m!.");

  m.def("series_offset", &series_offset, "id"_a, "k"_a = 0);

  m.def("series_ids", [] {
    std::vector<std::string> ids;
    for (const auto& s : series_catalog()) ids.push_back(s.id);
    return ids;
  });

  m.def(
      "multivar",
      [](const std::string& engine, int n) {
        const auto e = MultivarEngine::parse(engine);
        if (n < 0 || n > kMaxMultivarN) throw InvalidInput("n must lie in 0.." + std::to_string(kMaxMultivarN));
        const MultiPoly f = e.run(n).back();
        py::list terms;
        for (const auto& [mono, c] : f.terms()) {
          py::tuple masks(e.families());
          for (int i = 0; i < e.families(); ++i) masks[static_cast<std::size_t>(i)] = mono.masks[static_cast<std::size_t>(i)];
          terms.append(py::make_tuple(masks, py::int_(py::str(c.str()))));
        }
        return py::dict("engine"_a = e.id(), "n"_a = n, "families"_a = e.family_names(),
                        "text"_a = f.to_string(e.family_names()), "terms"_a = terms,
                        "specialized"_a = to_ints(specialize(f).coeff_strings()));
      },
      "engine"_a, "n"_a, "Multivariate polynomial F_n of an insertion engine.");

  m.def(
      "verify_json",
      [](const std::string& suite, int max_n, int cap, unsigned threads) {
        VerifyOptions vo;
        vo.max_n = max_n;
        vo.oracle = make_options(cap, threads);
        py::gil_scoped_release release;
        return report_to_json(run_suite(suite, vo)).dump();
      },
      "suite"_a = "all", "max_n"_a = 8, "cap"_a = 0, "threads"_a = 0u);

  m.def("verify_suites", &verify_suites);

  m.def(
      "main",
      [](std::vector<std::string> args) {
        std::vector<const char*> argv{"meshpat"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(rc, out.str(), err.str());
      },
      "args"_a, "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
