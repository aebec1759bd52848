#include "meshpat/cli.hpp"

#include "meshpat/egf_catalog.hpp"
#include "meshpat/errors.hpp"
#include "meshpat/multivar.hpp"
#include "meshpat/recursions.hpp"
#include "meshpat/verify.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace meshpat {

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidInput(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text, "--n");
    return {n, n};
  }
  const int lo = parse_int(std::string_view(text).substr(0, dots), "--n");
  const int hi = parse_int(std::string_view(text).substr(dots + 2), "--n");
  if (lo > hi) throw InvalidInput("empty range for --n: '" + text + "'");
  return {lo, hi};
}

// The left and right sub-patterns for permutations containing the block,
// provided every block entry is forced not to match.
std::optional<std::pair<QuadSpec, QuadSpec>> block_halves(const QuadSpec& spec, const BlockPattern& block) {
  std::vector<int> beta, alpha;
  bool in_bottom = false;
  for (const auto& t : block.tokens()) {
    if (t.top) {
      if (in_bottom) return std::nullopt;
      beta.push_back(t.offset);
    } else {
      in_bottom = true;
      alpha.push_back(t.offset);
    }
  }
  if (beta.empty() || alpha.empty()) return std::nullopt;
  const int k = static_cast<int>(beta.size());
  const int l = static_cast<int>(alpha.size());
  std::vector<int> red_beta, red_alpha;
  for (int o : beta) red_beta.push_back(k - o);
  for (int o : alpha) red_alpha.push_back(o + 1);
  Permutation pb, pa;
  try {
    pb = Permutation(red_beta);
    pa = Permutation(red_alpha);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  for (const auto& b : spec.q) {
    if (b.kind() != Bound::Kind::AtLeast) return std::nullopt;
  }
  const int a = spec.q[0].value();
  const int b = spec.q[2].value();
  if (spec.q[1].value() == 0 && spec.q[3].value() == 0 && a >= 1 && b >= 1 && k >= a && l >= b &&
      mmp_count(pb, QuadSpec::at_least(a, 0, 0, 0)) == 0 && mmp_count(pa, QuadSpec::at_least(0, 0, b, 0)) == 0) {
    return std::pair{QuadSpec::at_least(0, 0, b, 0), QuadSpec::at_least(a, 0, 0, 0)};
  }
  if (spec == QuadSpec::at_least(1, 0, 1, 1) && mmp_count(pb, QuadSpec::at_least(1, 0, 0, 0)) == 0 &&
      mmp_count(pa, QuadSpec::at_least(0, 0, 1, 1)) == 0) {
    return std::pair{QuadSpec::at_least(0, 0, 1, 0), QuadSpec::at_least(1, 0, 0, 1)};
  }
  return std::nullopt;
}

std::optional<MultivarEngine> engine_for(const QuadSpec& spec) {
  std::vector<MultivarEngine> engines = {MultivarEngine::f1010(), MultivarEngine::g2020(), MultivarEngine::f1011(),
                                         MultivarEngine::h1111()};
  for (int a = 2; a <= 6; ++a) engines.push_back(MultivarEngine::f10a0(a));
  const auto orbit = quad_orbit(spec);
  for (const auto& e : engines) {
    if (std::find(orbit.begin(), orbit.end(), e.target()) != orbit.end()) return e;
  }
  return std::nullopt;
}

[[noreturn]] void no_route(const DistRequest& req) {
  throw InvalidInput("no " + req.via + " route for " + pattern_string(req.pattern) + " over class " +
                     req.cls.to_string() + "; use --via oracle");
}

}  // namespace

OutputRecord compute_record(const DistRequest& req, const OracleOptions& opts) {
  const int n = req.n;
  if (n < 0) throw InvalidInput("n must be >= 0");
  const std::string spec = pattern_string(req.pattern);
  const std::string cls = req.cls.to_string();
  const auto* qs = std::get_if<QuadSpec>(&req.pattern);
  const auto* km = std::get_if<KMax>(&req.pattern);
  const bool all = req.cls.kind() == PermClass::Kind::All;

  if (req.via != "oracle" && req.via != "recursion" && req.via != "closed" && req.via != "multivar") {
    throw InvalidInput("unknown route '" + req.via + "' (oracle, recursion, closed, multivar)");
  }
  if (req.via != "oracle") {
    const int cap = opts.cap > 0 ? opts.cap : (all ? kDefaultCapAll : kDefaultCapRestricted);
    if (n > cap) throw ResourceLimit("n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }

  if (req.bivariate) {
    if (!qs || !all) throw InvalidInput("--q needs a quadrant spec over the class 'all'");
    if (req.via == "oracle") return make_record(n, spec, cls, q_distribution(n, *qs, opts), "oracle");
    const auto& q = qs->q;
    const bool plain = std::all_of(q.begin(), q.end(), [](const Bound& b) { return b.kind() == Bound::Kind::AtLeast; });
    const bool closed = req.via == "closed";
    if (plain && q[2].value() == 0 && q[3].value() == 0 && q[0].value() >= 1 && req.via != "multivar") {
      const int a = q[0].value();
      const int b = q[1].value();
      if (b == 0) {
        return make_record(n, spec, cls, closed ? q_r_k000_closed(a, n) : q_r_k000(a, n),
                           req.via + ":q_r_k000(k=" + std::to_string(a) + ")");
      }
      return make_record(n, spec, cls, closed ? q_r_ab00_closed(a, b, n) : q_r_ab00(a, b, n),
                         req.via + ":q_r_ab00(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")");
    }
    no_route(req);
  }

  if (req.via == "oracle") return make_record(n, spec, cls, distribution(n, req.pattern, req.cls, opts), "oracle");

  if (req.via == "multivar") {
    if (!qs || !all) no_route(req);
    const auto engine = engine_for(*qs);
    if (!engine) no_route(req);
    const auto runs = engine->run(n);
    return make_record(n, spec, cls, specialize(runs.back()), "multivar:" + engine->id());
  }

  const bool closed = req.via == "closed";
  if (km) {
    if (!all) no_route(req);
    const std::string k = std::to_string(km->k);
    if (closed) {
      return make_record(n, spec, cls, build_series("R_kmax", static_cast<std::size_t>(n), km->k).term(n),
                         "closed:R_kmax(k=" + k + ")");
    }
    return make_record(n, spec, cls, r_kmax(km->k, n).back(), "recursion:r_kmax(k=" + k + ")");
  }
  switch (req.cls.kind()) {
    case PermClass::Kind::All: {
      const auto kd = closed ? known_closed_form(*qs, n) : known_distribution(*qs, n);
      if (!kd) no_route(req);
      return make_record(n, spec, cls, kd->poly, req.via + ":" + kd->id);
    }
    case PermClass::Kind::OneBeforeN: {
      if (n < 2) throw InvalidInput("the class one-before-n needs n >= 2");
      if (*qs == QuadSpec::at_least(1, 0, 1, 0)) {
        return make_record(n, spec, cls, closed ? b1010_closed(n) : b1010(n), req.via + ":b1010");
      }
      if (*qs == QuadSpec::at_least(1, 0, 1, 1)) {
        return make_record(n, spec, cls, closed ? b1011_closed(n) : b1011(n), req.via + ":b1011");
      }
      no_route(req);
    }
    case PermClass::Kind::Block: {
      const auto halves = block_halves(*qs, req.cls.block_pattern());
      if (closed || !halves) no_route(req);
      req.cls.block_pattern().resolve(n);
      return make_record(n, spec, cls,
                         block_conv(halves->first, halves->second, req.cls.block_pattern().length(), n),
                         "recursion:block_conv(" + halves->first.to_string() + ";" + halves->second.to_string() + ")");
    }
  }
  no_route(req);
}

int resolve_cap(std::optional<int> flag, std::ostream& warn) {
  int cap = 0;
  if (const char* env = std::getenv("MESHPAT_CAP"); env && *env) cap = parse_int(env, "MESHPAT_CAP");
  if (flag) cap = *flag;
  if (cap < 0) throw InvalidInput("the cap must be positive");
  if (cap > kHardCap) {
    throw InvalidInput("cap " + std::to_string(cap) + " is above the hard ceiling " + std::to_string(kHardCap));
  }
  if (cap > kDefaultCapAll) {
    warn << "warning: cap " << cap << " allows enumerations of up to " << cap
         << "! permutations; expect long runtimes\n";
  }
  return cap;
}

namespace {

struct Common {
  std::optional<int> cap;
  unsigned threads = 0;
};

struct PatternArgs {
  std::string spec;
  int kmax = 0;
  std::string cls = "all";
  std::string via = "oracle";

  Pattern pattern() const {
    if (spec.empty() == (kmax == 0)) throw InvalidInput("give exactly one of --spec and --kmax");
    if (kmax != 0) {
      if (kmax < 1) throw InvalidInput("--kmax needs k >= 1");
      return KMax{kmax};
    }
    return QuadSpec::parse(spec);
  }
};

void add_pattern_options(CLI::App* cmd, PatternArgs& p) {
  cmd->add_option("--spec", p.spec, "Quadrant bounds a,b,c,d; tokens k, ge:k, eq:k, empty");
  cmd->add_option("--kmax", p.kmax, "Use the k<=max pattern with this k");
  cmd->add_option("--class", p.cls, "all | one-before-n | block:<descriptor>");
  cmd->add_option("--via", p.via, "oracle | recursion | closed | multivar");
}

std::string pad_right(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

void print_records(const std::vector<OutputRecord>& recs, const std::string& format, std::ostream& out) {
  if (format == "json") {
    for (const auto& r : recs) out << render_json(r) << '\n';
    return;
  }
  if (format == "csv") {
    std::size_t width = 0;
    for (const auto& r : recs) {
      if (r.bivariate) throw InvalidInput("bivariate records are only available as json");
      width = std::max(width, r.coeffs.size());
    }
    out << "n,spec,class";
    for (std::size_t i = 0; i < width; ++i) out << ",c" << i;
    out << '\n';
    for (const auto& r : recs) {
      out << r.n << ",\"" << r.spec << "\"," << r.cls;
      for (std::size_t i = 0; i < width; ++i) out << ',' << (i < r.coeffs.size() ? r.coeffs[i] : "0");
      out << '\n';
    }
    return;
  }
  if (recs.empty()) return;
  out << "# spec " << recs.front().spec << "  class " << recs.front().cls << "  provenance "
      << recs.front().provenance << '\n';
  for (const auto& r : recs) {
    std::string poly;
    if (r.bivariate) {
      std::vector<std::vector<BigInt>> rows;
      for (const auto& row : r.coeffs2) {
        std::vector<BigInt> v;
        for (const auto& c : row) v.emplace_back(c);
        rows.push_back(std::move(v));
      }
      poly = BiPoly(std::move(rows)).to_string();
    } else {
      std::vector<BigInt> v;
      for (const auto& c : r.coeffs) v.emplace_back(c);
      poly = IntPoly(std::move(v)).to_string();
    }
    out << pad_right("n=" + std::to_string(r.n), 6) << poly << '\n';
  }
}

BigInt extract(const IntPoly& p, const std::string& how) {
  if (how == "eval0") return p.eval(0);
  if (how == "top") return p.leading_coefficient();
  if (how.starts_with("eval@")) return p.eval(parse_int(std::string_view(how).substr(5), "--extract value"));
  if (how.starts_with("coeff:")) {
    const int k = parse_int(std::string_view(how).substr(6), "--extract coefficient");
    if (k < 0) throw InvalidInput("coefficient index must be >= 0");
    return p.coefficient(static_cast<std::size_t>(k));
  }
  throw InvalidInput("unknown extraction '" + how + "' (eval0, eval@v, coeff:k, top)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributions of simple marked mesh patterns in permutations", "meshpat"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--cap", common.cap, "Largest n for brute-force enumeration (default 10, hard ceiling 12)");
  app.add_option("--threads", common.threads, "Worker threads for enumeration (default: all cores)");

  // dist
  auto* dist = app.add_subcommand("dist", "Distribution polynomials R_n(x)");
  std::string n_text;
  PatternArgs dist_pat;
  bool bivariate = false;
  std::string format = "table";
  dist->add_option("--n", n_text, "n or a range lo..hi")->required();
  add_pattern_options(dist, dist_pat);
  dist->add_flag("--q", bivariate, "Joint distribution with coinversions (x,q)");
  dist->add_option("--format", format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::string suite = "all";
  int verify_max_n = 8;
  bool failures_only = false;
  verify->add_option("--suite", suite, "symmetry | closed-forms | qanalog | kmax | multivar | bclass | sequences | "
                                       "series | all");
  verify->add_option("--max-n", verify_max_n, "Largest n compared against the oracle");
  verify->add_flag("--failures-only", failures_only, "List only failing and mismatching checks");

  // seq
  auto* seq = app.add_subcommand("seq", "Integer sequence extracted from R_n(x)");
  PatternArgs seq_pat;
  std::string how = "eval0";
  int seq_max_n = 8;
  int seq_min_n = 1;
  std::string sep = ",";
  add_pattern_options(seq, seq_pat);
  seq->add_option("--extract", how, "eval0 | eval@v | coeff:k | top");
  seq->add_option("--max-n", seq_max_n, "Last n");
  seq->add_option("--min-n", seq_min_n, "First n");
  seq->add_option("--sep", sep, "Separator between terms");

  // series
  auto* series = app.add_subcommand("series", "Coefficients P_n of a generating function sum P_n t^n/n!");
  std::string series_id;
  int order = 8;
  int series_k = 0;
  std::string series_format = "table";
  bool list = false;
  series->add_option("--id", series_id, "Series identifier (see --list)");
  series->add_option("--order", order, "Truncation order");
  series->add_option("--k", series_k, "Parameter k where the series takes one");
  series->add_option("--format", series_format, "json | table")->check(CLI::IsMember({"json", "table"}));
  series->add_flag("--list", list, "List the available series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    OracleOptions opts;
    opts.cap = resolve_cap(common.cap, err);
    opts.threads = common.threads;

    if (*dist) {
      const auto [lo, hi] = parse_n_range(n_text);
      DistRequest req;
      req.pattern = dist_pat.pattern();
      req.cls = PermClass::parse(dist_pat.cls);
      req.bivariate = bivariate;
      req.via = dist_pat.via;
      std::vector<OutputRecord> recs;
      for (int n = lo; n <= hi; ++n) {
        req.n = n;
        recs.push_back(compute_record(req, opts));
      }
      print_records(recs, format, out);
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions vo;
      vo.max_n = verify_max_n;
      vo.oracle = opts;
      const Report rep = run_suite(suite, vo);
      nlohmann::json j = report_to_json(rep);
      j["suite"] = suite;
      j["max_n"] = verify_max_n;
      if (failures_only) {
        nlohmann::json kept = nlohmann::json::array();
        for (auto& c : j["checks"]) {
          if (c["status"] != "pass") kept.push_back(c);
        }
        j["checks"] = std::move(kept);
      }
      out << j.dump(2) << '\n';
      return rep.hard_failed() ? kExitVerifyFailed : kExitOk;
    }

    if (*seq) {
      if (seq_min_n < 0 || seq_min_n > seq_max_n) throw InvalidInput("need 0 <= --min-n <= --max-n");
      DistRequest req;
      req.pattern = seq_pat.pattern();
      req.cls = PermClass::parse(seq_pat.cls);
      req.via = seq_pat.via;
      std::vector<std::string> terms;
      for (int n = seq_min_n; n <= seq_max_n; ++n) {
        req.n = n;
        const OutputRecord r = compute_record(req, opts);
        std::vector<BigInt> v;
        for (const auto& c : r.coeffs) v.emplace_back(c);
        terms.push_back(extract(IntPoly(std::move(v)), how).str());
      }
      for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? sep : "") << terms[i];
      out << '\n';
      return kExitOk;
    }

    if (*series) {
      if (list) {
        for (const auto& s : series_catalog()) {
          out << pad_right(s.id, 16) << (s.uses_k ? "k>=" + std::to_string(s.min_k) + "  " : "      ")
              << s.description << '\n';
        }
        return kExitOk;
      }
      if (series_id.empty()) throw InvalidInput("--id is required (see --list)");
      if (order < 0) throw InvalidInput("--order must be >= 0");
      const EgfSeries s = build_series(series_id, static_cast<std::size_t>(order), series_k);
      const int offset = series_offset(series_id, series_k);
      if (series_format == "json") {
        nlohmann::json j;
        j["id"] = series_id;
        j["k"] = series_k;
        j["order"] = order;
        j["offset"] = offset;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : s.terms()) terms.push_back(t.coeff_strings());
        j["terms"] = std::move(terms);
        out << j.dump() << '\n';
      } else {
        out << "# " << series_id << (series_k ? " k=" + std::to_string(series_k) : "")
            << "  sum_m P_m t^m/m!, term m belongs to n = m + " << offset << '\n';
        for (std::size_t m = 0; m < s.terms().size(); ++m) {
          out << pad_right("m=" + std::to_string(m), 6) << s.term(m).to_string() << '\n';
        }
      }
      return kExitOk;
    }
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace meshpat
