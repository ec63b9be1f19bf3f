#include "picardlab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "picardlab/constructions.hpp"
#include "picardlab/curve_lab.hpp"
#include "picardlab/errors.hpp"
#include "picardlab/figure.hpp"
#include "picardlab/geography.hpp"
#include "picardlab/poly_parser.hpp"
#include "picardlab/report_json.hpp"

namespace picardlab {

namespace {

// Usage problems detected after CLI11 parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("expected an integer, got '" + text + "'");
  return v;
}

// "m=2..8,n=4,6,8": values attach to the most recent key.
std::map<char, std::vector<int>> parse_sweep(const std::string& spec) {
  std::map<char, std::vector<int>> out;
  char key = 0;
  for (std::string token : split(spec, ',')) {
    if (token.size() >= 2 && token[1] == '=') {
      key = token[0];
      if (key != 'm' && key != 'n') throw UsageError("sweep keys are m and n, got '" + token + "'");
      if (out.count(key)) throw UsageError(std::string("sweep key ") + key + " given twice");
      out[key];
      token = token.substr(2);
    }
    if (!key) throw UsageError("sweep must start with m= or n=");
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      out[key].push_back(parse_int(token));
      continue;
    }
    const int lo = parse_int(token.substr(0, dots));
    const int hi = parse_int(token.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range " + token);
    for (int v = lo; v <= hi; ++v) out[key].push_back(v);
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << content;
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

long chi_cap() {
  const char* env = std::getenv("PICARDLAB_CHI_MAX");
  if (!env || !*env) return kDefaultChiCap;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string(env).size() && v >= 3) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("PICARDLAB_CHI_MAX must be an integer >= 3, got '") + env + "'");
}

std::string failing_fields(const ConstructionReport& r) {
  std::vector<std::string> f;
  if (!r.match) f.push_back("match");
  if (!r.ample) f.push_back("ample");
  if (!r.maximal) f.push_back("maximal");
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? ", " : "") + f[i];
  return out;
}

void print_table(std::ostream& out, const std::vector<ConstructionReport>& reports) {
  out << "thm  params          K2      chi      p_g  q      h11    lower  match ample maximal\n";
  for (const auto& r : reports) {
    std::ostringstream line;
    const auto col = [&line](const std::string& s, std::size_t w) {
      line << s;
      for (std::size_t i = s.size(); i < w; ++i) line << ' ';
    };
    col(std::to_string(r.params.theorem), 5);
    col(r.params.to_string(), 16);
    col(to_string(r.computed.K2), 8);
    col(to_string(r.computed.chi), 9);
    col(to_string(r.computed.p_g), 5);
    col(to_string(r.computed.q), 7);
    col(to_string(r.h11), 7);
    col(to_string(r.picard_lower), 7);
    col(r.match ? "yes" : "NO", 6);
    col(r.ample ? "yes" : "NO", 6);
    line << (r.maximal ? "yes" : "NO");
    out << line.str() << "\n";
  }
}

struct VerifyOptions {
  int theorem = 0;
  std::optional<int> m;
  std::optional<int> n;
  std::string sweep;
  std::string out_path;
};

int cmd_verify_theorem(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<TheoremParams> params;
  if (!o.sweep.empty()) {
    if (o.m || o.n) throw UsageError("--sweep cannot be combined with --m or --n");
    auto sweep = parse_sweep(o.sweep);
    if (!sweep.count('n')) throw UsageError("sweep needs n values");
    if (o.theorem == 1) {
      if (sweep.count('m')) throw UsageError("Theorem 1 takes no m parameter");
      for (int n : sweep['n']) params.push_back({1, std::nullopt, n});
    } else {
      if (!sweep.count('m')) throw UsageError("sweep needs m values");
      for (int m : sweep['m']) {
        for (int n : sweep['n']) params.push_back({o.theorem, m, n});
      }
    }
  } else {
    if (!o.n) throw UsageError("--n is required (or --sweep)");
    params.push_back({o.theorem, o.m, *o.n});
  }
  std::sort(params.begin(), params.end(), [](const TheoremParams& a, const TheoremParams& b) {
    return std::pair(a.m.value_or(0), a.n) < std::pair(b.m.value_or(0), b.n);
  });
  for (const auto& p : params) check_parameters(p);

  std::vector<ConstructionReport> reports;
  for (const auto& p : params) reports.push_back(build(p));

  if (reports.size() == 1) {
    out << format_report(reports.front());
  } else {
    print_table(out, reports);
    out << reports.size() << " reports\n";
  }

  if (!o.out_path.empty()) {
    Json doc;
    if (reports.size() == 1) {
      doc = report_to_json(reports.front());
    } else {
      doc = Json::array();
      for (const auto& r : reports) doc.push_back(report_to_json(r));
    }
    write_file(o.out_path, serialize(doc));
  }

  int status = kExitOk;
  for (const auto& r : reports) {
    if (r.certified()) continue;
    err << "certification failed for Theorem " << r.params.theorem << " (" << r.params.to_string()
        << "): " << failing_fields(r) << "\n";
    status = kExitFailure;
  }
  return status;
}

struct GeographyOptions {
  std::optional<long> chi_max;
  std::string emit;
  std::string sets;
  std::string out_dir = ".";
  bool claims = false;
};

int cmd_geography(const GeographyOptions& o, std::ostream& out, std::ostream& err) {
  const long cap = chi_cap();
  const long chi_max = o.chi_max.value_or(cap);
  if (chi_max < 3) throw UsageError("--chi-max must be at least 3");
  if (chi_max > cap) {
    throw UsageError("--chi-max " + std::to_string(chi_max) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with PICARDLAB_CHI_MAX)");
  }
  std::vector<SetId> sets;
  if (o.sets.empty()) {
    sets.assign(std::begin(kAllSets), std::end(kAllSets));
  } else {
    for (const auto& s : split(o.sets, ',')) sets.push_back(parse_set(s));
  }
  std::vector<std::string> emit = split(o.emit, ',');
  for (const auto& e : emit) {
    if (e != "csv" && e != "svg" && e != "json") throw UsageError("unknown --emit format '" + e + "'");
  }

  const SetRelationsReport relations = set_relations_report(chi_max);
  if (o.claims) {
    out << format_report(relations);
  } else {
    out << "Set relations, chi <= " << chi_max << "\n";
    for (const auto& c : relations.claims) out << "  " << c.claim_id << ": " << status_name(c.status) << "\n";
    for (const auto& c : relations.ingredients) out << "  " << c.claim_id << ": " << status_name(c.status) << "\n";
    for (const auto& row : relations.t_audit) {
      if (!row.in_A2_strict && row.a2_formula_match) {
        out << "  NOTE: T pair t=" << row.t << " matches the A2 formula only outside the strict A2 parameter range\n";
      }
    }
  }
  for (SetId id : sets) out << "  |" << set_name(id) << "| = " << enumerate_set(id, chi_max).size() << "\n";

  const std::filesystem::path dir(o.out_dir);
  for (const auto& e : emit) {
    std::filesystem::path path;
    std::string content;
    if (e == "csv") {
      path = dir / "geography.csv";
      content = emit_csv(sets, chi_max);
    } else if (e == "svg") {
      path = dir / "geography.svg";
      content = emit_svg(sets, chi_max);
    } else {
      path = dir / "relations.json";
      content = serialize(to_json(relations));
    }
    write_file(path, content);
    out << "wrote " << path.string() << "\n";
  }

  if (!relations.claims_ok()) {
    for (const auto& c : relations.claims) {
      if (c.status == ClaimStatus::RefutedWithinBound) err << "claim " << c.claim_id << " refuted within bound\n";
    }
    return kExitFailure;
  }
  return kExitOk;
}

struct ClassifyOptions {
  std::string local;
  std::string hom;
  std::string point;
  std::optional<int> chart;
  std::string file;
  std::optional<int> curve_c;
  std::optional<int> jet_bound;
};

ProjectivePoint parse_point(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--point must look like a:b:c, got '" + text + "'");
  ProjectivePoint p;
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      p.coords[i] = parse_rational(parts[i]);
    } catch (const std::exception&) {
      throw UsageError("bad coordinate '" + parts[i] + "' in --point");
    }
  }
  return p;
}

AkResult classify_with(const LocalPoly& f, const std::optional<int>& jet_bound) {
  return jet_bound ? classify_Ak(f, *jet_bound) : classify_Ak_auto(f);
}

int cmd_classify(const ClassifyOptions& o, std::ostream& out) {
  const int modes = !o.local.empty() + !o.hom.empty() + !o.file.empty() + o.curve_c.has_value();
  if (modes != 1) throw UsageError("give exactly one of --local, --hom, --file, --curve-C");
  if (o.jet_bound && *o.jet_bound < 2) throw UsageError("--jet-bound must be at least 2");

  if (o.curve_c) {
    const SingularPointsReport report = singular_points_report(*o.curve_c);
    if (!report.ok()) {
      out << "curve C, n=" << *o.curve_c << ": failed at " << *report.failure << "\n";
      return kExitFailure;
    }
    out << report.summary() << "\n";
    for (const auto& line : report.lines) {
      out << "  l" << line.line_index << ": " << line.distinct_points << " points, representative "
          << line.representative.to_string() << " " << (line.type ? line.type->to_string() : "?")
          << ", transversal: " << (line.transversal ? "yes" : "no") << "\n";
    }
    out << "  " << SingularPointsReport::limitation() << "\n";
    return kExitOk;
  }

  std::string text = !o.local.empty() ? o.local : !o.hom.empty() ? o.hom : read_file(o.file);
  ParsedPolynomial parsed = parse_polynomial(text);
  if (!o.hom.empty() && std::holds_alternative<LocalPoly>(parsed)) {
    throw UsageError("--hom expects a polynomial in X0, X1, X2");
  }
  if (!o.local.empty() && std::holds_alternative<HomPoly>(parsed)) {
    throw UsageError("--local expects a polynomial in x, y");
  }

  LocalPoly germ;
  if (const auto* hom = std::get_if<HomPoly>(&parsed)) {
    if (o.point.empty()) throw UsageError("a homogeneous polynomial needs --point a:b:c");
    const ProjectivePoint p = parse_point(o.point);
    int chart = 0;
    if (o.chart) {
      chart = *o.chart;
    } else {
      while (chart < 3 && p.coords[static_cast<std::size_t>(chart)] == 0) ++chart;
      if (chart == 3) throw UsageError("the point 0:0:0 is not projective");
    }
    germ = localize(*hom, p, chart);
  } else {
    if (!o.point.empty()) throw UsageError("--point applies to homogeneous input only");
    germ = std::get<LocalPoly>(parsed);
    if (germ.evaluate({Rational(0), Rational(0)}) != 0) {
      throw PointNotOnCurve("the local curve does not pass through the origin");
    }
  }
  out << classify_with(germ, o.jet_bound).to_string() << "\n";
  return kExitOk;
}

struct SlopesOptions {
  std::string fix;
  int m_max = 200;
  int n_max = 100;
  std::string threshold;
};

int cmd_slopes(const SlopesOptions& o, std::ostream& out) {
  if (o.fix.size() < 3 || o.fix[1] != '=' || (o.fix[0] != 'n' && o.fix[0] != 'm')) {
    throw UsageError("--fix must be n=<even> or m=<value>");
  }
  const int value = parse_int(o.fix.substr(2));
  SlopeLimitReport report;
  if (o.fix[0] == 'n') {
    const Rational threshold = o.threshold.empty() ? Rational(1, 100) : parse_rational(o.threshold);
    report = slope_limit_fixed_n(value, o.m_max, threshold);
    out << "Fixed n: slope -> 4 - 4/n = " << to_string(report.limit) << "\n";
  } else {
    const Rational threshold = o.threshold.empty() ? Rational(1, 50) : parse_rational(o.threshold);
    report = slope_limit_fixed_m(value, o.n_max, threshold);
    out << "Fixed m: slope -> 4\n";
  }
  out << format_report(report);
  return report.identities_hold ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for surfaces with maximal Picard number and their geography", "picardlab"};
  app.set_version_flag("--version", std::string("picardlab ") + kVersion);
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify-theorem", "Build and certify the construction of Theorem 1, 2 or 3");
  v->add_option("theorem", verify.theorem, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  v->add_option("--m", verify.m, "m parameter (Theorems 2, 3)");
  v->add_option("--n", verify.n, "n parameter");
  v->add_option("--sweep", verify.sweep, "parameter grid, e.g. m=2..8,n=4,6,8");
  v->add_option("--out", verify.out_path, "write the report(s) as JSON");

  GeographyOptions geo;
  auto* g = app.add_subcommand("geography", "Enumerate invariant sets, check their relations, emit tables and plots");
  g->add_option("--chi-max", geo.chi_max, "largest chi to enumerate");
  g->add_option("--emit", geo.emit, "comma-separated: csv, svg, json");
  g->add_option("--sets", geo.sets, "comma-separated subset of A1,A2,A3,B,T");
  g->add_option("--out-dir", geo.out_dir, "directory for emitted files");
  g->add_flag("--claims", geo.claims, "print the full claims report");

  ClassifyOptions cls;
  auto* c = app.add_subcommand("classify", "Classify a plane curve singularity as Smooth, A_k or corank >= 2");
  c->add_option("--local", cls.local, "germ at the origin in x, y");
  c->add_option("--hom", cls.hom, "homogeneous polynomial in X0, X1, X2");
  c->add_option("--point", cls.point, "projective point a:b:c for --hom/--file");
  c->add_option("--chart", cls.chart, "affine chart index 0..2");
  c->add_option("--file", cls.file, "read the polynomial from a file");
  c->add_option("--curve-C", cls.curve_c, "report on the singular points of the curve C of degree 2n");
  c->add_option("--jet-bound", cls.jet_bound, "fixed jet bound instead of the adaptive one");

  SlopesOptions sl;
  auto* s = app.add_subcommand("slopes", "Slope table and limits along a family of Theorem 2");
  s->add_option("--fix", sl.fix, "n=<even> or m=<value>")->required();
  s->add_option("--m-max", sl.m_max, "largest m when n is fixed");
  s->add_option("--n-max", sl.n_max, "largest n when m is fixed");
  s->add_option("--threshold", sl.threshold, "bound for the final distance to the limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (v->parsed()) return cmd_verify_theorem(verify, out, err);
    if (g->parsed()) return cmd_geography(geo, out, err);
    if (c->parsed()) return cmd_classify(cls, out);
    if (s->parsed()) return cmd_slopes(sl, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PointNotOnCurve& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace picardlab
