#include "systole/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <complex>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "systole/bianchi.hpp"
#include "systole/bounds.hpp"
#include "systole/constants.hpp"
#include "systole/moebius.hpp"
#include "systole/report_io.hpp"
#include "systole/verifier.hpp"

namespace systole::cli {

namespace {

using json = nlohmann::ordered_json;
using Complex = std::complex<double>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MathFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "human";
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::string config;
};

OutputFormat output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Human;
}

json complex_json(const Complex& z) { return json::array({format_real(z.real()), format_real(z.imag())}); }

std::string complex_human(const Complex& z) {
  std::string s = format_human(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  s += format_human(std::abs(z.imag())) + "i";
  return s;
}

std::string complex_csv(const Complex& z) { return format_real(z.real()) + ";" + format_real(z.imag()); }

/// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (eq == std::string::npos) {
      if (!trim(line).empty()) throw UsageError("config line without '=': " + line);
      continue;
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

/// Fill options not given on the command line from the config file.
void apply_config(const std::map<std::string, std::string>& config, CLI::App* leaf) {
  for (const auto& [key, value] : config) {
    CLI::Option* opt = nullptr;
    for (CLI::App* app = leaf; app != nullptr && opt == nullptr; app = app->get_parent()) {
      opt = app->get_option_no_throw("--" + key);
    }
    if (opt == nullptr || opt->count() > 0 || opt->get_name() == "--config") continue;
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

CLI::App* selected_leaf(CLI::App& app) {
  CLI::App* leaf = &app;
  for (;;) {
    auto subs = leaf->get_subcommands();
    if (subs.empty()) return leaf;
    leaf = subs.front();
  }
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  double volume = 0;
};

void cmd_bound(const std::string& kind, const BoundArgs& args, OutputFormat fmt, std::ostream& out) {
  const double v = args.volume;
  const bool link = kind == "closed-link";
  if (link ? !(v >= 0) : !(v > 0)) {
    throw UsageError(link ? "--volume must be >= 0" : "--volume must be > 0");
  }
  const auto p = make_profile(v);
  const double bound = link ? p.link_bound : p.cusped_bound;

  switch (fmt) {
    case OutputFormat::Json: {
      json profile;
      profile["V"] = format_real(p.volume);
      profile["Vc"] = format_real(p.cusp_volume);
      profile["ell_max"] = format_real(p.ell_max);
      profile["cusped_bound"] = v > 0 ? json(format_real(p.cusped_bound)) : json(nullptr);
      profile["link_bound"] = format_real(p.link_bound);
      if (link) profile["crossing"] = format_real(p.crossing);
      json j;
      j["kind"] = kind;
      j["volume"] = format_real(v);
      j["bound"] = format_real(bound);
      j["profile"] = std::move(profile);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "kind,volume,bound,Vc,ell_max,cusped_bound,link_bound,crossing\n"
          << kind << ',' << format_real(v) << ',' << format_real(bound) << ','
          << format_real(p.cusp_volume) << ',' << format_real(p.ell_max) << ','
          << (v > 0 ? format_real(p.cusped_bound) : "") << ',' << format_real(p.link_bound) << ','
          << (link ? format_real(p.crossing) : "") << '\n';
      break;
    case OutputFormat::Human:
      out << kind << " systole bound at V = " << format_human(v) << ": " << format_human(bound) << '\n'
          << "  Vc           " << format_human(p.cusp_volume) << '\n'
          << "  ell_max      " << format_human(p.ell_max) << '\n';
      if (v > 0) out << "  cusped bound " << format_human(p.cusped_bound) << '\n';
      out << "  link bound   " << format_human(p.link_bound) << '\n';
      if (link) out << "  crossing X*  " << format_human(p.crossing) << '\n';
      break;
  }
}

// ---------------------------------------------------------------- element

Moebius parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("--matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.size() != 4) {
    throw UsageError("--matrix must be [[re,im],[re,im],[re,im],[re,im]] (row-major)");
  }
  std::array<Complex, 4> e;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& pair = j[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw UsageError("--matrix entry " + std::to_string(i) + " must be [re, im]");
    }
    e[i] = {pair[0].get<double>(), pair[1].get<double>()};
  }
  try {
    return Moebius(e[0], e[1], e[2], e[3]);
  } catch (const DomainError& err) {
    throw UsageError(err.what());
  }
}

void cmd_element(const std::string& action, const std::string& matrix, OutputFormat fmt,
                 std::ostream& out) {
  const Moebius g = parse_matrix(matrix);
  const Complex t = trace(g);
  json j;
  j["action"] = action;
  j["trace"] = complex_json(t);

  if (action == "classify") {
    const auto cls = std::string(to_string(classify(g)));
    j["class"] = cls;
    if (fmt == OutputFormat::Json) out << j.dump(2) << '\n';
    else if (fmt == OutputFormat::Csv) out << "class,trace\n" << cls << ',' << complex_csv(t) << '\n';
    else out << cls << '\n';
    return;
  }

  if (action == "length") {
    double len = 0;
    try {
      len = translation_length(g);
    } catch (const NotLoxodromicError& e) {
      throw MathFailure(e.what());
    }
    const Complex cl = complex_length(g);
    j["translation_length"] = format_real(len);
    j["complex_length"] = complex_json(cl);
    if (fmt == OutputFormat::Json) out << j.dump(2) << '\n';
    else if (fmt == OutputFormat::Csv)
      out << "translation_length,complex_length,trace\n"
          << format_real(len) << ',' << complex_csv(cl) << ',' << complex_csv(t) << '\n';
    else out << format_human(len) << '\n';
    return;
  }

  IsometricSphere<double> s{};
  try {
    s = isometric_sphere(g);
  } catch (const DomainError& e) {
    throw MathFailure(e.what());
  }
  j["center"] = complex_json(s.center);
  j["radius"] = format_real(s.radius);
  if (fmt == OutputFormat::Json) out << j.dump(2) << '\n';
  else if (fmt == OutputFormat::Csv)
    out << "center,radius\n" << complex_csv(s.center) << ',' << format_real(s.radius) << '\n';
  else out << "center " << complex_human(s.center) << ", radius " << format_human(s.radius) << '\n';
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  double vc_min = 17.094;
  double vc_max = 1e6;
  std::size_t vc_points = 200;
  std::string vc_scale = "log";
  std::size_t ell_points = 10000;
  bool probe = false;
  double perturb = 1.0;

  double v_min = 0.1;
  double v_max = 1e6;
  std::size_t points = 100;
  std::string scale = "log";
  double tolerance = 1e-10;

  std::size_t samples = 100000;
  double r_max = 100;

  double cubic_vc_min = 8.0 / (3.0 * std::numbers::sqrt3);

  std::string margins_csv;
};

GridScale grid_scale(const std::string& s) {
  return s == "linear" ? GridScale::Linear : GridScale::Logarithmic;
}

GridSpec make_grid(double lo, double hi, std::size_t n, const std::string& scale) {
  GridSpec g{lo, hi, n, grid_scale(scale)};
  if (n == 1 && lo == hi) g = GridSpec::single(lo);
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return g;
}

int cmd_verify(const std::string& claim, const VerifyArgs& a, const Globals& globals,
               OutputFormat fmt, std::ostream& out) {
  std::vector<MarginSample> margins;
  std::vector<MarginSample>* sink = a.margins_csv.empty() ? nullptr : &margins;
  CertificateReport report;
  try {
    if (claim == "techlem2") {
      Techlem2Options o;
      o.ell_points = a.ell_points;
      o.jobs = globals.jobs;
      o.probe = a.probe;
      o.margins = sink;
      if (a.perturb != 1.0) {
        const double k = a.perturb;
        o.bound = [k](double vc) { return k * techlem2_bound(vc); };
      }
      report = certify_techlem2(make_grid(a.vc_min, a.vc_max, a.vc_points, a.vc_scale), o);
    } else if (claim == "crossing") {
      CrossingOptions o;
      o.tolerance = a.tolerance;
      o.jobs = globals.jobs;
      o.margins = sink;
      report = certify_crossing(make_grid(a.v_min, a.v_max, a.points, a.scale), o);
    } else if (claim == "length-lemma") {
      LengthLemmaOptions o;
      o.samples = a.samples;
      o.r_max = a.r_max;
      o.seed = globals.seed;
      o.margins = sink;
      report = certify_length_lemma(o);
    } else {
      report = certify_cubic_claims(make_grid(a.cubic_vc_min, a.vc_max, a.vc_points, a.vc_scale));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << render(report, fmt);
  if (sink) {
    std::ofstream f(a.margins_csv);
    if (!f) throw UsageError("cannot write '" + a.margins_csv + "'");
    f << margins_to_csv(margins);
  }
  return report.status == CertificateStatus::Pass ? kSuccess : kMathFailure;
}

// ---------------------------------------------------------------- bianchi

struct BianchiArgs {
  std::int64_t p = 11;
  std::int64_t d = 2;
  std::string pi = "3,1";
  unsigned n = 1;
  unsigned n_max = 5;
  unsigned height = 0;
  double base_covolume = 0;
  double bound = 1;
  bool require_split = false;
};

QuadInt parse_pi(const std::string& text, std::int64_t d) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pi must be 'a,b'");
  try {
    std::size_t used = 0;
    const std::string sa = text.substr(0, comma), sb = text.substr(comma + 1);
    const long long a = std::stoll(sa, &used);
    if (used != sa.size()) throw std::invalid_argument(sa);
    const long long b = std::stoll(sb, &used);
    if (used != sb.size()) throw std::invalid_argument(sb);
    return QuadInt(a, b, d);
  } catch (const std::exception&) {
    throw UsageError("--pi must be 'a,b' with integers a, b and squarefree --d");
  }
}

json quad_json(const QuadInt& x) {
  json j;
  j["a"] = x.a().str();
  j["b"] = x.b().str();
  j["d"] = x.d();
  j["text"] = x.to_string();
  return j;
}

double base_covolume_for(const BianchiArgs& a) {
  if (a.base_covolume > 0) return a.base_covolume;
  if (a.d == 2) return static_cast<double>(kBianchiCovolumeD2);
  throw UsageError("--base-covolume is required for d != 2");
}

int cmd_bianchi(const std::string& action, const BianchiArgs& a, const Globals& globals,
                OutputFormat fmt, std::ostream& out) {
  if (!is_squarefree(a.d)) throw UsageError("--d must be a positive squarefree integer");

  if (action == "split") {
    std::optional<QuadInt> pi;
    try {
      pi = split_prime(a.p, a.d);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (fmt == OutputFormat::Json) {
      json j;
      j["p"] = a.p;
      j["d"] = a.d;
      j["split"] = pi.has_value();
      j["pi"] = pi ? quad_json(*pi) : json(nullptr);
      out << j.dump(2) << '\n';
    } else if (fmt == OutputFormat::Csv) {
      out << "p,d,split,a,b\n" << a.p << ',' << a.d << ',' << (pi ? "true" : "false") << ','
          << (pi ? pi->a().str() : "") << ',' << (pi ? pi->b().str() : "") << '\n';
    } else {
      out << (pi ? pi->to_string() : "not split") << '\n';
    }
    return (!pi && a.require_split) ? kMathFailure : kSuccess;
  }

  if (action == "ideals") {
    std::vector<QuadInt> xs;
    try {
      xs = count_bounded_ideal_elements(a.d, a.bound);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (fmt == OutputFormat::Json) {
      json j;
      j["d"] = a.d;
      j["bound"] = format_real(a.bound);
      j["count"] = xs.size();
      auto arr = json::array();
      for (const auto& x : xs) {
        json e = quad_json(x);
        e["norm"] = x.norm().str();
        arr.push_back(std::move(e));
      }
      j["elements"] = std::move(arr);
      out << j.dump(2) << '\n';
    } else if (fmt == OutputFormat::Csv) {
      out << "a,b,norm\n";
      for (const auto& x : xs) out << x.a() << ',' << x.b() << ',' << x.norm() << '\n';
    } else {
      out << xs.size() << " elements with 0 < |x| <= " << format_human(a.bound) << '\n';
      for (const auto& x : xs) out << "  " << x << "  (norm " << x.norm() << ")\n";
    }
    return kSuccess;
  }

  const QuadInt pi = parse_pi(a.pi, a.d);

  if (action == "index") {
    if (a.n == 0) throw UsageError("--n must be positive");
    const auto level = CongruenceLevel::make(pi, a.n);
    BigInt index;
    try {
      index = newman_index(level);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (fmt == OutputFormat::Json) {
      json j;
      j["pi"] = quad_json(pi);
      j["n"] = a.n;
      j["level"] = quad_json(level.level);
      j["norm"] = level.norm.str();
      j["index"] = index.str();
      out << j.dump(2) << '\n';
    } else if (fmt == OutputFormat::Csv) {
      out << "n,norm,index\n" << a.n << ',' << level.norm << ',' << index << '\n';
    } else {
      out << index << '\n';
    }
    return kSuccess;
  }

  // census
  if (a.n_max == 0) throw UsageError("--n-max must be positive");
  const double covolume = base_covolume_for(a);
  std::vector<GrowthRow> rows;
  try {
    rows = systole_growth_table(pi, a.n_max, covolume);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  struct Attained {
    unsigned n;
    std::size_t elements = 0;
    std::size_t loxodromic = 0;
    std::optional<BigInt> min_trace_norm;
  };
  std::vector<Attained> attained;
  if (a.height > 0) {
    for (unsigned n = 1; n <= a.n_max; ++n) {
      const auto level = CongruenceLevel::make(pi, n);
      Attained at{n, 0, 0, std::nullopt};
      for (const auto& e : enumerate_congruence_elements(level, a.height, globals.jobs)) {
        ++at.elements;
        if (classify(e.matrix) != ElementClass::Loxodromic) continue;
        ++at.loxodromic;
        const BigInt tn = e.matrix.trace().norm();
        if (!at.min_trace_norm || tn < *at.min_trace_norm) at.min_trace_norm = tn;
      }
      attained.push_back(std::move(at));
    }
  }

  if (fmt == OutputFormat::Csv) {
    out << "n,index,volume,trace_lb,systole_lb,ratio\n";
    for (const auto& r : rows) {
      out << r.n << ',' << r.index << ',' << format_real(r.volume) << ',' << r.trace_lb << ','
          << format_real(r.systole_lb) << ',' << format_real(r.ratio) << '\n';
    }
  } else if (fmt == OutputFormat::Json) {
    json j;
    j["pi"] = quad_json(pi);
    j["base_covolume"] = format_real(covolume);
    auto arr = json::array();
    for (const auto& r : rows) {
      json row;
      row["n"] = r.n;
      row["index"] = r.index.str();
      row["volume"] = format_real(r.volume);
      row["trace_lb"] = r.trace_lb.str();
      row["systole_lb"] = format_real(r.systole_lb);
      row["ratio"] = format_real(r.ratio);
      row["uncorrected_systole_lb"] = format_real(r.uncorrected_systole_lb);
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    if (!attained.empty()) {
      auto en = json::array();
      for (const auto& at : attained) {
        json e;
        e["n"] = at.n;
        e["height"] = a.height;
        e["elements"] = at.elements;
        e["loxodromic"] = at.loxodromic;
        e["min_loxodromic_trace_norm"] = at.min_trace_norm ? json(at.min_trace_norm->str()) : json(nullptr);
        en.push_back(std::move(e));
      }
      j["enumeration"] = std::move(en);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "  n  index                 volume        trace_lb  systole_lb  ratio\n";
    for (const auto& r : rows) {
      std::ostringstream line;
      line << "  " << r.n << "  " << r.index << "  " << format_human(r.volume) << "  " << r.trace_lb
           << "  " << format_human(r.systole_lb) << "  " << format_human(r.ratio);
      out << line.str() << '\n';
    }
    for (const auto& at : attained) {
      out << "  n = " << at.n << ": " << at.elements << " elements at height " << a.height << ", "
          << at.loxodromic << " loxodromic";
      if (at.min_trace_norm) {
        out << ", min |trace| = " << format_human(std::sqrt(at.min_trace_norm->convert_to<double>()));
      }
      out << '\n';
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Systole bounds for hyperbolic 3-manifolds and their numerical certification",
               "systole"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_help_all_flag("--help-all", "Expand all help");

  Globals globals;
  // Checked after the config file has had a chance to supply them.
  std::vector<CLI::Option*> required;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--seed", globals.seed, "Seed for randomized sweeps");
  app.add_option("--jobs", globals.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--config", globals.config, "key=value file presetting option defaults");

  // bound
  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Systole bounds from volume")->require_subcommand(1);
  for (const char* kind : {"closed-link", "cusped"}) {
    auto* sub = bound->add_subcommand(kind, kind == std::string("cusped")
                                                ? "Cusped manifold of volume V"
                                                : "Link complement in a closed manifold of volume V");
    required.push_back(sub->add_option("--volume", bound_args.volume, "Volume V"));
  }

  // element
  std::string matrix;
  auto* element = app.add_subcommand("element", "PSL(2,C) element geometry")->require_subcommand(1);
  for (const char* action : {"classify", "length", "sphere"}) {
    auto* sub = element->add_subcommand(action, action);
    required.push_back(sub->add_option("--matrix", matrix, "[[re,im],[re,im],[re,im],[re,im]] row-major"));
  }

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Certification sweeps")->require_subcommand(1);
  auto* v_tech = verify->add_subcommand("techlem2", "S(ell) against the combined trace bound");
  v_tech->add_option("--vc-min", va.vc_min);
  v_tech->add_option("--vc-max", va.vc_max);
  v_tech->add_option("--vc-points", va.vc_points);
  v_tech->add_option("--vc-scale", va.vc_scale)->check(CLI::IsMember({"linear", "log"}));
  v_tech->add_option("--ell-points", va.ell_points);
  v_tech->add_flag("--probe", va.probe, "Allow Vc below the realizable regime");
  v_tech->add_option("--perturb", va.perturb, "Multiply the bound under test (self-test hook)");
  auto* v_cross = verify->add_subcommand("crossing", "F1 = F2 crossing against its closed form");
  v_cross->add_option("--v-min", va.v_min);
  v_cross->add_option("--v-max", va.v_max);
  v_cross->add_option("--points", va.points);
  v_cross->add_option("--scale", va.scale)->check(CLI::IsMember({"linear", "log"}));
  v_cross->add_option("--tolerance", va.tolerance);
  auto* v_len = verify->add_subcommand("length-lemma", "Translation length vs trace modulus");
  v_len->add_option("--samples", va.samples);
  v_len->add_option("--r-max", va.r_max);
  auto* v_cubic = verify->add_subcommand("cubic", "Sign claims about the auxiliary cubic");
  v_cubic->add_option("--vc-min", va.cubic_vc_min);
  v_cubic->add_option("--vc-max", va.vc_max);
  v_cubic->add_option("--vc-points", va.vc_points);
  v_cubic->add_option("--vc-scale", va.vc_scale)->check(CLI::IsMember({"linear", "log"}));
  for (auto* sub : {v_tech, v_cross, v_len, v_cubic}) {
    sub->add_option("--margins-csv", va.margins_csv, "Write per-point margins as CSV");
  }

  // bianchi
  BianchiArgs ba;
  auto* bianchi = app.add_subcommand("bianchi", "Arithmetic of Z[sqrt(-d)] and congruence levels")
                      ->require_subcommand(1);
  auto* b_split = bianchi->add_subcommand("split", "Solve a^2 + d b^2 = p");
  required.push_back(b_split->add_option("--p", ba.p));
  b_split->add_option("--d", ba.d);
  b_split->add_flag("--require-split", ba.require_split, "Exit 1 when p does not split");
  auto* b_index = bianchi->add_subcommand("index", "Index of the principal congruence subgroup");
  b_index->add_option("--d", ba.d);
  b_index->add_option("--pi", ba.pi, "Generator a,b meaning a + b*sqrt(-d)");
  b_index->add_option("--n", ba.n);
  auto* b_census = bianchi->add_subcommand("census", "Volume and systole growth table");
  b_census->add_option("--d", ba.d);
  b_census->add_option("--pi", ba.pi);
  b_census->add_option("--n-max", ba.n_max);
  b_census->add_option("--height", ba.height, "Parameter box for the element enumeration (0: skip)");
  b_census->add_option("--base-covolume", ba.base_covolume, "Covolume of PSL2(O_d) (default: d = 2)");
  auto* b_ideals = bianchi->add_subcommand("ideals", "Elements of bounded modulus");
  b_ideals->add_option("--d", ba.d);
  required.push_back(b_ideals->add_option("--bound", ba.bound));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "systole: " << e.what() << '\n';
    return kUsage;
  }

  try {
    CLI::App* leaf = selected_leaf(app);
    if (!globals.config.empty()) apply_config(read_config(globals.config), leaf);
    for (const CLI::Option* opt : required) {
      if (leaf->get_option_no_throw(opt->get_name()) == opt && opt->count() == 0) {
        throw UsageError(opt->get_name() + " is required");
      }
    }
    const OutputFormat fmt = output_format(globals.format);
    const std::string name = leaf->get_name();
    const std::string group = leaf->get_parent()->get_name();

    if (group == "bound") {
      cmd_bound(name, bound_args, fmt, out);
      return kSuccess;
    }
    if (group == "element") {
      cmd_element(name, matrix, fmt, out);
      return kSuccess;
    }
    if (group == "verify") return cmd_verify(name, va, globals, fmt, out);
    if (group == "bianchi") return cmd_bianchi(name, ba, globals, fmt, out);
    err << "systole: unknown command\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "systole: " << e.what() << '\n';
    return kUsage;
  } catch (const MathFailure& e) {
    err << "systole: " << e.what() << '\n';
    return kMathFailure;
  } catch (const DomainError& e) {
    err << "systole: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace systole::cli
