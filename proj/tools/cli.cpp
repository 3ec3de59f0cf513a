#include "cli.hpp"

#include "qpoly/analysis_props.hpp"
#include "qpoly/combinatorics.hpp"
#include "qpoly/functionals.hpp"
#include "qpoly/json_report.hpp"
#include "qpoly/property_suites.hpp"
#include "qpoly/qspecial.hpp"
#include "qpoly/series_cm.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace qpoly::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  PrecisionBudget budget;
  std::string format = "json";
  std::string out_path;

  // eval / certify parameters
  std::string fn;
  std::string target;
  std::string q, x, c;
  int m = 0, r = 0, n = 0, s = -1;
  int k_max = 200;
  std::string method = "series";
  std::string x_min = "0.1", x_max = "5", h = "0.05";
  int grid = 99;
  int k_diff = 8;
  double slack = 1e-9;
  double abs_slack = kDefaultAbsSlack;

  // verify
  std::string lemma;
  int r_max = 8;
  long verify_k_max = 300;
  int m_max = 10;
  int n_max = 100;
  int T = -1;
  int points = 1000;
  bool include_empirical = false;

  // props
  std::string suite = "all";
};

Real parse_real(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing required flag ") + flag);
  try {
    std::size_t used = 0;
    (void)std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("flag ") + flag + " expects a real number, got '" + text + "'");
  }
  return Real(text);
}

int require_int(int v, int min, const char* flag) {
  if (v < min) throw UsageError(std::string("flag ") + flag + " must be >= " + std::to_string(min));
  return v;
}

IndexQuad quad_from(const Options& o) {
  const IndexQuad idx{require_int(o.r, 1, "--r"), require_int(o.m, 0, "--m"), require_int(o.n, 0, "--n"),
                      require_int(o.s, 0, "--s")};
  return idx;
}

Json budget_json(const PrecisionBudget& b) {
  return Json{{"rel_tol", b.rel_tol},
              {"digits", b.digits},
              {"working_digits", b.working_digits()},
              {"max_terms", b.max_terms}};
}

Json base_config(const Options& o, const char* command) {
  return Json{{"command", command},
              {"format", o.format},
              {"out", o.out_path.empty() ? Json(nullptr) : Json(o.out_path)},
              {"budget", budget_json(o.budget)}};
}

Json real_field(const Real& v) { return Json(to_string(v, 40)); }

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file " + o.out_path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- eval

int cmd_eval(const Options& o, std::ostream& out) {
  const PrecisionBudget& b = o.budget;
  Json cfg = base_config(o, "eval");
  cfg["fn"] = o.fn;
  Json result{{"fn", o.fn}};
  std::optional<SeriesValue> series;
  Real value;

  const Real q = parse_real(o.q, "--q");
  cfg["q"] = o.q;
  auto point = [&] {
    const Real x = parse_real(o.x, "--x");
    cfg["x"] = o.x;
    return QPoint::make(q, x);
  };
  auto step = [&] {
    const Real c = parse_real(o.c, "--c");
    cfg["c"] = o.c;
    return FDStep::make(c);
  };

  if (o.fn == "gamma_q") {
    series = gamma_q(point(), b);
  } else if (o.fn == "psi_q") {
    const QPoint p = point();
    series = psi_q(p, b);
    const Real reflected = (p.x - Real(1.5)) * log(p.q) + psi_q(QPoint::make(1 / p.q, p.x), b).value;
    result["reflection_residual"] = real_field(series->value - reflected);
  } else if (o.fn == "psi_q_m") {
    cfg["m"] = require_int(o.m, 1, "--m");
    series = psi_q_deriv(point(), o.m, b);
  } else if (o.fn == "F") {
    const IndexQuad idx = quad_from(o);
    cfg["quad"] = idx.str();
    value = F_q_fd(idx, point(), step(), b);
  } else if (o.fn == "G") {
    cfg["m"] = require_int(o.m, 1, "--m");
    value = G_q_fd(o.m, point(), step(), b);
  } else if (o.fn == "F_deriv") {
    const IndexQuad idx = quad_from(o);
    cfg["quad"] = idx.str();
    value = F_q_deriv(idx, point(), b);
  } else if (o.fn == "G_deriv") {
    cfg["m"] = require_int(o.m, 1, "--m");
    value = G_q_deriv(o.m, point(), b);
  } else {
    throw UsageError("unknown --fn '" + o.fn + "'");
  }

  if (series) value = series->value;
  result["value"] = real_field(value);
  result["tail_bound"] = series ? real_field(series->tail_bound) : Json(nullptr);
  result["terms_used"] = series ? Json(series->terms_used) : Json(nullptr);

  if (o.format == "json") {
    emit(o, dump(Json{{"config", cfg}, {"result", result}}), out);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "fn,value,tail_bound,terms_used\n"
       << o.fn << ',' << to_string(value, 40) << ',' << (series ? to_string(series->tail_bound, 6) : "") << ','
       << (series ? std::to_string(series->terms_used) : "") << '\n';
    emit(o, os.str(), out);
  } else {
    std::ostringstream os;
    for (const auto& [k, v] : result.items()) os << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    emit(o, os.str(), out);
  }
  return kOk;
}

// ------------------------------------------------------------- certify

int cmd_certify(const Options& o, std::ostream& out) {
  const PrecisionBudget& b = o.budget;
  CoeffTarget t;
  Json cfg = base_config(o, "certify");
  cfg["target"] = o.target;
  t.q = parse_real(o.q, "--q");
  t.c = parse_real(o.c, "--c");
  cfg["q"] = o.q;
  cfg["c"] = o.c;
  if (o.target == "G") {
    t.kind = TargetKind::G_of_m;
    t.m = require_int(o.m, 1, "--m");
    cfg["m"] = t.m;
  } else if (o.target == "F") {
    t.kind = TargetKind::F_of_quad;
    t.quad = quad_from(o);
    cfg["quad"] = t.quad.str();
  } else {
    throw UsageError("--target must be G or F");
  }
  if (o.method != "series" && o.method != "grid" && o.method != "both")
    throw UsageError("--method must be series, grid or both");
  cfg["method"] = o.method;
  cfg["k_max"] = o.k_max;
  cfg["abs_slack"] = o.abs_slack;
  cfg["x_min"] = o.x_min;
  cfg["x_max"] = o.x_max;
  cfg["grid"] = o.grid;
  cfg["h"] = o.h;
  cfg["k_diff"] = o.k_diff;
  cfg["slack"] = o.slack;
  t.validate();

  std::vector<CertReport> reports;
  const Regime regime = classify(t);
  if (o.method != "grid") reports.push_back(certify_cm_series(t, o.k_max, b, o.abs_slack));
  if (o.method != "series") {
    const Real x_lo = parse_real(o.x_min, "--x-min"), x_hi = parse_real(o.x_max, "--x-max");
    const Real h = parse_real(o.h, "--h");
    const int sign = regime == Regime::Theorem1Reversed ? -1 : 1;
    const FDStep step = FDStep::make(t.c);
    RealFn f;
    if (t.kind == TargetKind::G_of_m)
      f = [&, sign](const Real& x) { return sign * G_q_fd(t.m, QPoint::make(t.q, x), step, b); };
    else
      f = [&, sign](const Real& x) { return sign * F_q_fd(t.quad, QPoint::make(t.q, x), step, b); };
    CertReport grid = check_cm_grid(f, x_lo, x_hi, o.grid, h, o.k_diff, o.slack,
                                    (sign < 0 ? "-" : "") + t.descriptor());
    grid.regime = regime;
    grid.sign = sign;
    if (regime == Regime::Unproven) grid.status = CertStatus::Inconclusive;
    reports.push_back(std::move(grid));
  }

  int code = kOk;
  for (const CertReport& rep : reports) {
    if (rep.status == CertStatus::Violated) code = kViolated;
    if (rep.status == CertStatus::Inconclusive && code == kOk) code = kInconclusive;
  }

  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& rep : reports) list.push_back(to_json(rep));
    emit(o, dump(Json{{"config", cfg}, {"reports", list}}), out);
  } else if (o.format == "csv") {
    emit(o, reports.front().rows.empty() && reports.size() > 1 ? to_csv(reports.back()) : to_csv(reports.front()),
         out);
  } else {
    std::ostringstream os;
    for (const auto& rep : reports)
      os << rep.target << " [" << to_string(rep.regime) << "] k=" << rep.k_lo << ".." << rep.k_hi
         << " min_margin=" << to_string(rep.min_margin, 12) << " status=" << to_string(rep.status) << '\n';
    emit(o, os.str(), out);
  }
  return code;
}

// -------------------------------------------------------------- verify

void emit_lemma(const Options& o, const Json& cfg, const LemmaReport& rep, std::ostream& out) {
  if (o.format == "json") {
    emit(o, dump(Json{{"config", cfg}, {"report", to_json(rep)}}), out);
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "kind,check,regime,k,lhs,rhs\n";
    auto row = [&](const char* kind, const Witness& w) {
      auto text = [](const Quantity& q) {
        if (const auto* r = std::get_if<Rational>(&q)) return r->str();
        return to_string(std::get<Real>(q), 30);
      };
      os << kind << ',' << w.check << ',' << to_string(w.regime) << ',' << w.k << ',' << text(w.lhs) << ','
         << text(w.rhs) << '\n';
    };
    for (const auto& w : rep.violations) row("violation", w);
    for (const auto& w : rep.equalities) row("equality", w);
    for (const auto& w : rep.observations) row("observation", w);
    emit(o, os.str(), out);
  } else {
    std::ostringstream os;
    os << rep.lemma << ": " << (rep.pass() ? "pass" : "FAIL") << " checks=" << rep.checks
       << " violations=" << rep.violation_count << " equalities=" << rep.equality_count
       << " observations=" << rep.observation_count << '\n';
    emit(o, os.str(), out);
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  Json cfg = base_config(o, "verify");
  cfg["lemma"] = o.lemma;
  LemmaReport rep;
  if (o.lemma == "conv" || o.lemma == "2.1") {
    cfg["r_max"] = o.r_max;
    cfg["k_max"] = o.verify_k_max;
    cfg["include_empirical"] = o.include_empirical;
    rep = verify_conv_inequality(require_int(o.r_max, 1, "--r-max"), o.verify_k_max, o.include_empirical);
  } else if (o.lemma == "proof-steps") {
    cfg["s"] = o.s;
    cfg["T"] = o.T;
    cfg["r"] = o.r;
    cfg["k_max"] = o.verify_k_max;
    rep = verify_proof_steps(require_int(o.s, 0, "--s"), require_int(o.T, 0, "--T"), require_int(o.r, 1, "--r"),
                             o.verify_k_max);
  } else if (o.lemma == "power-sums") {
    cfg["m_max"] = o.m_max;
    cfg["n_max"] = o.n_max;
    rep = verify_power_sum_bounds(o.m_max, o.n_max);
  } else if (o.lemma == "ratio") {
    cfg["n"] = o.n;
    cfg["q"] = o.q;
    cfg["c"] = o.c;
    rep = verify_ratio_ineq(require_int(o.n, 2, "--n"), parse_real(o.q, "--q"), parse_real(o.c, "--c"), o.budget);
  } else if (o.lemma == "weights") {
    cfg["points"] = o.points;
    rep = verify_weight_monotone(o.points);
  } else {
    throw UsageError("unknown --lemma '" + o.lemma + "'");
  }
  emit_lemma(o, cfg, rep, out);
  return rep.pass() ? kOk : kViolated;
}

// --------------------------------------------------------------- props

int cmd_props(const Options& o, std::ostream& out) {
  const PrecisionBudget& b = o.budget;
  Json cfg = base_config(o, "props");
  cfg["suite"] = o.suite;
  const bool all = o.suite == "all";
  LemmaReport rep;
  rep.lemma = "props:" + o.suite;
  bool known = all;
  auto reals = [](std::initializer_list<double> v) { return std::vector<Real>(v.begin(), v.end()); };
  if (all || o.suite == "reflection") {
    known = true;
    rep.merge(reflection_suite(reals({1.5, 2, 10}), linspace(Real(0.1), Real(10), 25), 1e-18, b));
  }
  if (all || o.suite == "sign-ladder") {
    known = true;
    rep.merge(sign_ladder_suite(reals({0.3, 0.7, 2, 5}), reals({0.5, 1, 2, 5}), 6, b));
  }
  if (all || o.suite == "h-convexity") {
    known = true;
    rep.merge(verify_h_convexity(reals({0.1, 0.5, 0.9}), reals({0.25, 0.5, 0.75, 1.5, 3}),
                                 reals({0.1, 0.5, 1, 2, 10}), b));
  }
  if (all || o.suite == "weights") {
    known = true;
    rep.merge(verify_weight_monotone(1000));
  }
  if (all || o.suite == "chain") {
    known = true;
    rep.merge(chain_suite(reals({0.3, 0.7}), reals({0.25, 0.75, 1.5, 3}), linspace(Real(0.1), Real(5), 20), b));
  }
  if (!known) throw UsageError("unknown --suite '" + o.suite + "'");
  emit_lemma(o, cfg, rep, out);
  return rep.pass() ? kOk : kViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"q-polygamma functionals: evaluation, complete-monotonicity certification, lemma sweeps", "qpoly"};
  app.set_config("--config", "", "key=value file presetting options (flags override)");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rel-tol", o.budget.rel_tol, "target relative error")->capture_default_str();
  app.add_option("--digits", o.budget.digits, "working precision in decimal digits")
      ->envname("QPOLY_PRECISION_DIGITS")
      ->capture_default_str();
  app.add_option("--max-terms", o.budget.max_terms, "series term cap")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--out", o.out_path, "write the report to this file instead of stdout");

  auto* eval = app.add_subcommand("eval", "evaluate a function at one point");
  eval->add_option("--fn", o.fn, "gamma_q|psi_q|psi_q_m|F|G|F_deriv|G_deriv")->required();

  auto* certify = app.add_subcommand("certify", "certify complete monotonicity of F or G");
  certify->set_help_flag("--help", "print this help message and exit");
  certify->add_option("--target", o.target, "G or F")->required();
  certify->add_option("--k-max", o.k_max, "last series coefficient swept")->capture_default_str();
  certify->add_option("--method", o.method, "series|grid|both")->capture_default_str();
  certify->add_option("--x-min", o.x_min)->capture_default_str();
  certify->add_option("--x-max", o.x_max)->capture_default_str();
  certify->add_option("--grid", o.grid, "number of grid points")->capture_default_str();
  certify->add_option("--h", o.h, "difference step")->capture_default_str();
  certify->add_option("--k-diff", o.k_diff, "highest difference order")->capture_default_str();
  certify->add_option("--slack", o.slack, "relative slack for grid differences")->capture_default_str();
  certify->add_option("--abs-slack", o.abs_slack, "absolute slack for coefficients")->capture_default_str();

  for (CLI::App* sub : {eval, certify}) {
    sub->add_option("--q", o.q);
    sub->add_option("--x", o.x);
    sub->add_option("--c", o.c);
    sub->add_option("--m", o.m);
    sub->add_option("--r", o.r);
    sub->add_option("--n", o.n);
    sub->add_option("--s", o.s);
  }

  auto* verify = app.add_subcommand("verify", "exact and numeric lemma sweeps");
  verify->add_option("--lemma", o.lemma, "conv|proof-steps|power-sums|ratio|weights")->required();
  verify->add_option("--r-max", o.r_max)->capture_default_str();
  verify->add_option("--k-max", o.verify_k_max)->capture_default_str();
  verify->add_option("--m-max", o.m_max)->capture_default_str();
  verify->add_option("--n-max", o.n_max)->capture_default_str();
  verify->add_option("--s", o.s);
  verify->add_option("--T", o.T);
  verify->add_option("--r", o.r);
  verify->add_option("--n", o.n);
  verify->add_option("--q", o.q);
  verify->add_option("--c", o.c);
  verify->add_option("--points", o.points)->capture_default_str();
  verify->add_flag("--include-empirical", o.include_empirical, "also sweep quads outside the proven regimes");

  auto* props = app.add_subcommand("props", "grid checks of analytic properties");
  props->add_option("--suite", o.suite, "reflection|sign-ladder|h-convexity|weights|chain|all")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    o.budget.validate();
    if (eval->parsed()) return cmd_eval(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_props(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kEvaluation;
  } catch (const Error& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kEvaluation;
  }
}

}  // namespace qpoly::cli
