#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "haga/config.hpp"
#include "haga/errors.hpp"
#include "haga/figure.hpp"
#include "haga/oracle.hpp"
#include "haga/serialize.hpp"
#include "haga/verifier.hpp"

namespace haga::cli {

namespace {

constexpr double kOracleTolerance = 1e-9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& flag, const std::string& text) {
  auto r = Rat::parse(text);
  if (!r) throw UsageError(flag + ": expected a rational P/Q, got '" + text + "'");
  return *r;
}

Rat parse_side(const std::string& text) {
  Rat d = parse_rat("--d", text);
  if (d.sign() <= 0) throw UsageError("--d must be positive, got " + d.to_string());
  return d;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// "-" or empty: stdout.
void emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << body;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  out << "case " << to_string(report.kind) << " (d=" << report.d << ", e=" << report.e << ")\n";
  for (const CheckResult& r : report.results) {
    out << "  " << std::left << std::setw(18) << to_string(r.id) << ' ' << to_string(r.status);
    if (r.witness) out << "  residue=" << *r.witness;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
  out << kAllChecks.size() << " checks: " << report.count(CheckStatus::Pass) << " pass, "
      << report.count(CheckStatus::Fail) << " fail, "
      << report.count(CheckStatus::NotApplicable) << " not applicable\n";
}

std::string coverage_line(const std::vector<VerificationReport>& reports) {
  std::string line = "coverage:";
  for (HagaCase c : case_coverage(reports)) line += " " + std::string(to_string(c));
  return line;
}

struct Options {
  std::string d, e, json, out, circles, paper_figure, e_from, e_to, e_list, legs;
  int steps = -1;
  bool oracle = false;
  bool list_presets = false;
};

int cmd_classify(const Options& o, std::ostream& out) {
  out << to_string(classify(parse_side(o.d), parse_rat("--e", o.e))) << '\n';
  return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const HagaConfig cfg = build(parse_side(o.d), parse_rat("--e", o.e));
  emit(o.json, config_json(cfg).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Rat d = parse_side(o.d);
  const Rat e = parse_rat("--e", o.e);
  const HagaConfig cfg = build(d, e);
  const VerificationReport report = verify(cfg);
  bool failed = report.any_fail();

  if (o.json == "-") {
    out << report_json(report).dump(2) << '\n';
  } else {
    print_report(report, out);
    if (!o.json.empty()) emit(o.json, report_json(report).dump(2) + "\n", out);
  }

  if (o.oracle) {
    std::ostream& log = o.json == "-" ? std::cerr : out;
    try {
      const double err = oracle::compare(cfg, oracle::approx_build(d.to_double(), e.to_double()));
      const bool ok = err <= kOracleTolerance;
      log << "oracle: max |exact - approx| = " << format_double(err) << " (tol 1e-9) "
          << (ok ? "ok" : "FAIL") << '\n';
      failed = failed || !ok;
    } catch (const GeometryError& ex) {
      if (ex.code() != ErrorCode::NearDegenerate) throw;
      log << "oracle: skipped (" << ex.what() << ")\n";
    }
  }
  return failed ? kExitCheckFailure : kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Rat d = parse_side(o.d);
  std::vector<Rat> grid;
  if (!o.e_list.empty()) {
    if (!o.e_from.empty() || !o.e_to.empty() || o.steps >= 0) {
      throw UsageError("--e-list excludes --e-from/--e-to/--steps");
    }
    for (const std::string& item : split_list(o.e_list)) grid.push_back(parse_rat("--e-list", item));
  } else {
    if (o.e_from.empty() || o.e_to.empty() || o.steps < 0) {
      throw UsageError("sweep needs --e-list or --e-from, --e-to and --steps");
    }
    if (o.steps < 1) throw UsageError("--steps must be at least 1");
    const Rat from = parse_rat("--e-from", o.e_from);
    const Rat to = parse_rat("--e-to", o.e_to);
    for (int k = 0; k <= o.steps; ++k) grid.push_back(from + (to - from) * Rat(k, o.steps));
  }

  const std::vector<VerificationReport> reports = sweep(d, grid);
  int failures = 0;
  Json all = Json::array();
  for (const VerificationReport& r : reports) {
    if (r.any_fail()) ++failures;
    all.push_back(report_json(r));
    if (o.json != "-") {
      out << "e=" << r.e << " case=" << to_string(r.kind)
          << " pass=" << r.count(CheckStatus::Pass) << " fail=" << r.count(CheckStatus::Fail)
          << " n/a=" << r.count(CheckStatus::NotApplicable) << '\n';
    }
  }
  if (!o.json.empty()) emit(o.json, all.dump(2) + "\n", out);
  std::ostream& log = o.json == "-" ? std::cerr : out;
  log << reports.size() << " configurations, " << failures << " with failures; "
      << coverage_line(reports) << '\n';
  return failures > 0 ? kExitCheckFailure : kExitOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  if (o.list_presets) {
    for (const FigurePreset& p : figure_presets()) {
      out << std::left << std::setw(12) << p.name << std::setw(4) << p.figure_number << " d="
          << p.spec.d << " e=" << p.spec.e << " case " << to_string(classify(p.spec.d, p.spec.e))
          << "  " << p.caption << '\n';
    }
    return kExitOk;
  }
  FigureSpec spec;
  if (!o.paper_figure.empty()) {
    if (!o.d.empty() || !o.e.empty() || !o.circles.empty()) {
      throw UsageError("--paper-figure excludes --d, --e and --circles");
    }
    spec = find_preset(o.paper_figure).spec;
  } else {
    if (o.d.empty() || o.e.empty()) throw UsageError("figure needs --d and --e, or --paper-figure");
    spec.d = parse_side(o.d);
    spec.e = parse_rat("--e", o.e);
    spec.circles = split_list(o.circles);
  }
  emit(o.out, render_figure(spec).svg, out);
  return kExitOk;
}

int cmd_construct_squares(const Options& o, std::ostream& out) {
  const std::vector<std::string> legs = split_list(o.legs);
  if (legs.size() != 2) throw UsageError("--legs expects P/Q,P/Q");
  const RightTriangleFrame t(parse_rat("--legs", legs[0]), parse_rat("--legs", legs[1]));
  const Point F = t.p_vertex();
  const Point E = t.q_vertex();

  Json j;
  j["legs"] = Json::array({to_json(t.leg_p()), to_json(t.leg_q())});
  j["hyp"] = to_json(t.hyp());
  j["A"] = to_json(t.right_vertex());
  j["E"] = to_json(E);
  j["F"] = to_json(F);
  Json squares = Json::array();
  bool all_ok = true;
  const std::vector<Square> built = squares_from_triangle(t);
  for (std::size_t i = 0; i < built.size(); ++i) {
    const Square& sq = built[i];
    const SquareCoordinates local = square_coordinates(sq, E, F);
    const HagaConfig cfg = build(local.d, local.e);
    const bool round_trip = cfg.F && *cfg.F == local.F;
    const bool verified = !verify(cfg).any_fail();
    all_ok = all_ok && round_trip && verified;

    Json s;
    s["alpha"] = std::string(to_string(kAllTritangentKinds[i]));
    s["A"] = to_json(sq.A);
    s["B"] = to_json(sq.B);
    s["C"] = to_json(sq.C);
    s["D"] = to_json(sq.D);
    s["d"] = to_json(local.d);
    s["e"] = to_json(local.e);
    s["case"] = std::string(to_string(cfg.kind));
    s["round_trip"] = round_trip;
    s["verify_pass"] = verified;
    squares.push_back(std::move(s));
  }
  j["squares"] = std::move(squares);
  emit(o.json, j.dump(2) + "\n", out);
  return all_ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Haga fold: exact construction, verification and figures", "haga"};
  app.require_subcommand(1);
  Options o;

  const auto add_de = [&](CLI::App* sub, bool required) {
    auto* d = sub->add_option("--d", o.d, "square side, rational P/Q");
    auto* e = sub->add_option("--e", o.e, "ordinate of E on line DA, rational P/Q");
    if (required) {
      d->required();
      e->required();
    }
  };

  auto* classify_cmd = app.add_subcommand("classify", "print the case h1..h7 of (d, e)");
  add_de(classify_cmd, true);

  auto* build_cmd = app.add_subcommand("build", "print the configuration as JSON");
  add_de(build_cmd, true);
  build_cmd->add_option("--json", o.json, "output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run every check on one configuration");
  add_de(verify_cmd, true);
  verify_cmd->add_flag("--oracle", o.oracle, "also compare against the floating-point oracle");
  verify_cmd->add_option("--json", o.json, "write the report JSON to PATH ('-' for stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "verify a grid or list of e values");
  sweep_cmd->add_option("--d", o.d, "square side")->required();
  sweep_cmd->add_option("--e-from", o.e_from, "grid start");
  sweep_cmd->add_option("--e-to", o.e_to, "grid end");
  sweep_cmd->add_option("--steps", o.steps, "number of grid intervals (>= 1)");
  sweep_cmd->add_option("--e-list", o.e_list, "comma-separated e values");
  sweep_cmd->add_option("--json", o.json, "write all reports to PATH ('-' for stdout)");

  auto* figure_cmd = app.add_subcommand("figure", "render an SVG figure");
  add_de(figure_cmd, false);
  figure_cmd->add_option("--circles", o.circles, "comma-separated circle names");
  figure_cmd->add_option("--out", o.out, "output path (default stdout)");
  figure_cmd->add_option("--paper-figure", o.paper_figure, "preset name or figure number");
  figure_cmd->add_flag("--list-presets", o.list_presets, "list figure presets");

  auto* squares_cmd =
      app.add_subcommand("construct-squares", "the four squares whose fold yields a triangle");
  squares_cmd->add_option("--legs", o.legs, "legs P/Q,P/Q of the right triangle")->required();
  squares_cmd->add_option("--json", o.json, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (build_cmd->parsed()) return cmd_build(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
    if (figure_cmd->parsed()) return cmd_figure(o, out);
    if (squares_cmd->parsed()) return cmd_construct_squares(o, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const GeometryError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace haga::cli
