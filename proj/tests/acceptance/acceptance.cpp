// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "closed_form.hpp"
#include "generators.hpp"
#include "haga/errors.hpp"
#include "haga/figure.hpp"
#include "haga/oracle.hpp"
#include "haga/verifier.hpp"

namespace {

using namespace haga;

constexpr double kOracleTolerance = 1e-9;
constexpr double kOracleExclusion = 1e-6;  // around e = 2d
constexpr double kTheoremBudgetSeconds = 10.0;
constexpr double kHansenBudgetSeconds = 5.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// d = 1; e on the lattice k/28 over [-3, 4] (hits 0, 1 and 2) plus three
// off-lattice thirds: 200 values.
std::vector<Rat> criterion_grid() {
  std::vector<Rat> es;
  for (long k = -84; k <= 112; ++k) es.emplace_back(k, 28);
  for (const Rat& extra : {Rat(1, 3), Rat(2, 3), Rat(5, 3)}) es.push_back(extra);
  return es;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome theorem_suite() {
  const auto es = criterion_grid();
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = sweep(1, es);
  const double elapsed = seconds_since(t0);
  int fails = 0, passes = 0, skipped = 0;
  std::string first_fail;
  for (const auto& r : reports) {
    fails += r.count(CheckStatus::Fail);
    passes += r.count(CheckStatus::Pass);
    skipped += r.count(CheckStatus::NotApplicable);
    if (r.any_fail() && first_fail.empty()) first_fail = " first failure at e=" + r.e.to_string();
  }
  std::ostringstream msg;
  msg << es.size() << " configurations, " << passes << " pass, " << fails << " fail, " << skipped
      << " not applicable, " << elapsed << " s" << first_fail;
  return {es.size() == 200 && fails == 0 && elapsed < kTheoremBudgetSeconds, msg.str()};
}

Outcome worked_instances() {
  std::vector<std::string> bad;
  int checked = 0;
  const auto expect = [&](const std::string& what, const Rat& got, const Rat& want,
                          double approx) {
    ++checked;
    if (got != want) bad.push_back(what + "=" + got.to_string() + " want " + want.to_string());
    if (std::abs(approx - want.to_double()) > kOracleTolerance) {
      bad.push_back(what + " oracle=" + std::to_string(approx));
    }
  };
  const auto abc = [&](const Rat& d, const Rat& e, const Rat& a, const Rat& b, const Rat& c) {
    const HagaConfig cfg = build(d, e);
    const oracle::ApproxConfig g = oracle::approx_build(d.to_double(), e.to_double());
    const std::string at = "(" + d.to_string() + "," + e.to_string() + ") ";
    expect(at + "a", *cfg.a, a, *g.a);
    expect(at + "b", cfg.b, b, g.b);
    expect(at + "c", *cfg.c, c, *g.c);
    if (testing::overhang(d, e) != a) bad.push_back(at + "closed-form a");
    return std::pair{cfg, g};
  };

  {
    const auto [cfg, g] = abc(1, 3, 6, 2, 3);
    const double ef = std::hypot(g.F->x - g.E.x, g.F->y - g.E.y);
    const double fg = std::abs(g.F->x - g.G->x);
    const double dh = std::abs(g.H->x - g.D.x);
    expect("(1,3) |EF|", ef_length(cfg), 5, ef);
    expect("(1,3) |FG|-|DH|", fg_length(cfg) - dh_length(cfg), 6, fg - dh);
  }
  {
    const auto [cfg, g] = abc(2, 1, Rat(1, 3), 1, Rat(2, 3));
    const CircleSet s = circle_set(cfg);
    const auto& q = *g.circles;
    expect("(2,1) r1", s.eps1.radius, Rat(5, 6), q.eps1.radius);
    expect("(2,1) r2", s.eps2.radius, Rat(1, 12), q.eps2.radius);
    expect("(2,1) r3", s.eps3.radius, Rat(1, 4), q.eps3.radius);
    expect("(2,1) r4", s.eps4.radius, Rat(1, 4), q.eps4.radius);
    expect("(2,1) r5", s.eps5.radius, Rat(1, 2), q.eps5.radius);
    expect("(2,1) r6", s.eps6.radius, Rat(1, 2), q.eps6.radius);
  }
  abc(2, 3, 3, 1, 6);
  abc(2, -1, Rat(3, 5), 3, Rat(2, 5));

  std::string detail =
      "4 instances, " + std::to_string(checked) + " exact values, each also matched by the oracle";
  if (!bad.empty()) detail = "mismatch: " + bad.front() + " (+" + std::to_string(bad.size() - 1) + ")";
  return {bad.empty(), detail};
}

Outcome classic_haga() {
  const HagaConfig cfg = build(2, 1);
  const Rat af = cfg.F->x;
  const Rat fb = cfg.B.x - cfg.F->x;
  const Rat inradius = tritangent_circle(triangle_AEF(cfg), TritangentKind::Incircle).radius;
  std::ostringstream msg;
  msg << "|AF|:|FB| = " << af / fb << ":1, inradius(AEF) = " << inradius << ", |B'F| = " << *cfg.a;
  return {af / fb == Rat(2) && inradius == *cfg.a, msg.str()};
}

Outcome hansen() {
  testing::Gen gen(20261015);
  const auto t0 = std::chrono::steady_clock::now();
  int hansen_ok = 0, complement_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto tri = gen.pythagorean(40);
    if (hansen_relations(RightTriangleFrame(tri.p, tri.q)).all()) ++hansen_ok;
  }
  for (int i = 0; i < 1000;) {
    const GeneralTriangleSides s{gen.positive(60, 13), gen.positive(60, 13),
                                 gen.positive(60, 13)};
    if (!(s.a < s.b + s.c && s.b < s.c + s.a && s.c < s.a + s.b)) continue;
    ++i;
    const Rat inside = sin2_half_subtended(s, TritangentKind::Incircle);
    const Rat outside = sin2_half_subtended(s, TritangentKind::ExOppP);
    if (inside + outside == Rat(1) &&
        inside == sin2_half_subtended_by_cosines(s, TritangentKind::Incircle)) {
      ++complement_ok;
    }
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream msg;
  msg << "Hansen " << hansen_ok << "/1000, complementarity " << complement_ok << "/1000, "
      << elapsed << " s";
  return {hansen_ok == 1000 && complement_ok == 1000 && elapsed < kHansenBudgetSeconds, msg.str()};
}

Outcome round_trip() {
  testing::Gen gen(5050);
  int squares = 0, reproduced = 0;
  for (int i = 0; i < 50; ++i) {
    const auto tri = gen.pythagorean(30);
    const Point A{gen.rational(20, 3), gen.rational(20, 3)};
    const Point F = A + Point{tri.p, 0};
    const Point E = A + Point{0, tri.q};
    const auto built = squares_from_triangle(RightTriangleFrame::from_vertices(A, F, E));
    squares += static_cast<int>(built.size());
    for (const Square& sq : built) {
      const SquareCoordinates local = square_coordinates(sq, E, F);
      const HagaConfig cfg = build(local.d, local.e);
      if (!cfg.F || *cfg.F != local.F) continue;
      const RightTriangleFrame aef = triangle_AEF(cfg);
      if (aef.leg_p() == tri.p && aef.leg_q() == tri.q && aef.hyp() == tri.h) ++reproduced;
    }
  }
  std::ostringstream msg;
  msg << squares << " squares from 50 triangles, " << reproduced << " rebuilt exactly";
  return {squares == 200 && reproduced == 200, msg.str()};
}

Outcome differential_oracle() {
  double worst = 0;
  int compared = 0, excluded = 0;
  for (const Rat& e : criterion_grid()) {
    const double ed = e.to_double();
    if (std::abs(ed - 2.0) <= kOracleExclusion) {
      ++excluded;
      continue;
    }
    worst = std::max(worst, oracle::compare(build(1, e), oracle::approx_build(1.0, ed)));
    ++compared;
  }
  std::ostringstream msg;
  msg << compared << " configurations (" << excluded << " excluded near e=2d), max error "
      << worst;
  return {worst <= kOracleTolerance, msg.str()};
}

Outcome fault_injection() {
  testing::Gen gen(777);
  int detected = 0;
  for (int i = 0; i < 100;) {
    const Rat d = gen.positive(20, 7);
    const Rat e = gen.rational(60, 11);
    if (e == Rat(2) * d) continue;
    ++i;
    HagaConfig cfg = build(d, e);
    const Rat delta = gen.nonzero(7, 101);
    Rat* targets[] = {&cfg.B_prime.x, &cfg.B_prime.y, &cfg.F->x, &cfg.F->y,
                      &cfg.G->x,      &cfg.G->y,      &cfg.H->x, &cfg.H->y};
    *targets[gen.integer(0, 7)] += delta;
    if (verify(cfg).any_fail()) ++detected;
  }
  return {detected == 100, std::to_string(detected) + "/100 perturbations detected"};
}

Outcome determinism() {
  std::vector<std::string> bad;
  const auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  int figures = 0;
  for (const FigurePreset& p : figure_presets()) {
    std::string first, second;
    run({"figure", "--paper-figure", p.name}, &first);
    run({"figure", "--paper-figure", p.name}, &second);
    if (first.empty() || first != second) bad.push_back("figure " + p.name);
    ++figures;
  }
  if (run({"sweep", "--d", "1", "--e-from", "-3", "--e-to", "4", "--steps", "28"}) !=
      cli::kExitOk) {
    bad.push_back("sweep exit on a passing grid");
  }
  if (run({"sweep", "--d", "1", "--e-from", "0", "--e-to", "1", "--steps", "0"}) !=
      cli::kExitUsage) {
    bad.push_back("sweep exit on --steps 0");
  }
  if (run({"sweep", "--d", "0", "--e-list", "1"}) != cli::kExitUsage) {
    bad.push_back("sweep exit on d = 0");
  }
  const auto es = criterion_grid();
  const auto reports = sweep(1, es);
  if (case_coverage(reports).size() != kAllCases.size()) bad.push_back("coverage");

  std::string detail = std::to_string(figures) +
                       " presets byte-identical, sweep exit codes 0/2 as specified, coverage "
                       "h1..h7";
  if (!bad.empty()) detail = "broken: " + bad.front();
  return {bad.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 exact theorem suite", theorem_suite},
      {"AC2 worked instances", worked_instances},
      {"AC3 classic fold", classic_haga},
      {"AC4 Hansen and complementarity", hansen},
      {"AC5 squares round trip", round_trip},
      {"AC6 differential oracle", differential_oracle},
      {"AC7 fault injection", fault_injection},
      {"AC8 CLI and figure determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %-32s %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
