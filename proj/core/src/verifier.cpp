#include "haga/verifier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>
#include <utility>

#include "haga/errors.hpp"

namespace haga {

std::string_view to_string(CheckId id) {
  switch (id) {
    case CheckId::P3_1_TANGENT: return "P3_1_TANGENT";
    case CheckId::P3_1_EF: return "P3_1_EF";
    case CheckId::T3_2_HAGA: return "T3_2_HAGA";
    case CheckId::T4_1_RADII: return "T4_1_RADII";
    case CheckId::T4_2_SUM: return "T4_2_SUM";
    case CheckId::T4_2_PRODUCT: return "T4_2_PRODUCT";
    case CheckId::T4_3_BETA_TOUCH: return "T4_3_BETA_TOUCH";
    case CheckId::SET_INEXCIRCLES: return "SET_INEXCIRCLES";
    case CheckId::T5_1_RADIUS: return "T5_1_RADIUS";
    case CheckId::T5_1_MIDPOINT: return "T5_1_MIDPOINT";
    case CheckId::P6_1_FGDH: return "P6_1_FGDH";
    case CheckId::T6_2_R3R4: return "T6_2_R3R4";
    case CheckId::T6_2_A_SUM: return "T6_2_A_SUM";
    case CheckId::T6_3_CONGRUENT: return "T6_3_CONGRUENT";
    case CheckId::T2_2_HANSEN_AEF: return "T2_2_HANSEN_AEF";
    case CheckId::T6_TANGENT_PERP: return "T6_TANGENT_PERP";
  }
  return "?";
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

const CheckResult& VerificationReport::result(CheckId id) const {
  const auto it = std::find_if(results.begin(), results.end(),
                               [id](const CheckResult& r) { return r.id == id; });
  if (it == results.end()) throw std::out_of_range("check missing from report");
  return *it;
}

int VerificationReport::count(CheckStatus status) const {
  return static_cast<int>(std::count_if(results.begin(), results.end(),
                                        [status](const CheckResult& r) { return r.status == status; }));
}

namespace {

/// Failure raised inside a check: carries the exact residue.
struct CheckFailure {
  std::string what;
  Rat residue;
};

void require_zero(const char* what, const Rat& residue) {
  if (!residue.is_zero()) throw CheckFailure{what, residue};
}

void require(const char* what, bool ok) {
  if (!ok) throw CheckFailure{what, Rat(1)};
}

// Everything a check may need, re-derived from the stored points.
struct Context {
  const HagaConfig& cfg;
  Circle delta;
  std::optional<CircleSet> circles;
  std::string circle_error;

  Rat a_sq() const { return dist_sq(cfg.B_prime, *cfg.F); }
  Rat b_sq() const { return dist_sq(cfg.D, cfg.E); }
  Rat c_sq() const { return dist_sq(cfg.B, *cfg.F); }

  static Rat root(const char* what, const Rat& sq) {
    auto r = sqrt_rat(sq);
    if (!r) throw CheckFailure{std::string(what) + " is not a rational square", sq};
    return *r;
  }
  Rat a() const { return root("|B'F|^2", a_sq()); }
  Rat b() const { return root("|DE|^2", b_sq()); }
  Rat c() const { return root("|BF|^2", c_sq()); }

  const CircleSet& set() const {
    if (!circles) throw CheckFailure{"circle construction failed: " + circle_error, Rat(1)};
    return *circles;
  }

  void require_f_incidence() const {
    require_zero("F on AB", cfg.line_AB().eval(*cfg.F));
    require_zero("F on B'E", cfg.line_B_prime_E().eval(*cfg.F));
  }
};

enum class Scope { Always, NeedsF, Ordinary };

struct CheckDef {
  CheckId id;
  Scope scope;
  std::function<void(const Context&)> run;
};

void check_tangent(const Context& ctx) {
  require_zero("line B'E tangent to delta", tangency_residue(ctx.cfg.line_B_prime_E(), ctx.delta));
}

void check_ef(const Context& ctx) {
  ctx.require_f_incidence();
  const Rat b = ctx.b();
  const Rat c = ctx.c();
  Rat ef;
  switch (ctx.cfg.kind) {
    case HagaCase::H3: ef = c - b; break;
    case HagaCase::H7: ef = b - c; break;
    default: ef = b + c; break;
  }
  require("|EF| by case is nonnegative", ef.sign() >= 0);
  require_zero("|EF|^2 - dist^2(E,F)", square(ef) - dist_sq(ctx.cfg.E, *ctx.cfg.F));
}

void check_haga(const Context& ctx) {
  ctx.require_f_incidence();
  const Rat ae_sq = dist_sq(ctx.cfg.A, ctx.cfg.E);
  const Rat af_sq = dist_sq(ctx.cfg.A, *ctx.cfg.F);
  require_zero("|AE|^2|AF|^2 - 4b^2c^2", ae_sq * af_sq - Rat(4) * ctx.b_sq() * ctx.c_sq());
}

void check_radii(const Context& ctx) {
  const CircleSet& s = ctx.set();
  require_zero("r_alpha^2 - a^2", square(s.alpha.radius) - ctx.a_sq());
  require_zero("r_beta^2 - b^2", square(s.beta.radius) - ctx.b_sq());
  require_zero("r_gamma^2 - c^2", square(s.gamma.radius) - ctx.c_sq());
}

void check_sum(const Context& ctx) {
  require_zero("signed sum", signed_sum_residue(ctx.cfg.kind, ctx.a(), ctx.b(), ctx.c(), ctx.cfg.d));
}

void check_product(const Context& ctx) {
  require_zero("a^2 d^2 - b^2 c^2", ctx.a_sq() * square(ctx.cfg.d) - ctx.b_sq() * ctx.c_sq());
}

void check_beta_touch(const Context& ctx) {
  const Circle& beta = ctx.set().beta;
  require_zero("dist^2(center beta, B') - r_beta^2",
               dist_sq(beta.center, ctx.cfg.B_prime) - square(beta.radius));
  require_zero("line B'E tangent to beta", tangency_residue(ctx.cfg.line_B_prime_E(), beta));
}

void check_inexcircles(const Context& ctx) {
  const CircleSet& s = ctx.set();
  std::vector<Circle> expected;
  for (const Circle& c : tritangent_circles(triangle_AEF(ctx.cfg))) expected.push_back(c);
  int unmatched = 0;
  for (const Circle* c : {&s.alpha, &s.beta, &s.gamma, &s.delta}) {
    const auto it = std::find(expected.begin(), expected.end(), *c);
    if (it == expected.end()) {
      ++unmatched;
    } else {
      expected.erase(it);
    }
  }
  require_zero("circles outside the tritangent set", Rat(unmatched));
}

void check_eps1_radius(const Context& ctx) {
  require_zero("(2 r1)^2 - |EF|^2",
               Rat(4) * square(ctx.set().eps1.radius) - dist_sq(ctx.cfg.E, *ctx.cfg.F));
}

void check_eps1_midpoint(const Context& ctx) {
  const Circle& eps1 = ctx.set().eps1;
  const Line ef = line_through(ctx.cfg.E, *ctx.cfg.F);
  require_zero("line EF tangent to eps1", tangency_residue(ef, eps1));
  require_zero("dist^2(touch point, midpoint EF)",
               dist_sq(foot_of_perpendicular(eps1.center, ef), midpoint(ctx.cfg.E, *ctx.cfg.F)));
}

void check_fgdh(const Context& ctx) {
  require("G and H exist", ctx.cfg.G.has_value() && ctx.cfg.H.has_value());
  require_zero("G on crease", ctx.cfg.crease.eval(*ctx.cfg.G));
  require_zero("G on AB", ctx.cfg.line_AB().eval(*ctx.cfg.G));
  require_zero("H on crease", ctx.cfg.crease.eval(*ctx.cfg.H));
  require_zero("H on CD", ctx.cfg.line_CD().eval(*ctx.cfg.H));
  require_zero("fg_dh_relation - a", fg_dh_relation(ctx.cfg) - ctx.a());
}

void check_r3r4(const Context& ctx) {
  require_zero("r3 - r4", ctx.set().eps3.radius - ctx.set().eps4.radius);
}

void check_a_sum(const Context& ctx) {
  const CircleSet& s = ctx.set();
  require_zero("a - (r2 + r4)", ctx.a() - (s.eps2.radius + s.eps4.radius));
}

void check_congruent(const Context& ctx) {
  require_zero("r5 - r6", ctx.set().eps5.radius - ctx.set().eps6.radius);
}

void check_hansen(const Context& ctx) {
  const HansenRelations h = hansen_relations(triangle_AEF(ctx.cfg));
  require("r_a = r + r_b + r_c", h.sum_ok);
  require("r r_a = r_b r_c", h.product_ok);
  require("r + r_b = b", h.leg_b_ok);
  require("r + r_c = c", h.leg_c_ok);
}

void check_tangent_perp(const Context& ctx) {
  const CircleSet& s = ctx.set();
  const RightTriangleFrame bfg = triangle_BFG(ctx.cfg);
  const auto k3 = kind_of(bfg, s.eps3);
  const auto k5 = kind_of(bfg, s.eps5);
  require("eps3 and eps5 are tritangent to B'FG", k3.has_value() && k5.has_value());
  const Line t = common_tangent_perpendicular(bfg, *k3, *k5);
  require_zero("t tangent to eps3", tangency_residue(t, s.eps3));
  require_zero("t tangent to eps5", tangency_residue(t, s.eps5));
  require_zero("t . AB normal", dot(t.normal(), ctx.cfg.line_AB().normal()));
  std::array<Rat, 2> left{s.eps3.radius, s.eps5.radius};
  std::array<Rat, 2> right{s.eps4.radius, s.eps6.radius};
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  require_zero("{r3, r5} vs {r4, r6}", (left[0] - right[0]).abs() + (left[1] - right[1]).abs());
}

const std::array<CheckDef, 16>& check_table() {
  static const std::array<CheckDef, 16> table = {{
      {CheckId::P3_1_TANGENT, Scope::Always, check_tangent},
      {CheckId::P3_1_EF, Scope::NeedsF, check_ef},
      {CheckId::T3_2_HAGA, Scope::NeedsF, check_haga},
      {CheckId::T4_1_RADII, Scope::NeedsF, check_radii},
      {CheckId::T4_2_SUM, Scope::NeedsF, check_sum},
      {CheckId::T4_2_PRODUCT, Scope::NeedsF, check_product},
      {CheckId::T4_3_BETA_TOUCH, Scope::NeedsF, check_beta_touch},
      {CheckId::SET_INEXCIRCLES, Scope::Ordinary, check_inexcircles},
      {CheckId::T5_1_RADIUS, Scope::NeedsF, check_eps1_radius},
      {CheckId::T5_1_MIDPOINT, Scope::NeedsF, check_eps1_midpoint},
      {CheckId::P6_1_FGDH, Scope::NeedsF, check_fgdh},
      {CheckId::T6_2_R3R4, Scope::NeedsF, check_r3r4},
      {CheckId::T6_2_A_SUM, Scope::NeedsF, check_a_sum},
      {CheckId::T6_3_CONGRUENT, Scope::NeedsF, check_congruent},
      {CheckId::T2_2_HANSEN_AEF, Scope::Ordinary, check_hansen},
      {CheckId::T6_TANGENT_PERP, Scope::Ordinary, check_tangent_perp},
  }};
  return table;
}

CheckResult run_check(const CheckDef& def, const Context& ctx) {
  CheckResult out;
  out.id = def.id;
  const bool has_f = ctx.cfg.F.has_value() && ctx.cfg.kind != HagaCase::H2;
  if (def.scope != Scope::Always && !has_f) {
    out.status = CheckStatus::NotApplicable;
    out.note = "case h2: F does not exist";
    return out;
  }
  if (def.scope == Scope::Ordinary && !is_ordinary(ctx.cfg.kind)) {
    out.status = CheckStatus::NotApplicable;
    out.note = "degenerate case " + std::string(to_string(ctx.cfg.kind)) + ": AEF is not proper";
    return out;
  }
  try {
    def.run(ctx);
    out.status = CheckStatus::Pass;
  } catch (const CheckFailure& failure) {
    out.status = CheckStatus::Fail;
    out.witness = failure.residue;
    out.note = failure.what;
  } catch (const std::exception& ex) {
    out.status = CheckStatus::Fail;
    out.note = ex.what();
  }
  return out;
}

}  // namespace

VerificationReport verify(const HagaConfig& cfg) {
  Context ctx{cfg, circle_delta(cfg), std::nullopt, {}};
  if (cfg.F && cfg.kind != HagaCase::H2) {
    try {
      ctx.circles = circle_set(cfg);
    } catch (const std::exception& ex) {
      ctx.circle_error = ex.what();
    }
  }
  VerificationReport report{cfg.d, cfg.e, cfg.kind, {}};
  report.results.reserve(kAllChecks.size());
  for (const CheckDef& def : check_table()) report.results.push_back(run_check(def, ctx));
  return report;
}

std::vector<VerificationReport> sweep(const Rat& d, std::span<const Rat> e_values) {
  if (d.sign() <= 0) throw GeometryError(ErrorCode::InvalidSquare, "d = " + d.to_string());
  std::vector<VerificationReport> reports(e_values.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::size_t chunk = (e_values.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < e_values.size(); begin += chunk) {
    const std::size_t end = std::min(e_values.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) reports[i] = verify(build(d, e_values[i]));
    }));
  }
  for (auto& job : jobs) job.get();
  return reports;
}

std::set<HagaCase> case_coverage(std::span<const VerificationReport> reports) {
  std::set<HagaCase> cases;
  for (const auto& r : reports) cases.insert(r.kind);
  return cases;
}

}  // namespace haga
