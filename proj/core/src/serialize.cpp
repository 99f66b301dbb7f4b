#include "haga/serialize.hpp"

namespace haga {

Json to_json(const Rat& r) { return r.to_string(); }

Json to_json(const Point& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const Line& l) { return Json::array({to_json(l.a()), to_json(l.b()), to_json(l.c())}); }

Json to_json(const Circle& c) {
  Json j;
  j["center"] = to_json(c.center);
  j["radius"] = to_json(c.radius);
  return j;
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? to_json(*value) : Json(nullptr);
}

}  // namespace

Json config_json(const HagaConfig& cfg) {
  Json j;
  j["d"] = to_json(cfg.d);
  j["e"] = to_json(cfg.e);
  j["case"] = std::string(to_string(cfg.kind));
  j["crease"] = to_json(cfg.crease);

  Json points;
  points["A"] = to_json(cfg.A);
  points["B"] = to_json(cfg.B);
  points["C"] = to_json(cfg.C);
  points["D"] = to_json(cfg.D);
  points["E"] = to_json(cfg.E);
  points["F"] = optional_json(cfg.F);
  points["G"] = optional_json(cfg.G);
  points["H"] = optional_json(cfg.H);
  points["B_prime"] = to_json(cfg.B_prime);
  j["points"] = std::move(points);

  const bool has_f = cfg.F.has_value();
  Json lengths;
  lengths["a"] = optional_json(cfg.a);
  lengths["b"] = to_json(cfg.b);
  lengths["c"] = optional_json(cfg.c);
  lengths["d"] = to_json(cfg.d);
  lengths["EF"] = has_f ? to_json(ef_length(cfg)) : Json(nullptr);
  lengths["FG"] = has_f ? to_json(fg_length(cfg)) : Json(nullptr);
  lengths["DH"] = has_f ? to_json(dh_length(cfg)) : Json(nullptr);
  j["lengths"] = std::move(lengths);

  Json circles;
  if (has_f) {
    const CircleSet set = circle_set(cfg);
    for (std::string_view name : {"delta", "alpha", "beta", "gamma", "eps1", "eps2", "eps3",
                                  "eps4", "eps5", "eps6"}) {
      circles[std::string(name)] = to_json(circle_by_name(set, name));
    }
  } else {
    circles["delta"] = to_json(circle_delta(cfg));
    for (std::string_view name :
         {"alpha", "beta", "gamma", "eps1", "eps2", "eps3", "eps4", "eps5", "eps6"}) {
      circles[std::string(name)] = nullptr;
    }
  }
  j["circles"] = std::move(circles);
  j["foldable"] = is_physically_foldable(cfg);
  return j;
}

Json report_json(const VerificationReport& report) {
  Json j;
  j["d"] = to_json(report.d);
  j["e"] = to_json(report.e);
  j["case"] = std::string(to_string(report.kind));
  Json checks = Json::array();
  for (const CheckResult& r : report.results) {
    Json entry;
    entry["id"] = std::string(to_string(r.id));
    entry["status"] = std::string(to_string(r.status));
    if (r.witness) entry["witness"] = to_json(*r.witness);
    if (!r.note.empty()) entry["note"] = r.note;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace haga
