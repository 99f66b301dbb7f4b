#include "haga/figure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "haga/errors.hpp"

namespace haga {

namespace {

FigurePreset preset(std::string name, int number, std::string caption, long d, long e_num,
                    long e_den, std::vector<std::string> circles) {
  FigureSpec spec;
  spec.d = Rat(d);
  spec.e = Rat(e_num, e_den);
  spec.circles = std::move(circles);
  return {std::move(name), number, std::move(caption), std::move(spec)};
}

const std::vector<std::string> kAbc = {"alpha", "beta", "gamma"};
const std::vector<std::string> kAbcd = {"alpha", "beta", "gamma", "delta"};
const std::vector<std::string> kEps = {"eps2", "eps3", "eps4", "eps5", "eps6"};

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = {
      preset("haga", 1, "Haga's fold, E the midpoint of DA", 2, 1, 1, {}),
      preset("h1", 5, "(h1)", 1, 3, 1, {}),
      preset("h2", 6, "(h2)", 1, 2, 1, {}),
      preset("h3", 7, "(h3)", 2, 3, 1, {}),
      preset("h4", 8, "(h4)", 2, 2, 1, {}),
      preset("h5", 9, "(h5)", 2, 1, 1, {}),
      preset("h6", 10, "(h6)", 2, 0, 1, {}),
      preset("h7-lt", 11, "(h7), |AE| < sqrt(2) d", 2, -1, 1, {}),
      preset("h7-eq", 12, "(h7), |AE| close to sqrt(2) d", 5, -7, 1, {}),
      preset("h7-gt", 13, "(h7), |AE| > sqrt(2) d", 1, -3, 1, {}),
      preset("abc-h1", 14, "(h1)", 1, 3, 1, kAbc),
      preset("abc-h3", 15, "(h3)", 2, 3, 1, kAbc),
      preset("abc-h4", 16, "(h4)", 2, 2, 1, kAbc),
      preset("abc-h5", 17, "(h5)", 2, 1, 1, kAbc),
      preset("abc-h6", 18, "(h6)", 2, 0, 1, kAbc),
      preset("abc-h7", 19, "(h7)", 2, -1, 1, kAbc),
      preset("sum-h1", 20, "a = b + c + d in the case (h1)", 1, 3, 1, kAbcd),
      preset("sum-h3", 21, "c = a + b + d in the case (h3)", 2, 3, 1, kAbcd),
      preset("sum-h5", 22, "d = a + b + c in the case (h5)", 2, 1, 1, kAbcd),
      preset("sum-h7", 23, "b = a + c + d in the case (h7)", 2, -1, 1, kAbcd),
      preset("eps1-h1", 24, "(h1)", 1, 3, 1, {"eps1"}),
      preset("eps1-h3", 25, "(h3)", 2, 3, 1, {"eps1"}),
      preset("eps1-h5", 26, "(h5)", 2, 1, 1, {"eps1"}),
      preset("eps1-h7", 27, "(h7)", 2, -1, 1, {"eps1"}),
      preset("inradii-h5", 29, "inradii of B'FG and DEH sum to a", 2, 1, 1, {"eps2", "eps4"}),
      preset("eps-h1", 32, "(h1)", 1, 3, 1, kEps),
      preset("eps-h3", 33, "(h3)", 2, 3, 1, kEps),
      preset("eps-h5", 34, "(h5)", 2, 1, 1, kEps),
      preset("eps-h7", 35, "(h7)", 2, -1, 1, kEps),
  };
  return presets;
}

const FigurePreset& find_preset(std::string_view key) {
  for (const FigurePreset& p : figure_presets()) {
    if (p.name == key || std::to_string(p.figure_number) == key) return p;
  }
  throw GeometryError(ErrorCode::UnknownPreset, std::string(key));
}

namespace {

struct V {
  double x, y;
};

V to_v(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                                  "#bcbd22", "#17becf"};

class Viewport {
 public:
  void include(V p) {
    x0_ = std::min(x0_, p.x);
    x1_ = std::max(x1_, p.x);
    y0_ = std::min(y0_, p.y);
    y1_ = std::max(y1_, p.y);
  }

  void finish() {
    const double span = std::max({x1_ - x0_, y1_ - y0_, 1e-9});
    const double margin = 0.1 * span;
    x0_ -= margin;
    x1_ += margin;
    y0_ -= margin;
    y1_ += margin;
    scale_ = kFigureHeight / (y1_ - y0_);
  }

  V map(V p) const { return {(p.x - x0_) * scale_, (y1_ - p.y) * scale_}; }
  double scale() const { return scale_; }
  double width() const { return (x1_ - x0_) * scale_; }

  // The visible part of a*x + b*y + c = 0, in world coordinates.
  std::optional<std::pair<V, V>> clip(double a, double b, double c) const {
    std::vector<V> hits;
    const auto inside = [&](V p) {
      const double eps = 1e-9 * (x1_ - x0_ + y1_ - y0_);
      return p.x >= x0_ - eps && p.x <= x1_ + eps && p.y >= y0_ - eps && p.y <= y1_ + eps;
    };
    if (b != 0) {
      for (double x : {x0_, x1_}) {
        const V p{x, -(a * x + c) / b};
        if (inside(p)) hits.push_back(p);
      }
    }
    if (a != 0) {
      for (double y : {y0_, y1_}) {
        const V p{-(b * y + c) / a, y};
        if (inside(p)) hits.push_back(p);
      }
    }
    if (hits.size() < 2) return std::nullopt;
    std::pair<V, V> best{hits[0], hits[1]};
    double best_len = -1;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      for (std::size_t j = i + 1; j < hits.size(); ++j) {
        const double len = std::hypot(hits[i].x - hits[j].x, hits[i].y - hits[j].y);
        if (len > best_len) {
          best_len = len;
          best = {hits[i], hits[j]};
        }
      }
    }
    return best;
  }

 private:
  double x0_ = std::numeric_limits<double>::infinity();
  double y0_ = std::numeric_limits<double>::infinity();
  double x1_ = -std::numeric_limits<double>::infinity();
  double y1_ = -std::numeric_limits<double>::infinity();
  double scale_ = 1;
};

struct NamedPoint {
  std::string name;
  Point at;
};

// Greedy placement over a fixed ring of offsets; first candidate whose box
// avoids every earlier label and every point marker wins.
std::vector<PlacedLabel> place_labels(const std::vector<std::pair<std::string, V>>& anchors) {
  constexpr double kMarker = 3.0;
  constexpr double kCharWidth = 0.6 * kLabelFontSize;
  std::vector<Box> obstacles;
  for (const auto& [text, p] : anchors) {
    obstacles.push_back({p.x - kMarker, p.y - kMarker, p.x + kMarker, p.y + kMarker});
  }

  std::vector<PlacedLabel> placed;
  for (const auto& [text, p] : anchors) {
    const double w = kCharWidth * static_cast<double>(text.size());
    const double h = kLabelFontSize;
    Box chosen{};
    double chosen_cost = std::numeric_limits<double>::infinity();
    for (double ring : {6.0, 22.0, 44.0}) {
      for (int k = 0; k < 8; ++k) {
        const double angle = -M_PI / 4 + k * M_PI / 4;  // start above-right
        const double cx = p.x + std::cos(angle) * (ring + w / 2);
        const double cy = p.y - std::sin(angle) * (ring + h / 2);
        const Box box{cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2};
        double cost = 0;
        for (const Box& o : obstacles) cost += box.overlaps(o) ? 1 : 0;
        for (const PlacedLabel& l : placed) cost += box.overlaps(l.box) ? 1 : 0;
        if (cost < chosen_cost) {
          chosen_cost = cost;
          chosen = box;
        }
        if (cost == 0) break;
      }
      if (chosen_cost == 0) break;
    }
    placed.push_back({text, p.x, p.y, chosen});
  }
  return placed;
}

}  // namespace

RenderedFigure render_figure(const FigureSpec& spec) {
  const HagaConfig cfg = build(spec.d, spec.e);

  std::vector<std::string> names = spec.circles;
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const std::string& n : names) {
    if (std::find(kCircleNames.begin(), kCircleNames.end(), n) == kCircleNames.end()) {
      throw GeometryError(ErrorCode::UnknownCircle, n);
    }
  }
  std::vector<std::pair<std::string, Circle>> circles;
  if (!names.empty()) {
    if (!cfg.F) {
      for (const std::string& n : names) {
        if (n != "delta") throw GeometryError(ErrorCode::NoF, "case h2 has no circle " + n);
        circles.emplace_back(n, circle_delta(cfg));
      }
    } else {
      const CircleSet set = circle_set(cfg);
      for (const std::string& n : names) circles.emplace_back(n, circle_by_name(set, n));
    }
  }

  std::vector<NamedPoint> points = {{"A", cfg.A}, {"B", cfg.B}, {"C", cfg.C}, {"D", cfg.D},
                                    {"E", cfg.E}, {"B'", cfg.B_prime}};
  if (cfg.F) points.push_back({"F", *cfg.F});
  if (spec.draw_crease && cfg.G) points.push_back({"G", *cfg.G});
  if (spec.draw_crease && cfg.H) points.push_back({"H", *cfg.H});

  Viewport view;
  for (const NamedPoint& p : points) view.include(to_v(p.at));
  for (const auto& [name, c] : circles) {
    const V center = to_v(c.center);
    const double r = c.radius.to_double();
    view.include({center.x - r, center.y - r});
    view.include({center.x + r, center.y + r});
  }
  view.finish();

  RenderedFigure out;
  out.height = kFigureHeight;
  out.width = view.width();

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(out.width)
      << "\" height=\"" << fmt(out.height) << "\" viewBox=\"0 0 " << fmt(out.width) << ' '
      << fmt(out.height) << "\">\n";
  svg << "<desc>d=" << cfg.d << " e=" << cfg.e << " case " << to_string(cfg.kind) << "</desc>\n";

  const auto polyline_points = [&](std::initializer_list<Point> pts) {
    std::string s;
    for (const Point& p : pts) {
      const V m = view.map(to_v(p));
      if (!s.empty()) s += ' ';
      s += fmt(m.x) + "," + fmt(m.y);
    }
    return s;
  };

  if (spec.draw_square) {
    svg << "<polygon id=\"square\" points=\"" << polyline_points({cfg.A, cfg.B, cfg.C, cfg.D})
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.50\"/>\n";
  }
  if (spec.draw_crease) {
    const auto seg = view.clip(cfg.crease.a().to_double(), cfg.crease.b().to_double(),
                               cfg.crease.c().to_double());
    if (seg) {
      const V p = view.map(seg->first);
      const V q = view.map(seg->second);
      svg << "<line id=\"crease\" x1=\"" << fmt(p.x) << "\" y1=\"" << fmt(p.y) << "\" x2=\""
          << fmt(q.x) << "\" y2=\"" << fmt(q.y)
          << "\" stroke=\"#555555\" stroke-width=\"1.00\" stroke-dasharray=\"6,4\"/>\n";
    }
  }
  if (spec.draw_triangle && cfg.F) {
    svg << "<polygon id=\"triangle-AEF\" points=\"" << polyline_points({cfg.A, cfg.E, *cfg.F})
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";
    svg << "<line id=\"fold-BpE\" x1=\"" << fmt(view.map(to_v(cfg.B_prime)).x) << "\" y1=\""
        << fmt(view.map(to_v(cfg.B_prime)).y) << "\" x2=\"" << fmt(view.map(to_v(cfg.E)).x)
        << "\" y2=\"" << fmt(view.map(to_v(cfg.E)).y)
        << "\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";
  }
  for (const auto& [name, c] : circles) {
    const auto idx = static_cast<std::size_t>(
        std::find(kCircleNames.begin(), kCircleNames.end(), name) - kCircleNames.begin());
    const V m = view.map(to_v(c.center));
    if (c.radius.is_zero()) {
      svg << "<circle id=\"" << name << "\" class=\"point-circle\" cx=\"" << fmt(m.x)
          << "\" cy=\"" << fmt(m.y) << "\" r=\"3.00\" fill=\"" << kPalette[idx] << "\"/>\n";
    } else {
      svg << "<circle id=\"" << name << "\" cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(m.y)
          << "\" r=\"" << fmt(c.radius.to_double() * view.scale()) << "\" fill=\"none\" stroke=\""
          << kPalette[idx] << "\" stroke-width=\"1.20\"/>\n";
    }
  }

  // Coincident points share one label, e.g. "A=B'=F" in case h4.
  std::vector<std::pair<std::string, V>> anchors;
  std::vector<Point> seen;
  for (const NamedPoint& p : points) {
    const auto it = std::find(seen.begin(), seen.end(), p.at);
    if (it != seen.end()) {
      anchors[static_cast<std::size_t>(it - seen.begin())].first += "=" + p.name;
      continue;
    }
    seen.push_back(p.at);
    anchors.emplace_back(p.name, view.map(to_v(p.at)));
  }
  out.labels = place_labels(anchors);

  svg << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << fmt(kLabelFontSize)
      << "\">\n";
  for (const PlacedLabel& l : out.labels) {
    svg << "<circle cx=\"" << fmt(l.anchor_x) << "\" cy=\"" << fmt(l.anchor_y)
        << "\" r=\"2.00\" fill=\"#000000\"/>\n";
    svg << "<text x=\"" << fmt(l.box.x0) << "\" y=\"" << fmt(l.box.y1 - 3.0) << "\">"
        << escape(l.text) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  out.svg = svg.str();
  return out;
}

}  // namespace haga
