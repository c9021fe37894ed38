#include "nca/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nca/errors.hpp"

namespace nca {
namespace {

constexpr double kSize = 800;
constexpr double kMargin = 40;

struct Pt {
  double x, y;
};

double cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Keeps the part of `poly` where sign * cross(a, b, p) >= 0.
std::vector<Pt> clip(const std::vector<Pt>& poly, Pt a, Pt b, double sign) {
  std::vector<Pt> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt p = poly[i], q = poly[(i + 1) % poly.size()];
    const double sp = sign * cross(a, b, p), sq = sign * cross(a, b, q);
    if (sp >= 0) out.push_back(p);
    if ((sp < 0) != (sq < 0)) {
      const double t = sp / (sp - sq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

// Chord of line(a, b) inside a convex polygon.
std::optional<std::pair<Pt, Pt>> chord(const std::vector<Pt>& poly, Pt a, Pt b) {
  std::vector<Pt> hits;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt p = poly[i], q = poly[(i + 1) % poly.size()];
    const double sp = cross(a, b, p), sq = cross(a, b, q);
    if ((sp < 0) != (sq < 0) || sp == 0) {
      const double t = sp == sq ? 0 : sp / (sp - sq);
      hits.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  // farthest pair along the line direction
  const Pt d{b.x - a.x, b.y - a.y};
  auto key = [&](Pt p) { return p.x * d.x + p.y * d.y; };
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), [&](Pt u, Pt v) { return key(u) < key(v); });
  return std::pair{*lo, *hi};
}

}  // namespace

std::string render_svg(const Json& snap) {
  const Space space = parse_space(snap.at("space").get<std::string>());
  std::vector<Position> pos;
  std::vector<double> weight;
  for (const auto& p : snap.at("points")) {
    pos.push_back(position_from_json(p, space));
    weight.push_back(to_double(rational_from_json(p.at("w"))));
  }
  const double max_w = weight.empty() ? 1 : *std::max_element(weight.begin(), weight.end());

  // model coordinates, then a uniform map into the canvas
  std::vector<Pt> raw;
  for (const auto& p : pos) {
    switch (space) {
      case Space::Plane:
        raw.push_back({to_double(p.as_plane().x), to_double(p.as_plane().y)});
        break;
      case Space::Circle: {
        const double a = 2 * std::numbers::pi * to_double(p.as_circle().t);
        raw.push_back({std::cos(a), std::sin(a)});
        break;
      }
      case Space::Line:
        raw.push_back({to_double(p.as_line().x), 0});
        break;
    }
  }
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  if (space != Space::Circle && !raw.empty()) {
    x0 = x1 = raw[0].x;
    y0 = y1 = raw[0].y;
    for (Pt p : raw) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    const double pad = std::max({x1 - x0, y1 - y0, 1e-9}) * 0.05;
    x0 -= pad;
    x1 += pad;
    y0 -= pad;
    y1 += pad;
  }
  const double scale = (kSize - 2 * kMargin) / std::max({x1 - x0, space == Space::Line ? 0.0 : y1 - y0, 1e-12});
  const double line_y = kSize * 0.75;
  auto map = [&](Pt p) -> Pt {
    if (space == Space::Line) return {kMargin + (p.x - x0) * scale, line_y};
    return {kMargin + (p.x - x0) * scale, kSize - kMargin - (p.y - y0) * scale};
  };

  std::ostringstream svg;
  svg.precision(6);
  svg << std::fixed;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto segment = [&](Pt a, Pt b, const char* attrs) {
    if (space == Space::Line) {
      const double r = std::abs(b.x - a.x) / 2;
      svg << "<path d=\"M " << std::min(a.x, b.x) << ' ' << a.y << " A " << r << ' ' << r << " 0 0 1 "
          << std::max(a.x, b.x) << ' ' << b.y << "\" fill=\"none\" " << attrs << "/>\n";
    } else {
      svg << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\" " << attrs
          << "/>\n";
    }
  };
  auto at = [&](PointId id) {
    if (id == 0 || id > raw.size()) throw Error("snapshot references unknown point " + std::to_string(id));
    return map(raw[id - 1]);
  };

  if (space == Space::Circle) {
    svg << "<circle class=\"boundary\" cx=\"" << kSize / 2 << "\" cy=\"" << kSize / 2 << "\" r=\"" << scale
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  } else if (space == Space::Line) {
    svg << "<line class=\"boundary\" x1=\"0\" y1=\"" << line_y << "\" x2=\"" << kSize << "\" y2=\"" << line_y
        << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  }

  // region split lines
  const char* faint = "class=\"region\" stroke=\"#bbb\" stroke-width=\"0.75\"";
  if (snap.contains("regions")) {
    if (space == Space::Plane) {
      std::vector<std::vector<Pt>> poly{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
      for (const auto& r : snap.at("regions")) {
        const std::size_t id = r.at("id"), parent = r.at("parent");
        const Pt a = raw.at(r.at("a").get<std::size_t>() - 1), b = raw.at(r.at("b").get<std::size_t>() - 1);
        if (poly.size() <= id) poly.resize(id + 1);
        const auto& outer = poly.at(parent);
        if (r.at("side").get<int>() > 0) {
          if (auto c = chord(outer, a, b)) segment(map(c->first), map(c->second), faint);
        }
        poly[id] = clip(outer, a, b, r.at("side").get<int>());
      }
    } else {
      for (const auto& r : snap.at("regions"))
        if (r.at("side").get<int>() > 0) segment(at(r.at("a")), at(r.at("b")), faint);
    }
  }

  for (const auto& e : snap.at("revoked"))
    segment(at(e.at(0)), at(e.at(1)), "class=\"revoked\" stroke=\"#c33\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
  for (const auto& e : snap.at("edges"))
    segment(at(e.at(0)), at(e.at(1)), "class=\"matched\" stroke=\"black\" stroke-width=\"2\"");

  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Pt p = map(raw[i]);
    const double r = 2 + 8 * std::sqrt(weight[i] / max_w);
    svg << "<circle class=\"point\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << r
        << "\" fill=\"#1f5fa8\"><title>p" << i + 1 << " w=" << snap.at("points")[i].at("w").get<std::string>()
        << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace nca
