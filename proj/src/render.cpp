#include "dcc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dcc {

namespace {

constexpr double kPitch = 40.0;
constexpr double kMargin = 24.0;
constexpr double kHeight = 150.0;
constexpr double kCircle = 16.0;
constexpr double kGap = 28.0;

struct Pt {
  double x;
  double y;
};

struct SegmentShape {
  Pt p0, p1, p2, p3;  // cubic Bézier from the initial to the terminal point
  std::string label;
};

struct CircleShape {
  Pt centre;
  std::string label;
};

struct TermLayout {
  std::uint64_t multiplicity;
  double x;  // left edge
  double width;
  std::vector<std::pair<BoundaryPoint, Pt>> points;
  std::vector<Sign> signs;
  std::vector<SegmentShape> segments;
  std::vector<CircleShape> circles;
};

struct CellLayout {
  std::size_t row;
  std::size_t col;
  double x;
  double y;
  double width;
  std::vector<TermLayout> terms;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

TermLayout layout_term(const GCob& f, std::uint64_t n, double x0, double y0, Direction dir, const Alphabet& al) {
  TermLayout t{n, x0, 0, {}, {}, {}, {}};
  const double top = y0 + kMargin;
  const double bottom = y0 + kHeight - kMargin;
  const double src_y = dir == Direction::TopDown ? top : bottom;
  const double tgt_y = dir == Direction::TopDown ? bottom : top;
  const std::size_t width_points = std::max(f.src().size(), f.tgt().size());
  const double points_width = static_cast<double>(width_points) * kPitch;
  const double circles_width = static_cast<double>(f.circles().size()) * (2 * kCircle + 12.0);
  t.width = std::max(kPitch, points_width + circles_width);

  auto place = [&](BoundaryPoint p) -> Pt {
    const double y = p.side == Side::Source ? src_y : tgt_y;
    return {x0 + kPitch / 2 + p.index * kPitch, y};
  };
  for (std::uint32_t k = 0; k < f.src().size(); ++k) {
    t.points.push_back({{Side::Source, k}, place({Side::Source, k})});
    t.signs.push_back(f.src()[k]);
  }
  for (std::uint32_t k = 0; k < f.tgt().size(); ++k) {
    t.points.push_back({{Side::Target, k}, place({Side::Target, k})});
    t.signs.push_back(f.tgt()[k]);
  }
  for (const auto& s : f.segments()) {
    const Pt a = place(s.from);
    const Pt b = place(s.to);
    SegmentShape sh{a, {}, {}, b, s.label.is_identity() ? "" : al.format(s.label)};
    if (s.from.side != s.to.side) {
      const double mid = (a.y + b.y) / 2;
      sh.p1 = {a.x, mid};
      sh.p2 = {b.x, mid};
    } else {
      // Caps and cups bulge into the cell, deeper for wider arcs.
      const double reach = std::min(kHeight / 2 - kMargin, 14.0 + std::abs(a.x - b.x) / 3);
      const double dy = (a.y == top) ? reach : -reach;
      sh.p1 = {a.x, a.y + dy};
      sh.p2 = {b.x, b.y + dy};
    }
    t.segments.push_back(sh);
  }
  double cx = x0 + points_width + kCircle + 6.0;
  for (const auto& c : f.circles()) {
    t.circles.push_back({{cx, y0 + kHeight / 2}, al.format(c.rep())});
    cx += 2 * kCircle + 12.0;
  }
  return t;
}

std::vector<CellLayout> layout(const MatArrow& m, Direction dir, const Alphabet& al, double& total_w, double& total_h) {
  std::vector<CellLayout> cells;
  std::vector<double> col_width(m.cols(), 2 * kPitch);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      CellLayout c{i, j, 0, 0, 0, {}};
      double x = kGap / 2;
      for (const auto& [f, n] : m.at(i, j).terms()) {
        if (n > 1) x += kGap;  // room for the multiplicity prefix
        auto t = layout_term(f, n, x, 0, dir, al);
        x += t.width + kGap;
        c.terms.push_back(std::move(t));
      }
      c.width = x;
      col_width[j] = std::max(col_width[j], c.width);
      cells.push_back(std::move(c));
    }
  }
  std::vector<double> col_x(m.cols(), 0);
  double acc = kGap;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    col_x[j] = acc;
    acc += col_width[j] + kGap;
  }
  total_w = std::max(acc, 2 * kPitch);
  total_h = kGap + static_cast<double>(m.rows()) * (kHeight + kGap);
  for (auto& c : cells) {
    c.x = col_x[c.col];
    c.y = kGap + static_cast<double>(c.row) * (kHeight + kGap);
    c.width = col_width[c.col];
    for (auto& t : c.terms) {
      auto shift = [&](Pt& p) {
        p.x += c.x;
        p.y += c.y;
      };
      t.x += c.x;
      for (auto& [bp, p] : t.points) shift(p);
      for (auto& s : t.segments) {
        shift(s.p0);
        shift(s.p1);
        shift(s.p2);
        shift(s.p3);
      }
      for (auto& k : t.circles) shift(k.centre);
    }
  }
  return cells;
}

Pt bezier_mid(const SegmentShape& s) {
  return {(s.p0.x + 3 * s.p1.x + 3 * s.p2.x + s.p3.x) / 8, (s.p0.y + 3 * s.p1.y + 3 * s.p2.y + s.p3.y) / 8};
}

std::string path_of(const SegmentShape& s) {
  return "M " + num(s.p0.x) + " " + num(s.p0.y) + " C " + num(s.p1.x) + " " + num(s.p1.y) + ", " + num(s.p2.x) +
         " " + num(s.p2.y) + ", " + num(s.p3.x) + " " + num(s.p3.y);
}

std::string render_svg(const MatArrow& m, const Alphabet& al, Direction dir) {
  double w = 0;
  double h = 0;
  const auto cells = layout(m, dir, al, w, h);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
        "markerHeight=\"7\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  for (const auto& c : cells) {
    os << "<g class=\"entry\" data-row=\"" << c.row << "\" data-col=\"" << c.col << "\">\n"
       << "<rect x=\"" << num(c.x) << "\" y=\"" << num(c.y) << "\" width=\"" << num(c.width) << "\" height=\""
       << num(kHeight) << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
    if (c.terms.empty()) {
      os << "<text x=\"" << num(c.x + c.width / 2) << "\" y=\"" << num(c.y + kHeight / 2)
         << "\" text-anchor=\"middle\" font-size=\"20\">0</text>\n";
    }
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
      const auto& t = c.terms[k];
      if (k > 0) {
        os << "<text x=\"" << num(t.x - kGap / 2 - (t.multiplicity > 1 ? kGap : 0)) << "\" y=\""
           << num(c.y + kHeight / 2) << "\" text-anchor=\"middle\">+</text>\n";
      }
      if (t.multiplicity > 1) {
        os << "<text x=\"" << num(t.x - kGap / 2) << "\" y=\"" << num(c.y + kHeight / 2)
           << "\" text-anchor=\"middle\">" << t.multiplicity << "\xC3\x97</text>\n";
      }
      for (std::size_t p = 0; p < t.points.size(); ++p) {
        const Pt& q = t.points[p].second;
        os << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"2.5\"/>"
           << "<text x=\"" << num(q.x + 5) << "\" y=\"" << num(q.y + (q.y < c.y + kHeight / 2 ? -6 : 14))
           << "\" font-size=\"10\">" << (t.signs[p] == Sign::Plus ? "+" : "\xE2\x88\x92") << "</text>\n";
      }
      for (const auto& s : t.segments) {
        os << "<path d=\"" << path_of(s) << "\" fill=\"none\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
        if (!s.label.empty()) {
          const Pt mid = bezier_mid(s);
          os << "<text x=\"" << num(mid.x + 4) << "\" y=\"" << num(mid.y) << "\">" << escape(s.label) << "</text>\n";
        }
      }
      for (const auto& k2 : t.circles) {
        os << "<circle cx=\"" << num(k2.centre.x) << "\" cy=\"" << num(k2.centre.y) << "\" r=\"" << num(kCircle)
           << "\" fill=\"none\" stroke=\"black\"/>";
        if (k2.label != "e") {
          os << "<text x=\"" << num(k2.centre.x) << "\" y=\"" << num(k2.centre.y + kCircle + 14)
             << "\" text-anchor=\"middle\">" << escape(k2.label) << "</text>";
        }
        os << "\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dot(const MatArrow& m, const Alphabet& al, Direction dir) {
  std::ostringstream os;
  os << "digraph cobordisms {\n  rankdir=" << (dir == Direction::TopDown ? "TB" : "BT") << ";\n"
     << "  node [shape=point];\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string cell = "e" + std::to_string(i) + "_" + std::to_string(j);
      os << "  subgraph cluster_" << cell << " {\n    label=\"(" << i << ", " << j << ")\";\n";
      const auto& x = m.at(i, j);
      if (x.is_zero()) os << "    " << cell << "_zero [shape=plaintext, label=\"0\"];\n";
      std::size_t k = 0;
      for (const auto& [f, n] : x.terms()) {
        const std::string id = cell + "_" + std::to_string(k++);
        auto node = [&](BoundaryPoint p) { return id + (p.side == Side::Source ? "_s" : "_t") + std::to_string(p.index); };
        os << "    subgraph cluster_" << id << " {\n      label=\"" << (n > 1 ? std::to_string(n) + "\xC3\x97" : "")
           << "\";\n";
        for (std::uint32_t s = 0; s < f.src().size(); ++s) {
          os << "      " << node({Side::Source, s}) << " [xlabel=\"" << (f.src()[s] == Sign::Plus ? "+" : "-")
             << "\"];\n";
        }
        for (std::uint32_t s = 0; s < f.tgt().size(); ++s) {
          os << "      " << node({Side::Target, s}) << " [xlabel=\"" << (f.tgt()[s] == Sign::Plus ? "+" : "-")
             << "\"];\n";
        }
        if (!f.src().empty()) {
          os << "      { rank=same;";
          for (std::uint32_t s = 0; s < f.src().size(); ++s) os << " " << node({Side::Source, s}) << ";";
          os << " }\n";
        }
        if (!f.tgt().empty()) {
          os << "      { rank=same;";
          for (std::uint32_t s = 0; s < f.tgt().size(); ++s) os << " " << node({Side::Target, s}) << ";";
          os << " }\n";
        }
        for (const auto& s : f.segments()) {
          os << "      " << node(s.from) << " -> " << node(s.to);
          if (!s.label.is_identity()) os << " [label=\"" << al.format(s.label) << "\"]";
          os << ";\n";
        }
        std::size_t c = 0;
        for (const auto& circ : f.circles()) {
          const std::string label = al.format(circ.rep());
          os << "      " << id << "_c" << c++ << " [shape=circle, label=\"" << (label == "e" ? "" : label) << "\"];\n";
        }
        os << "    }\n";
      }
      os << "  }\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_json(const MatArrow& m, const Alphabet& al, Direction dir) {
  double w = 0;
  double h = 0;
  const auto cells = layout(m, dir, al, w, h);
  auto pt = [](Pt p) { return Json::array({p.x, p.y}); };
  Json out = to_json(m, al);
  out["direction"] = dir == Direction::TopDown ? "down" : "up";
  Json jc = Json::array();
  for (const auto& c : cells) {
    Json terms = Json::array();
    for (const auto& t : c.terms) {
      Json points = Json::array();
      for (const auto& [bp, p] : t.points) {
        points.push_back({{"side", bp.side == Side::Source ? "source" : "target"}, {"index", bp.index}, {"at", pt(p)}});
      }
      Json segs = Json::array();
      for (const auto& s : t.segments) {
        segs.push_back({{"path", Json::array({pt(s.p0), pt(s.p1), pt(s.p2), pt(s.p3)})}, {"label", s.label}});
      }
      Json circs = Json::array();
      for (const auto& k : t.circles) circs.push_back({{"centre", pt(k.centre)}, {"label", k.label}});
      terms.push_back({{"multiplicity", t.multiplicity}, {"points", points}, {"segments", segs}, {"circles", circs}});
    }
    jc.push_back({{"row", c.row}, {"col", c.col}, {"origin", pt({c.x, c.y})}, {"width", c.width}, {"terms", terms}});
  }
  out["layout"] = {{"width", w}, {"height", h}, {"cells", jc}};
  return out.dump(2) + "\n";
}

}  // namespace

std::string render(const MatArrow& m, const Alphabet& al, RenderFormat format, Direction direction) {
  switch (format) {
    case RenderFormat::Svg: return render_svg(m, al, direction);
    case RenderFormat::Dot: return render_dot(m, al, direction);
    case RenderFormat::Json: return render_json(m, al, direction);
  }
  return {};
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "svg") return RenderFormat::Svg;
  if (name == "dot") return RenderFormat::Dot;
  if (name == "json") return RenderFormat::Json;
  throw std::invalid_argument("unknown render format '" + name + "' (expected svg, dot or json)");
}

Direction parse_direction(const std::string& name) {
  if (name == "down") return Direction::TopDown;
  if (name == "up") return Direction::BottomUp;
  throw std::invalid_argument("unknown direction '" + name + "' (expected down or up)");
}

}  // namespace dcc
