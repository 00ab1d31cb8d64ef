#include "lamina/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "lamina/gaps.hpp"

namespace lamina {

namespace {

// Level-0 classes read from a file stand in for the generating family.
bool highlighted(const Provenance& p) {
  return p.kind == Provenance::Kind::Generator || (p.kind == Provenance::Kind::Input && p.level == 0);
}

constexpr double kTau = 6.283185307179586;

struct Canvas {
  double center;
  double radius;

  std::string num(double v) const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
  }
  std::string point(const Angle& a) const {
    double t = kTau * a.value().get_d();
    return num(center + radius * std::cos(t)) + "," + num(center - radius * std::sin(t));
  }
  // Path segment from the current point at a to b along a leaf.
  std::string chord_to(const Angle& a, const Angle& b, bool arcs) const {
    if (!arcs) return " L" + point(b);
    double phi = kTau * ccw_distance(a, b).get_d();
    bool ccw = phi <= kTau / 2;
    double span = ccw ? phi : kTau - phi;
    if (std::fabs(span - kTau / 2) < 1e-9) return " L" + point(b);
    double r = radius * std::tan(span / 2);
    return " A" + num(r) + "," + num(r) + " 0 0 " + (ccw ? "1" : "0") + " " + point(b);
  }
  std::string circle_to(const Angle& a, const Angle& b) const {
    double phi = kTau * ccw_distance(a, b).get_d();
    return " A" + num(radius) + "," + num(radius) + " 0 " + (phi > kTau / 2 ? "1" : "0") + " 0 " + point(b);
  }
};

}  // namespace

std::string render(const Lamination& lam, const RenderOptions& options) {
  Canvas cv{options.size / 2.0, options.size / 2.0 - 16.0};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\"" << options.size
      << "\" viewBox=\"0 0 " << options.size << " " << options.size << "\">\n";
  out << "<style>\n"
         ".disk{fill:#ffffff;stroke:#000000;stroke-width:1.5}\n"
         ".leaf{fill:none;stroke:#1f3b73;stroke-width:0.8}\n"
         ".gap{fill:#9fb7e0;fill-opacity:0.6;stroke:none}\n"
         ".gap.generator{fill:#e07b39;fill-opacity:0.8}\n"
         ".leaf.generator{stroke:#b34700;stroke-width:1.6}\n"
         ".face-FinitePolygon{fill:#d8e4f5}\n"
         ".face-WanderingPolygon{fill:#f5d8e4}\n"
         ".face-AllCritical{fill:#e8e8e8}\n"
         ".face-FatouParattracting{fill:#cdeccd}\n"
         ".face-FatouSiegel{fill:#f7e7a8}\n"
         ".face-Undetermined{fill:#ffffff}\n"
         "</style>\n";
  out << "<circle class=\"disk\" cx=\"" << cv.num(cv.center) << "\" cy=\"" << cv.num(cv.center) << "\" r=\""
      << cv.num(cv.radius) << "\"/>\n";

  if (options.tint) {
    ClassifyOptions co;
    co.horizon = options.horizon;
    GapAnalysis analysis(lam, co);
    for (const GapFace& f : analysis.arrangement().faces()) {
      GapKind kind = analysis.classify(f.id).kind;
      if (f.boundary.size() == 1 && f.boundary[0].full_circle) {
        out << "<circle class=\"face-" << to_string(kind) << "\" cx=\"" << cv.num(cv.center) << "\" cy=\""
            << cv.num(cv.center) << "\" r=\"" << cv.num(cv.radius) << "\"/>\n";
        continue;
      }
      out << "<path class=\"face-" << to_string(kind) << "\" d=\"M" << cv.point(f.boundary[0].from);
      for (const BoundaryItem& item : f.boundary) {
        out << (item.is_arc() ? cv.circle_to(item.from, item.to) : cv.chord_to(item.from, item.to, options.arcs));
      }
      out << " Z\"/>\n";
    }
  }

  std::set<Leaf> drawn;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const AngleClass& c = lam[i];
    if (c.size() < 3) continue;
    bool generator = highlighted(lam.provenance()[i]);
    out << "<path class=\"gap" << (generator ? " generator" : "") << "\" d=\"M" << cv.point(c[0]);
    for (std::size_t k = 0; k < c.size(); ++k) out << cv.chord_to(c[k], c[(k + 1) % c.size()], options.arcs);
    out << " Z\"/>\n";
  }
  for (std::size_t i = 0; i < lam.size(); ++i) {
    bool generator = highlighted(lam.provenance()[i]);
    for (const Leaf& l : hull_edges(lam[i])) {
      if (!drawn.insert(l).second) continue;
      out << "<path class=\"leaf" << (generator ? " generator" : "") << "\" d=\"M" << cv.point(l.first())
          << cv.chord_to(l.first(), l.second(), options.arcs) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lamina
