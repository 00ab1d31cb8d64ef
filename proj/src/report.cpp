#include "lamina/report.hpp"

#include <sstream>

namespace lamina {

namespace {

std::string image_str(const std::optional<FaceImage>& img) {
  if (!img) return "unresolved";
  if (auto f = std::get_if<std::size_t>(&*img)) return "face " + std::to_string(*f);
  if (auto l = std::get_if<Leaf>(&*img)) return "leaf " + l->str();
  return "point " + std::get<Angle>(*img).str();
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

std::string format_validation(const Lamination& lam, const InvarianceReport& report) {
  std::ostringstream out;
  out << "degree: " << lam.degree() << "\n";
  out << "mode: " << to_string(lam.mode()) << "\n";
  out << "depth: " << lam.depth() << "\n";
  out << "classes: " << lam.size() << "\n";
  for (const auto& [axiom, v] : report.verdict) out << "axiom " << axiom << ": " << to_string(v) << "\n";
  out << "backward unchecked: " << report.backward_unchecked << "\n";
  out << "critical classes: " << report.critical_classes.size() << "\n";
  for (std::size_t i : report.critical_classes) out << "  critical " << lam[i].str() << "\n";
  for (const auto& [i, j] : report.unlinked_violations) {
    out << "violation E2: " << lam[i].str() << " " << lam[j].str() << "\n";
  }
  for (const auto& v : report.forward_violations) {
    out << "violation D1: " << lam[v.cls].str() << " -> " << v.image.str();
    if (v.nearest) out << " nearest " << lam[*v.nearest].str();
    out << "\n";
  }
  for (std::size_t i : report.backward_violations) out << "violation D2: " << lam[i].str() << "\n";
  for (std::size_t i : report.covering_violations) out << "violation D3: " << lam[i].str() << "\n";
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string format_faces(const GapAnalysis& analysis) {
  std::ostringstream out;
  const auto& faces = analysis.arrangement().faces();
  out << "faces: " << faces.size() << "\n";
  for (const GapFace& f : faces) {
    out << "face " << f.id << ": basis " << AngleClass(f.vertex_basis).str() << " image "
        << image_str(analysis.image(f.id)) << "\n";
    out << "  boundary";
    for (const BoundaryItem& item : f.boundary) out << " " << item.str();
    out << "\n";
  }
  return out.str();
}

std::string format_classification(const GapAnalysis& analysis) {
  std::ostringstream out;
  const auto& faces = analysis.arrangement().faces();
  out << "faces: " << faces.size() << "\n";
  out << "horizon: " << analysis.options().horizon << "\n";
  for (const GapFace& f : faces) {
    GapClassification c = analysis.classify(f.id);
    out << "face " << f.id << ": kind " << to_string(c.kind) << " period " << opt(c.period) << " preperiod "
        << opt(c.preperiod) << " degree " << opt(c.degree) << " rotation "
        << (c.rotation_number ? c.rotation_number->str() : "-") << " chain " << opt(c.chain_bound) << " basis "
        << f.vertex_basis.size() << " evidence-depth " << c.evidence_depth;
    if (!c.note.empty()) out << " note " << c.note;
    out << "\n";
  }
  for (const CriticalLeaf& l : analysis.critical_leaves()) {
    out << "critical leaf " << l.leaf.str() << ": " << to_string(l.tag) << " depth " << l.depth << "\n";
  }
  return out.str();
}

std::string format_criterion(const Lamination& lam, const CriterionReport& report) {
  std::ostringstream out;
  out << "evidence-depth: " << report.evidence_depth << "\n";
  out << "parattracting_found: " << (report.parattracting ? "true" : "false") << "\n";
  if (report.parattracting) {
    out << "  witness face " << report.parattracting->face << " period " << report.parattracting->period
        << " degree " << report.parattracting->degree << " basis " << report.parattracting->basis_size << "\n";
  }
  out << "periodic_class_census:";
  for (const auto& [period, count] : report.census) out << " " << period << ":" << count;
  out << "\n";
  out << "census_verdict: " << to_string(report.census_verdict) << " (heuristic)\n";
  out << "siegel_configuration: " << (report.siegel ? "found" : "absent") << "\n";
  if (report.siegel) {
    out << "  label " << report.siegel->label << "\n";
    out << "  cycle";
    for (std::size_t f : report.siegel->cycle) out << " " << f;
    out << "\n";
    for (std::size_t i = 0; i < report.siegel->critical.size(); ++i) {
      out << "  H " << report.siegel->critical[i].str() << " contact " << report.siegel->contact[i].str()
          << " image " << image_class(lam.degree(), report.siegel->critical[i]).str() << "\n";
    }
    out << "  evidence-depth " << report.siegel->evidence_depth << "\n";
  }
  out << "overall: "
      << (report.overall == CriterionReport::Overall::NonDegenerate ? "NonDegenerate" : "NoEvidence") << "\n";
  if (!report.witness.empty()) out << "witness: " << report.witness << "\n";
  return out.str();
}

std::string format_slicing(const SlicingFamily& fam, const SlicingResult& result) {
  std::ostringstream out;
  out << "members: " << fam.size() << "\n";
  out << "well_slicing: " << (result.well_slicing ? "true" : "false") << "\n";
  if (result.unseparated) {
    out << "unseparated: " << fam.members()[result.unseparated->first].str() << " "
        << fam.members()[result.unseparated->second].str() << "\n";
  }
  if (!result.reason.empty()) out << "reason: " << result.reason << "\n";
  return out.str();
}

std::string format_valence(const ValenceReport& report) {
  std::ostringstream out;
  out << "max_valence: " << report.max_valence << "\n";
  for (const ValenceEntry& e : report.entries) {
    out << "endpoint " << e.endpoint.str() << ": " << e.leaves.size() << " leaves"
        << (e.clause_ok ? "" : " (clause unmet)") << "\n";
    for (const std::string& m : e.middle) out << "  middle " << m << "\n";
  }
  for (const Angle& x : report.hard_violations) out << "violation: " << x.str() << "\n";
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace lamina
