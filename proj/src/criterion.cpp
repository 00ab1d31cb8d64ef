#include <algorithm>
#include <set>

#include "lamina/criterion.hpp"

namespace lamina {

const char* to_string(CensusVerdict v) {
  switch (v) {
    case CensusVerdict::Growing: return "Growing";
    case CensusVerdict::Stable: return "Stable";
    case CensusVerdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

std::map<int, std::size_t> periodic_class_census(const Lamination& lam, int period_bound) {
  std::map<int, std::size_t> census;
  for (int n = 1; n <= period_bound; ++n) census[n] = 0;
  for (const AngleClass& c : lam.classes()) {
    if (c.size() < 2) continue;
    AngleClass cur = c;
    for (int n = 1; n <= period_bound; ++n) {
      cur = image_class(lam.degree(), cur);
      if (cur == c) {
        ++census[n];
        break;
      }
      if (cur.size() < 2) break;
    }
  }
  return census;
}

CensusVerdict census_verdict(const std::map<int, std::size_t>& census, int period_bound, int window) {
  if (window < 2 || period_bound < window) return CensusVerdict::Inconclusive;
  std::vector<std::size_t> tail;
  for (int n = period_bound - window + 1; n <= period_bound; ++n) {
    auto it = census.find(n);
    tail.push_back(it == census.end() ? 0 : it->second);
  }
  if (std::all_of(tail.begin(), tail.end(), [](std::size_t x) { return x == 0; })) return CensusVerdict::Stable;
  bool increasing = true;
  for (std::size_t i = 1; i < tail.size(); ++i) increasing = increasing && tail[i] > tail[i - 1];
  return increasing ? CensusVerdict::Growing : CensusVerdict::Inconclusive;
}

std::optional<SiegelWitness> detect_siegel_configuration(const GapAnalysis& analysis) {
  const Lamination& lam = analysis.lamination();
  const Arrangement& arr = analysis.arrangement();
  const int d = lam.degree();
  std::set<std::vector<std::size_t>> seen;
  for (const GapFace& f : arr.faces()) {
    GapClassification c = analysis.classify(f.id);
    if (c.kind != GapKind::FatouSiegel || c.preperiod.value_or(1) != 0) continue;
    auto cycle = analysis.cycle_of(f.id);
    if (!cycle) continue;
    std::vector<std::size_t> key = *cycle;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;

    std::set<Leaf> boundary;
    for (std::size_t g : *cycle) {
      for (const BoundaryItem& item : arr.faces()[g].boundary) {
        if (item.is_leaf()) boundary.insert(Leaf(item.from, item.to));
      }
    }
    SiegelWitness w;
    w.cycle = *cycle;
    w.evidence_depth = lam.depth();
    for (const AngleClass& cls : lam.classes()) {
      if (image_class(d, cls).size() != 1) continue;
      std::vector<Leaf> touching;
      for (const Leaf& l : hull_edges(cls)) {
        if (boundary.count(l)) touching.push_back(l);
      }
      if (touching.empty()) continue;
      if (touching.size() != 1) {
        w.critical.clear();
        break;
      }
      w.critical.push_back(cls);
      w.contact.push_back(touching[0]);
    }
    if (w.critical.empty()) continue;

    std::vector<std::set<Angle>> orbits;
    for (const AngleClass& h : w.critical) {
      std::set<Angle> o(h.begin(), h.end());
      Angle x = sigma(d, h[0]);
      for (int n = 0; n < analysis.options().horizon && o.insert(x).second; ++n) x = sigma(d, x);
      orbits.push_back(std::move(o));
    }
    bool disjoint = true;
    for (std::size_t i = 0; i < orbits.size() && disjoint; ++i) {
      for (std::size_t j = i + 1; j < orbits.size() && disjoint; ++j) {
        for (const Angle& x : orbits[i]) {
          if (orbits[j].count(x)) {
            disjoint = false;
            break;
          }
        }
      }
    }
    if (disjoint) return w;
  }
  return std::nullopt;
}

std::optional<SiegelWitness> detect_siegel_configuration(const Lamination& lam) {
  return detect_siegel_configuration(GapAnalysis(lam));
}

CriterionReport evaluate_criterion(const Lamination& lam, int period_bound, CriterionOptions options) {
  ClassifyOptions copts;
  copts.horizon = options.horizon;
  GapAnalysis analysis(lam, copts);
  CriterionReport report;
  report.evidence_depth = lam.depth();
  for (const GapFace& f : analysis.arrangement().faces()) {
    GapClassification c = analysis.classify(f.id);
    if (c.kind == GapKind::FatouParattracting && c.preperiod.value_or(1) == 0) {
      report.parattracting = ParattractingWitness{f.id, *c.period, *c.degree, f.vertex_basis.size()};
      break;
    }
  }
  report.census = periodic_class_census(lam, period_bound);
  report.census_verdict = census_verdict(report.census, period_bound, options.growth_window);
  report.siegel = detect_siegel_configuration(analysis);
  if (report.parattracting) {
    report.overall = CriterionReport::Overall::NonDegenerate;
    report.witness = "parattracting Fatou gap";
  } else if (report.census_verdict == CensusVerdict::Growing) {
    report.overall = CriterionReport::Overall::NonDegenerate;
    report.witness = "periodic class census (heuristic)";
  } else if (report.siegel) {
    report.overall = CriterionReport::Overall::NonDegenerate;
    report.witness = "Siegel configuration (combinatorial only)";
  }
  return report;
}

}  // namespace lamina
