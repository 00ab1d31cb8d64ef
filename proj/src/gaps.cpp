#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "lamina/gaps.hpp"

namespace lamina {

const char* to_string(GapKind kind) {
  switch (kind) {
    case GapKind::FinitePolygon: return "FinitePolygon";
    case GapKind::WanderingPolygon: return "WanderingPolygon";
    case GapKind::AllCritical: return "AllCritical";
    case GapKind::FatouParattracting: return "FatouParattracting";
    case GapKind::FatouSiegel: return "FatouSiegel";
    case GapKind::Undetermined: return "Undetermined";
  }
  return "unknown";
}

const char* to_string(CriticalLeafTag tag) {
  switch (tag) {
    case CriticalLeafTag::Isolated: return "Isolated";
    case CriticalLeafTag::Separate: return "Separate";
    case CriticalLeafTag::AllCriticalUnionBoundary: return "AllCriticalUnionBoundary";
    case CriticalLeafTag::OneSided: return "OneSided";
  }
  return "unknown";
}

std::string RationalInterval::str() const {
  if (is_point()) return to_string(lower);
  return "[" + to_string(lower) + "," + to_string(upper) + "]";
}

namespace {

Angle midpoint(const BoundaryItem& item) {
  if (item.full_circle) return Angle(1, 2);
  return Angle(item.from.value() + item.arc_length() / 2);
}

std::vector<Angle> image_points(int d, const std::vector<Angle>& pts, std::size_t m = 1) {
  std::vector<Angle> out;
  for (const Angle& x : pts) out.push_back(sigma_iterate(d, x, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<FaceImage> compute_image(const Lamination& lam, const Arrangement& arr, const GapFace& f) {
  const int d = lam.degree();
  if (f.vertex_basis.empty()) return FaceImage(f.id);
  std::vector<Angle> pts = image_points(d, f.vertex_basis);
  if (pts.size() == 1) return FaceImage(pts[0]);
  bool on_leaf = pts.size() == 2 && arr.has_leaf(Leaf(pts[0], pts[1]));
  if (f.closed()) {
    if (on_leaf) return FaceImage(Leaf(pts[0], pts[1]));
    if (auto g = arr.face_containing(pts)) return FaceImage(*g);
    return std::nullopt;
  }
  // Candidates contain every vertex image; arc images break ties.
  std::vector<std::size_t> candidates = arr.faces_at(pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<std::size_t> here = arr.faces_at(pts[i]), next;
    std::set_intersection(candidates.begin(), candidates.end(), here.begin(), here.end(), std::back_inserter(next));
    candidates = std::move(next);
  }
  if (candidates.empty()) return std::nullopt;
  if (candidates.size() == 1) return FaceImage(candidates[0]);
  std::vector<std::size_t> votes(candidates.size(), 0);
  for (const BoundaryItem& item : f.boundary) {
    if (!item.is_arc()) continue;
    auto at = arr.faces_at(sigma(d, midpoint(item)));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (std::find(at.begin(), at.end(), candidates[c]) != at.end()) ++votes[c];
    }
  }
  auto best = std::max_element(votes.begin(), votes.end());
  if (*best == 0 || std::count(votes.begin(), votes.end(), *best) > 1) return std::nullopt;
  return FaceImage(candidates[static_cast<std::size_t>(best - votes.begin())]);
}

Rational power(int d, int m) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
  return Rational(p);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GapAnalysis::GapAnalysis(const Lamination& lam, ClassifyOptions options)
    : lam_(lam), options_(options), arr_(std::make_unique<Arrangement>(lam)) {
  for (int back = 1; back <= 2 && lam_.depth() - back >= 0; ++back) {
    coarse_.push_back(std::make_unique<Arrangement>(lam_.restricted(lam_.depth() - back)));
  }
  images_.reserve(arr_->faces().size());
  for (const GapFace& f : arr_->faces()) images_.push_back(compute_image(lam_, *arr_, f));
}

std::optional<std::vector<std::size_t>> GapAnalysis::cycle_of(std::size_t face) const {
  std::vector<std::size_t> seq{face};
  std::size_t cur = face;
  for (int step = 1; step <= options_.horizon; ++step) {
    const auto& img = images_[cur];
    if (!img || !std::holds_alternative<std::size_t>(*img)) return std::nullopt;
    cur = std::get<std::size_t>(*img);
    if (cur == face) return seq;
    if (std::find(seq.begin(), seq.end(), cur) != seq.end()) return std::nullopt;
    seq.push_back(cur);
  }
  return std::nullopt;
}

std::size_t GapAnalysis::locate_in(const Arrangement& coarse, std::size_t face) const {
  const GapFace& f = arr_->faces()[face];
  std::vector<Angle> probes = f.vertex_basis;
  for (const BoundaryItem& item : f.boundary) {
    if (item.is_arc()) probes.push_back(midpoint(item));
  }
  auto g = coarse.face_containing(probes);
  return g ? *g : SIZE_MAX;
}

// 1 growing, 0 stable, empty otherwise.
std::optional<std::size_t> GapAnalysis::growth_signal(const std::vector<std::size_t>& cycle) const {
  if (coarse_.size() < 2) return std::nullopt;
  std::vector<std::size_t> totals;
  std::size_t now = 0;
  for (std::size_t f : cycle) now += arr_->faces()[f].vertex_basis.size();
  totals.push_back(now);
  for (const auto& coarse : coarse_) {
    std::set<std::size_t> located;
    for (std::size_t f : cycle) {
      std::size_t g = locate_in(*coarse, f);
      if (g == SIZE_MAX) return std::nullopt;
      located.insert(g);
    }
    std::size_t total = 0;
    for (std::size_t g : located) total += coarse->faces()[g].vertex_basis.size();
    totals.push_back(total);
  }
  if (totals[0] > totals[1] && totals[1] > totals[2]) return 1;
  if (totals[0] == totals[1] && totals[1] == totals[2]) return 0;
  return std::nullopt;
}

int GapAnalysis::boundary_degree(std::size_t face, int m) const {
  if (m < 1) throw Error(ErrorKind::NotPeriodic, "period must be positive");
  std::size_t cur = face;
  for (int i = 0; i < m; ++i) {
    const auto& img = images_[cur];
    if (!img || !std::holds_alternative<std::size_t>(*img)) {
      throw Error(ErrorKind::NotPeriodic, "face " + std::to_string(face) + " does not map to a face");
    }
    cur = std::get<std::size_t>(*img);
  }
  if (cur != face) {
    throw Error(ErrorKind::NotPeriodic, "face " + std::to_string(face) + " is not fixed by iterate " +
                                             std::to_string(m));
  }
  const int d = lam_.degree();
  const GapFace& f = arr_->faces()[face];
  Rational scale = power(d, m);
  Rational winding = 0;
  for (const BoundaryItem& item : f.boundary) {
    if (item.is_arc()) {
      winding += scale * item.arc_length();
    } else {
      winding += ccw_distance(sigma_iterate(d, item.from, m), sigma_iterate(d, item.to, m));
    }
  }
  winding.canonicalize();
  if (winding.get_den() != 1) {
    throw Error(ErrorKind::InternalInconsistency,
                "boundary winding " + to_string(winding) + " of face " + std::to_string(face) + " is not integral");
  }
  int degree = static_cast<int>(winding.get_num().get_si());

  if (!f.vertex_basis.empty()) {
    const Angle* w = nullptr;
    int best = 0;
    for (const Angle& v : f.vertex_basis) {
      int lv = lam_.level_of(v).value_or(0);
      if (!w || lv < best) {
        w = &v;
        best = lv;
      }
    }
    if (f.closed() || best + m <= lam_.depth()) {
      int count = 0;
      for (const Angle& b : f.vertex_basis) count += sigma_iterate(d, b, m) == *w ? 1 : 0;
      if (count != degree) {
        throw Error(ErrorKind::InternalInconsistency,
                    "face " + std::to_string(face) + ": winding gives degree " + std::to_string(degree) +
                        " but " + w->str() + " has " + std::to_string(count) + " preimages on the boundary");
      }
    }
  }
  return degree;
}

RationalInterval lift_rotation_interval(const std::vector<long>& lifted, int iterations) {
  const long p = static_cast<long>(lifted.size());
  if (p == 0 || iterations < 1) throw Error(ErrorKind::NotARotation, "empty map or no iterations");
  auto g = [&](long x) {
    long q = floor_div(x, p);
    return lifted[static_cast<std::size_t>(x - q * p)] + q * p;
  };
  std::vector<bool> hit(static_cast<std::size_t>(p), false);
  bool permutation = true;
  for (long x = 0; x < p; ++x) {
    long y = g(x) - floor_div(g(x), p) * p;
    if (hit[static_cast<std::size_t>(y)]) permutation = false;
    hit[static_cast<std::size_t>(y)] = true;
  }
  if (permutation) {
    long x = g(0);
    long k = 1;
    while (x - floor_div(x, p) * p != 0) {
      x = g(x);
      ++k;
    }
    Rational r(x, k * p);
    r.canonicalize();
    return {r, r};
  }
  Rational lower, upper;
  for (long x0 = 0; x0 < p; ++x0) {
    long x = x0;
    for (int i = 0; i < iterations; ++i) x = g(x);
    Rational lo(x - x0 - p, static_cast<long>(iterations) * p);
    Rational hi(x - x0 + p, static_cast<long>(iterations) * p);
    lo.canonicalize();
    hi.canonicalize();
    if (x0 == 0 || lo > lower) lower = lo;
    if (x0 == 0 || hi < upper) upper = hi;
  }
  return {lower, upper};
}

RationalInterval GapAnalysis::rotation_number(std::size_t face, int m, int iterations) const {
  int degree = boundary_degree(face, m);
  if (degree != 1) throw Error(ErrorKind::NotARotation, "boundary degree is " + std::to_string(degree));
  const GapFace& f = arr_->faces()[face];
  const AngleClass basis(f.vertex_basis);
  const long n = static_cast<long>(basis.size());
  if (n == 0) throw Error(ErrorKind::NotARotation, "face has no boundary vertices");
  const long period = 2 * n;
  std::vector<long> pos;
  for (const Angle& b : basis) {
    Angle y = sigma_iterate(lam_.degree(), b, static_cast<std::size_t>(m));
    if (auto j = basis.index_of(y)) {
      pos.push_back(2 * static_cast<long>(*j));
    } else {
      pos.push_back(2 * static_cast<long>(*basis.arc_index(y)) + 1);
    }
  }
  std::vector<long> even{pos[0]};
  long total = 0;
  for (long i = 1; i < n; ++i) {
    long step = ((pos[i] - pos[i - 1]) % period + period) % period;
    even.push_back(even.back() + step);
    total += step;
  }
  long closing = ((pos[0] - pos[n - 1]) % period + period) % period;
  total += closing;
  if (n == 1) total = period;
  if (total != period) throw Error(ErrorKind::NotARotation, "induced boundary map is not of degree one");
  std::vector<long> lifted;
  for (long i = 0; i < n; ++i) {
    long next = i + 1 < n ? even[i + 1] : even[0] + period;
    lifted.push_back(even[i]);
    lifted.push_back(floor_div(even[i] + next, 2));
  }
  return lift_rotation_interval(lifted, iterations);
}

int GapAnalysis::chain_bound(std::size_t face) const {
  const GapFace& f = arr_->faces()[face];
  if (f.closed()) return static_cast<int>(f.boundary.size());
  const std::size_t n = f.boundary.size();
  std::size_t start = 0;
  while (f.boundary[start].is_leaf()) ++start;
  int best = 0, run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (f.boundary[(start + k) % n].is_leaf()) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

GapClassification GapAnalysis::classify(std::size_t face) const {
  GapClassification out;
  out.evidence_depth = lam_.depth();
  out.chain_bound = chain_bound(face);
  const GapFace& f = arr_->faces()[face];
  const int d = lam_.degree();

  std::vector<std::size_t> seq{face};
  std::size_t cur = face;
  for (int step = 1; step <= options_.horizon; ++step) {
    const auto& img = images_[cur];
    if (!img) {
      out.note = "image unresolvable at depth after " + std::to_string(step - 1) + " steps";
      return out;
    }
    if (std::holds_alternative<Angle>(*img)) {
      if (step == 1) {
        out.kind = GapKind::AllCritical;
      } else {
        out.note = "collapses to a point at step " + std::to_string(step);
      }
      return out;
    }
    if (std::holds_alternative<Leaf>(*img)) {
      out.note = "maps onto leaf " + std::get<Leaf>(*img).str() + " at step " + std::to_string(step);
      return out;
    }
    cur = std::get<std::size_t>(*img);
    auto it = std::find(seq.begin(), seq.end(), cur);
    if (it == seq.end()) {
      seq.push_back(cur);
      continue;
    }
    const int pre = static_cast<int>(it - seq.begin());
    const int m = step - pre;
    const std::size_t g = seq[static_cast<std::size_t>(pre)];
    std::vector<std::size_t> cycle(it, seq.end());
    out.period = m;
    out.preperiod = pre;
    try {
      out.degree = boundary_degree(g, m);
    } catch (const Error& e) {
      out.note = e.what();
      return out;
    }
    if (arr_->faces()[g].closed()) {
      out.kind = GapKind::FinitePolygon;
    } else {
      auto growth = growth_signal(cycle);
      if (!growth) {
        out.note = "basis growth not established across two refinements";
        return out;
      }
      if (*growth == 0) {
        out.kind = GapKind::FinitePolygon;
      } else if (*out.degree >= 2) {
        out.kind = GapKind::FatouParattracting;
      } else if (*out.degree == 1) {
        out.kind = GapKind::FatouSiegel;
      } else {
        out.note = "growing face with boundary degree " + std::to_string(*out.degree);
        return out;
      }
    }
    if (*out.degree == 1) {
      try {
        out.rotation_number = rotation_number(g, m, options_.rotation_iterations);
      } catch (const Error& e) {
        out.note = e.what();
      }
    }
    return out;
  }

  // No repeat within the horizon: test the wandering alternative.
  if (!f.closed()) {
    out.note = "face orbit does not repeat within horizon";
    return out;
  }
  AngleClass basis(f.vertex_basis);
  std::vector<AngleClass> images{basis};
  for (int n = 1; n < options_.horizon; ++n) images.push_back(image_class(d, images.back()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (!unlinked(images[i], images[j])) {
        out.note = "face orbit does not repeat within horizon";
        return out;
      }
    }
  }
  std::size_t bound = std::size_t{1} << d;
  if (basis.size() > bound) {
    throw Error(ErrorKind::InternalInconsistency,
                "wandering polygon " + basis.str() + " exceeds " + std::to_string(bound) + " vertices");
  }
  out.kind = GapKind::WanderingPolygon;
  return out;
}

std::vector<GapClassification> GapAnalysis::classify_all() const {
  std::vector<GapClassification> out;
  out.reserve(arr_->faces().size());
  for (std::size_t i = 0; i < arr_->faces().size(); ++i) out.push_back(classify(i));
  return out;
}

std::vector<CriticalLeaf> GapAnalysis::critical_leaves() const {
  const int d = lam_.degree();
  std::vector<bool> all_critical(arr_->faces().size(), false);
  for (const GapFace& f : arr_->faces()) {
    all_critical[f.id] = f.closed() && image_points(d, f.vertex_basis).size() == 1;
  }
  std::vector<CriticalLeaf> out;
  for (const Leaf& l : arr_->leaves()) {
    if (sigma(d, l.first()) != sigma(d, l.second())) continue;
    std::vector<std::size_t> sides = arr_->faces_of_leaf(l);
    int critical_sides = 0;
    int busy_sides = 0;
    for (std::size_t s : sides) {
      critical_sides += all_critical[s] ? 1 : 0;
      busy_sides += arr_->faces()[s].leaf_count() > 1 ? 1 : 0;
    }
    CriticalLeafTag tag;
    if (critical_sides == 1) {
      tag = CriticalLeafTag::AllCriticalUnionBoundary;
    } else if (busy_sides == 2) {
      tag = CriticalLeafTag::Isolated;
    } else if (busy_sides == 0) {
      tag = CriticalLeafTag::Separate;
    } else {
      tag = CriticalLeafTag::OneSided;
    }
    out.push_back({l, tag, lam_.depth()});
  }
  return out;
}

namespace {

std::size_t face_index(const GapAnalysis& a, const GapFace& f) {
  const auto& fs = a.arrangement().faces();
  if (f.id >= fs.size() || fs[f.id].vertex_basis != f.vertex_basis) {
    throw Error(ErrorKind::InvalidLamination, "face is not a face of this lamination");
  }
  return f.id;
}

}  // namespace

FaceImage face_image(const Lamination& lam, const GapFace& f) {
  GapAnalysis a(lam);
  const auto& img = a.image(face_index(a, f));
  if (!img) throw Error(ErrorKind::Unresolvable, "image of face " + std::to_string(f.id) + " not located");
  return *img;
}

GapClassification classify(const Lamination& lam, const GapFace& f, int horizon) {
  ClassifyOptions opts;
  opts.horizon = horizon;
  GapAnalysis a(lam, opts);
  return a.classify(face_index(a, f));
}

int boundary_degree(const Lamination& lam, const GapFace& f, int m) {
  GapAnalysis a(lam);
  return a.boundary_degree(face_index(a, f), m);
}

RationalInterval rotation_number(const Lamination& lam, const GapFace& f, int m, int iterations) {
  GapAnalysis a(lam);
  return a.rotation_number(face_index(a, f), m, iterations);
}

std::vector<CriticalLeaf> classify_critical_leaves(const Lamination& lam) { return GapAnalysis(lam).critical_leaves(); }

int chain_bound(const Lamination& lam, const GapFace& f) {
  GapAnalysis a(lam);
  return a.chain_bound(face_index(a, f));
}

}  // namespace lamina
