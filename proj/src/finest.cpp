#include "lamina/finest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lamina {

const char* to_string(SuperGap::Kind kind) {
  switch (kind) {
    case SuperGap::Kind::Wandering: return "Wandering";
    case SuperGap::Kind::Periodic: return "Periodic";
    case SuperGap::Kind::Degenerate: return "Degenerate";
  }
  return "unknown";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Components {
  std::vector<AngleClass> bases;
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::string> notes;
};

Components components(const Lamination& lam, int horizon) {
  InvarianceReport report = validate(lam);
  if (report.verdict["E2"] == Verdict::Fail) {
    throw Error(ErrorKind::InvalidLamination, "input classes are linked; refusing to build super gaps");
  }
  ClassifyOptions opts;
  opts.horizon = horizon;
  GapAnalysis analysis(lam, opts);
  const Arrangement& arr = analysis.arrangement();
  const auto& verts = arr.vertices();
  auto rank = [&](const Angle& x) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };

  Components out;
  for (const GapFace& f : arr.faces()) {
    if (f.closed()) continue;
    GapKind kind = analysis.classify(f.id).kind;
    if (kind != GapKind::FatouParattracting && kind != GapKind::FatouSiegel) continue;
    const std::size_t n = f.boundary.size();
    std::size_t start = 0;
    while (f.boundary[start].is_leaf()) ++start;
    std::size_t k = 1;
    while (k <= n) {
      if (!f.boundary[(start + k) % n].is_leaf()) {
        ++k;
        continue;
      }
      std::size_t first = (start + k) % n, len = 0;
      while (k <= n && f.boundary[(start + k) % n].is_leaf()) {
        ++len;
        ++k;
      }
      if (len >= 2) {
        const Angle& a = f.boundary[first].from;
        const Angle& b = f.boundary[(first + len - 1) % n].to;
        out.notes.push_back("closing leaf " + Leaf(a, b).str() + " over a chain of " + std::to_string(len) +
                            " leaves on Fatou face " + std::to_string(f.id));
      }
    }
  }

  UnionFind uf(verts.size());
  for (const GapFace& f : arr.faces()) {
    if (!f.closed()) continue;
    for (const Angle& x : f.vertex_basis) uf.unite(rank(f.vertex_basis[0]), rank(x));
  }
  for (const Leaf& l : arr.leaves()) uf.unite(rank(l.first()), rank(l.second()));

  std::map<std::size_t, std::vector<Angle>> groups;
  for (std::size_t i = 0; i < verts.size(); ++i) groups[uf.find(i)].push_back(verts[i]);
  std::map<std::size_t, std::size_t> slot;
  for (auto& [root, pts] : groups) {
    slot[root] = out.bases.size();
    out.bases.emplace_back(pts);
    out.faces.emplace_back();
  }
  for (const GapFace& f : arr.faces()) {
    if (f.closed()) out.faces[slot[uf.find(rank(f.vertex_basis[0]))]].push_back(f.id);
  }
  return out;
}

}  // namespace

std::vector<SuperGap> super_gaps(const Lamination& lam, int horizon) {
  Components comp = components(lam, horizon);
  const int d = lam.degree();
  std::vector<SuperGap> out;
  for (std::size_t i = 0; i < comp.bases.size(); ++i) {
    SuperGap g;
    g.basis = comp.bases[i];
    g.member_faces = comp.faces[i];
    if (g.member_faces.empty() && g.basis.size() == 2) {
      g.kind = SuperGap::Kind::Degenerate;
      out.push_back(std::move(g));
      continue;
    }
    std::vector<AngleClass> orbit{g.basis};
    g.kind = SuperGap::Kind::Wandering;
    for (int n = 1; n <= horizon; ++n) {
      AngleClass next = image_class(d, orbit.back());
      auto it = std::find(orbit.begin(), orbit.end(), next);
      if (it != orbit.end()) {
        g.kind = SuperGap::Kind::Periodic;
        g.preperiod = static_cast<int>(it - orbit.begin());
        g.period = n - *g.preperiod;
        break;
      }
      orbit.push_back(std::move(next));
    }
    if (g.kind == SuperGap::Kind::Wandering && g.basis.size() > (std::size_t{1} << d)) {
      bool pairwise = true;
      for (std::size_t a = 0; a < orbit.size() && pairwise; ++a) {
        for (std::size_t b = a + 1; b < orbit.size() && pairwise; ++b) pairwise = unlinked(orbit[a], orbit[b]);
      }
      if (pairwise) {
        throw Error(ErrorKind::InternalInconsistency,
                    "wandering super gap " + g.basis.str() + " exceeds " + std::to_string(1 << d) + " angles");
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

Lamination FinestQuotient::to_lamination() const {
  Lamination lam(degree, Mode::Equivalence, depth);
  for (std::size_t i = 0; i < classes.size(); ++i) lam.add(classes[i], {Provenance::Kind::Input, levels[i]});
  return lam;
}

std::string FinestQuotient::certificate_text() const {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const std::string& step : certificate[i]) out += classes[i].str() + ": " + step + "\n";
  }
  for (const std::string& note : notes) out += "note: " + note + "\n";
  return out;
}

FinestQuotient finest_quotient(const Lamination& lam, int horizon) {
  Components comp = components(lam, horizon);
  const int d = lam.degree();
  FinestQuotient q;
  q.degree = d;
  q.depth = lam.depth();
  q.notes = comp.notes;

  std::map<Angle, std::size_t> owner;
  for (std::size_t i = 0; i < comp.bases.size(); ++i) {
    for (const Angle& x : comp.bases[i]) owner[x] = i;
  }
  std::vector<std::vector<std::size_t>> members(comp.bases.size());
  for (std::size_t c = 0; c < lam.size(); ++c) members[owner.at(lam[c][0])].push_back(c);

  for (std::size_t i = 0; i < comp.bases.size(); ++i) {
    q.classes.push_back(comp.bases[i]);
    int level = 0;
    std::vector<std::string> cert;
    for (std::size_t c : members[i]) {
      level = std::max(level, lam.provenance()[c].level);
      cert.push_back("contains " + lam[c].str() + " [" + lam.provenance()[c].str() + "]");
    }
    for (const Angle& x : comp.bases[i]) {
      const auto& at = lam.classes_at(x);
      if (at.size() < 2) continue;
      std::string line = "merge at " + x.str() + ":";
      for (std::size_t c : at) line += " " + lam[c].str();
      cert.push_back(line);
    }
    for (std::size_t f : comp.faces[i]) cert.push_back("closed face " + std::to_string(f));
    q.levels.push_back(level);
    q.certificate.push_back(std::move(cert));
  }

  for (std::size_t i = 0; i < q.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < q.classes.size(); ++j) {
      if (!unlinked(q.classes[i], q.classes[j])) {
        throw Error(ErrorKind::InternalInconsistency,
                    "quotient classes " + q.classes[i].str() + " and " + q.classes[j].str() + " are linked");
      }
    }
  }
  if (validate(lam).verdict["D1"] == Verdict::Pass) {
    for (const AngleClass& c : q.classes) {
      AngleClass img = image_class(d, c);
      if (img.size() == 1) continue;
      auto it = owner.find(img[0]);
      bool ok = it != owner.end();
      for (const Angle& x : img) ok = ok && owner.count(x) && owner.at(x) == it->second;
      if (!ok) {
        std::string chain;
        for (const auto& line : q.certificate[static_cast<std::size_t>(&c - q.classes.data())]) chain += "; " + line;
        throw Error(ErrorKind::InternalInconsistency, "image of " + c.str() + " is not inside a class" + chain);
      }
    }
  } else {
    q.notes.push_back("forward closure not checked: input fails forward invariance");
  }
  return q;
}

ValenceReport endpoint_valence_check(const Lamination& lam) {
  Arrangement arr(lam);
  std::map<Angle, std::vector<Leaf>> at;
  for (const Leaf& l : arr.leaves()) {
    at[l.first()].push_back(l);
    at[l.second()].push_back(l);
  }
  auto other = [](const Leaf& l, const Angle& x) { return l.first() == x ? l.second() : l.first(); };
  auto owners = [&](const Leaf& l) {
    std::vector<std::size_t> out;
    for (std::size_t c : lam.classes_at(l.first())) {
      if (lam[c].contains(l.second())) out.push_back(c);
    }
    return out;
  };
  ValenceReport report;
  for (auto& [x, leaves] : at) {
    report.max_valence = std::max(report.max_valence, leaves.size());
    if (leaves.size() < 3) continue;
    std::sort(leaves.begin(), leaves.end(), [&](const Leaf& a, const Leaf& b) {
      return ccw_distance(x, other(a, x)) < ccw_distance(x, other(b, x));
    });
    ValenceEntry e{x, leaves, {}, true};
    for (std::size_t i = 1; i + 1 < leaves.size(); ++i) {
      auto os = owners(leaves[i]);
      std::string tag = leaves[i].str();
      if (os.empty()) {
        e.clause_ok = false;
        tag += " outside every class";
      }
      for (std::size_t c : os) tag += " " + lam.provenance()[c].str();
      e.middle.push_back(tag);
    }
    if (leaves.size() == 4) {
      bool shared = false;
      for (std::size_t c : owners(leaves[1])) {
        if (lam[c].size() >= 3 && lam[c].contains(other(leaves[2], x))) shared = true;
      }
      e.clause_ok = e.clause_ok && shared;
    }
    if (leaves.size() >= 5) report.hard_violations.push_back(x);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace lamina
