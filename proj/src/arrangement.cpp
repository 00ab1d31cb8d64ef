#include <algorithm>
#include <cstdint>
#include <set>

#include "lamina/gaps.hpp"

namespace lamina {

Rational BoundaryItem::arc_length() const {
  if (full_circle) return Rational(1);
  return ccw_distance(from, to);
}

std::string BoundaryItem::str() const {
  if (full_circle) return "arc(circle)";
  if (is_leaf()) return "leaf(" + from.str() + "->" + to.str() + ")";
  return "arc(" + from.str() + "," + to.str() + ")";
}

bool GapFace::closed() const {
  return std::none_of(boundary.begin(), boundary.end(), [](const BoundaryItem& b) { return b.is_arc(); });
}

std::size_t GapFace::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(boundary.begin(), boundary.end(), [](const BoundaryItem& b) { return b.is_leaf(); }));
}

namespace {

struct Edge {
  enum class Kind { ArcNext, Chord, ArcPrev };
  Kind kind;
  std::size_t to;  // chords only
};

}  // namespace

Arrangement::Arrangement(const Lamination& lam) {
  std::set<Leaf> leaf_set;
  for (const AngleClass& c : lam.classes()) {
    for (const Leaf& l : hull_edges(c)) leaf_set.insert(l);
  }
  leaves_.assign(leaf_set.begin(), leaf_set.end());
  std::set<Angle> vertex_set;
  for (const Leaf& l : leaves_) {
    vertex_set.insert(l.first());
    vertex_set.insert(l.second());
  }
  vertices_.assign(vertex_set.begin(), vertex_set.end());
  const std::size_t n = vertices_.size();

  if (n == 0) {
    GapFace whole;
    BoundaryItem item;
    item.full_circle = true;
    whole.boundary.push_back(item);
    faces_.push_back(whole);
    return;
  }

  auto rank = [&](const Angle& x) {
    return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), x) - vertices_.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  chords.reserve(leaves_.size());
  for (const Leaf& l : leaves_) chords.emplace_back(rank(l.first()), rank(l.second()));

  for (std::size_t i = 0; i < chords.size(); ++i) {
    auto [a, b] = chords[i];
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [c, e] = chords[j];
      if (c == a || c == b || e == a || e == b) continue;
      bool c_in = a < c && c < b;
      bool e_in = a < e && e < b;
      if (c_in != e_in) {
        throw Error(ErrorKind::InvalidLamination,
                    "leaves " + leaves_[i].str() + " and " + leaves_[j].str() + " cross");
      }
    }
  }

  std::vector<std::vector<Edge>> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v].push_back({Edge::Kind::ArcNext, 0});
  for (auto [a, b] : chords) {
    out[a].push_back({Edge::Kind::Chord, b});
    out[b].push_back({Edge::Kind::Chord, a});
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out[v].begin() + 1, out[v].end(), [&](const Edge& x, const Edge& y) {
      return (x.to + n - v) % n < (y.to + n - v) % n;
    });
    out[v].push_back({Edge::Kind::ArcPrev, 0});
  }

  // Dart = (vertex, index into out[vertex]); ArcPrev is never a dart.
  std::vector<std::vector<std::size_t>> dart_face(n);
  for (std::size_t v = 0; v < n; ++v) dart_face[v].assign(out[v].size(), SIZE_MAX);

  auto chord_index = [&](std::size_t at, std::size_t to) {
    for (std::size_t k = 1; k + 1 < out[at].size(); ++k) {
      if (out[at][k].to == to) return k;
    }
    throw Error(ErrorKind::InternalInconsistency, "missing reverse chord");
  };

  auto trace = [&](std::size_t v0, std::size_t k0) {
    GapFace face;
    face.id = faces_.size();
    std::set<std::size_t> basis;
    std::size_t v = v0, k = k0;
    do {
      dart_face[v][k] = face.id;
      basis.insert(v);
      const Edge& e = out[v][k];
      BoundaryItem item;
      std::size_t x, pos;
      if (e.kind == Edge::Kind::ArcNext) {
        x = (v + 1) % n;
        item.kind = BoundaryItem::Kind::Arc;
        pos = out[x].size() - 1;
      } else {
        x = e.to;
        item.kind = BoundaryItem::Kind::Leaf;
        pos = chord_index(x, v);
      }
      item.from = vertices_[v];
      item.to = vertices_[x];
      face.boundary.push_back(item);
      v = x;
      k = pos - 1;
    } while (!(v == v0 && k == k0));
    for (std::size_t b : basis) face.vertex_basis.push_back(vertices_[b]);
    faces_.push_back(std::move(face));
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (dart_face[v][0] == SIZE_MAX) trace(v, 0);
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 1; k + 1 < out[v].size(); ++k) {
      if (dart_face[v][k] == SIZE_MAX) trace(v, k);
    }
  }

  arc_face_.resize(n);
  vertex_faces_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    arc_face_[v] = dart_face[v][0];
    std::set<std::size_t> fs;
    for (std::size_t k = 0; k + 1 < out[v].size(); ++k) fs.insert(dart_face[v][k]);
    vertex_faces_[v].assign(fs.begin(), fs.end());
    for (std::size_t k = 1; k + 1 < out[v].size(); ++k) {
      std::size_t w = out[v][k].to;
      leaf_faces_[Leaf(vertices_[v], vertices_[w])].push_back(dart_face[v][k]);
    }
  }
  for (auto& [leaf, fs] : leaf_faces_) std::sort(fs.begin(), fs.end());
}

std::vector<std::size_t> Arrangement::faces_at(const Angle& x) const {
  if (vertices_.empty()) return {0};
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - vertices_.begin());
  if (it != vertices_.end() && *it == x) return vertex_faces_[i];
  std::size_t before = i == 0 ? vertices_.size() - 1 : i - 1;
  return {arc_face_[before]};
}

std::optional<std::size_t> Arrangement::face_containing(const std::vector<Angle>& points) const {
  if (points.empty()) return std::nullopt;
  std::vector<std::size_t> common = faces_at(points[0]);
  for (std::size_t i = 1; i < points.size() && !common.empty(); ++i) {
    std::vector<std::size_t> here = faces_at(points[i]);
    std::vector<std::size_t> next;
    std::set_intersection(common.begin(), common.end(), here.begin(), here.end(), std::back_inserter(next));
    common = std::move(next);
  }
  if (common.size() != 1) return std::nullopt;
  return common[0];
}

std::vector<std::size_t> Arrangement::faces_of_leaf(const Leaf& l) const {
  auto it = leaf_faces_.find(l);
  if (it == leaf_faces_.end()) return {};
  return it->second;
}

bool Arrangement::has_leaf(const Leaf& l) const { return leaf_faces_.count(l) > 0; }

std::vector<GapFace> faces(const Lamination& lam) { return Arrangement(lam).faces(); }

}  // namespace lamina
