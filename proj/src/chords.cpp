#include "lamina/chords.hpp"

#include <algorithm>
#include <set>

namespace lamina {

Leaf::Leaf(const Angle& a, const Angle& b) {
  if (a == b) throw Error(ErrorKind::DegenerateClass, "leaf endpoints coincide at " + a.str());
  a_ = a < b ? a : b;
  b_ = a < b ? b : a;
}

std::string Leaf::str() const { return "{" + a_.str() + "," + b_.str() + "}"; }

AngleClass::AngleClass(std::vector<Angle> angles) : angles_(std::move(angles)) {
  std::sort(angles_.begin(), angles_.end());
  if (std::adjacent_find(angles_.begin(), angles_.end()) != angles_.end()) {
    throw Error(ErrorKind::DegenerateClass, "duplicate angle in class");
  }
}

AngleClass::AngleClass(std::initializer_list<Angle> angles) : AngleClass(std::vector<Angle>(angles)) {}

AngleClass AngleClass::from_unsorted(std::vector<Angle> angles) {
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  return AngleClass(std::move(angles));
}

bool AngleClass::contains(const Angle& x) const {
  return std::binary_search(angles_.begin(), angles_.end(), x);
}

std::optional<std::size_t> AngleClass::index_of(const Angle& x) const {
  auto it = std::lower_bound(angles_.begin(), angles_.end(), x);
  if (it == angles_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - angles_.begin());
}

std::optional<std::size_t> AngleClass::arc_index(const Angle& x) const {
  if (angles_.empty()) return std::nullopt;
  auto it = std::lower_bound(angles_.begin(), angles_.end(), x);
  if (it != angles_.end() && *it == x) return std::nullopt;
  std::size_t above = static_cast<std::size_t>(it - angles_.begin());
  return above == 0 ? angles_.size() - 1 : above - 1;
}

std::string AngleClass::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (i) out += ",";
    out += angles_[i].str();
  }
  return out + "}";
}

bool crosses(const Leaf& l1, const Leaf& l2) {
  const Angle& s = l1.first();
  const Angle& t = l1.second();
  if (l2.has_endpoint(s) || l2.has_endpoint(t)) return false;
  bool a_in = s < l2.first() && l2.first() < t;
  bool b_in = s < l2.second() && l2.second() < t;
  return a_in != b_in;
}

bool is_disjoint(const AngleClass& c1, const AngleClass& c2) {
  auto i = c1.begin();
  auto j = c2.begin();
  while (i != c1.end() && j != c2.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

bool unlinked(const AngleClass& c1, const AngleClass& c2) {
  if (c1.empty() || c2.empty()) return true;
  if (!is_disjoint(c1, c2)) return false;
  auto arc = c1.arc_index(c2[0]);
  for (const Angle& x : c2) {
    if (c1.arc_index(x) != arc) return false;
  }
  return true;
}

bool non_crossing(const AngleClass& c1, const AngleClass& c2) {
  if (c1.empty() || c2.empty()) return true;
  if (c1 == c2) return false;
  // Closed arc [c1[i], c1[i+1]] must contain all of c2.
  std::optional<std::size_t> arc;
  for (const Angle& x : c2) {
    auto a = c1.arc_index(x);
    if (a) {
      if (arc && *arc != *a) return false;
      arc = a;
    }
  }
  std::size_t n = c1.size();
  for (const Angle& x : c2) {
    auto idx = c1.index_of(x);
    if (!idx) continue;
    if (!arc) {
      // c2 is a subset of c1: it must be one hull edge of c1.
      if (c2.size() != 2 || n < 3) return false;
      auto i0 = *c1.index_of(c2[0]);
      auto i1 = *c1.index_of(c2[1]);
      return (i0 + 1) % n == i1 || (i1 + 1) % n == i0;
    }
    if (*idx != *arc && *idx != (*arc + 1) % n) return false;
  }
  return true;
}

std::vector<Leaf> hull_edges(const AngleClass& c) {
  if (c.size() < 2) throw Error(ErrorKind::DegenerateClass, "hull of " + c.str() + " has no edges");
  std::vector<Leaf> out;
  if (c.size() == 2) {
    out.emplace_back(c[0], c[1]);
    return out;
  }
  for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
  return out;
}

AngleClass image_class(int d, const AngleClass& c) {
  std::vector<Angle> out;
  out.reserve(c.size());
  for (const Angle& a : c) out.push_back(sigma(d, a));
  return AngleClass::from_unsorted(std::move(out));
}

AngleClass image_class_iterate(int d, const AngleClass& c, std::size_t n) {
  std::vector<Angle> out;
  out.reserve(c.size());
  for (const Angle& a : c) out.push_back(sigma_iterate(d, a, n));
  return AngleClass::from_unsorted(std::move(out));
}

bool is_covering_on_class(int d, const AngleClass& c) {
  if (c.size() < 2) throw Error(ErrorKind::DegenerateClass, "covering test needs at least two angles");
  AngleClass image = image_class(d, c);
  if (image.size() < 2) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Angle s = sigma(d, c[i]);
    Angle t = sigma(d, c[(i + 1) % c.size()]);
    std::size_t k = *image.index_of(s);
    if (image[(k + 1) % image.size()] != t) return false;
  }
  return true;
}

bool separates(const AngleClass& c, const AngleClass& a, const AngleClass& b) {
  if (c.empty() || !is_disjoint(c, a) || !is_disjoint(c, b)) return false;
  std::set<std::size_t> arcs_a;
  for (const Angle& x : a) arcs_a.insert(*c.arc_index(x));
  for (const Angle& x : b) {
    if (arcs_a.count(*c.arc_index(x))) return false;
  }
  return true;
}

}  // namespace lamina
