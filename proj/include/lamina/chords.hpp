#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lamina/circle.hpp"

namespace lamina {

// Unordered pair of distinct angles, stored with first() < second().
class Leaf {
 public:
  Leaf(const Angle& a, const Angle& b);

  const Angle& first() const { return a_; }
  const Angle& second() const { return b_; }
  bool has_endpoint(const Angle& x) const { return x == a_ || x == b_; }
  std::string str() const;

  friend bool operator==(const Leaf&, const Leaf&) = default;
  friend auto operator<=>(const Leaf&, const Leaf&) = default;

 private:
  Angle a_;
  Angle b_;
};

// Finite set of angles in increasing order on [0,1).
class AngleClass {
 public:
  AngleClass() = default;
  explicit AngleClass(std::vector<Angle> angles);
  AngleClass(std::initializer_list<Angle> angles);

  // Sorts and removes duplicates instead of rejecting them.
  static AngleClass from_unsorted(std::vector<Angle> angles);

  std::size_t size() const { return angles_.size(); }
  bool empty() const { return angles_.empty(); }
  const Angle& operator[](std::size_t i) const { return angles_[i]; }
  const Angle& least() const { return angles_.front(); }
  const std::vector<Angle>& angles() const { return angles_; }
  auto begin() const { return angles_.begin(); }
  auto end() const { return angles_.end(); }

  bool contains(const Angle& x) const;
  std::optional<std::size_t> index_of(const Angle& x) const;
  // Index i with x in the open arc (c[i], c[i+1]); empty if x is a member.
  std::optional<std::size_t> arc_index(const Angle& x) const;
  std::string str() const;

  friend bool operator==(const AngleClass&, const AngleClass&) = default;
  friend auto operator<=>(const AngleClass&, const AngleClass&) = default;

 private:
  std::vector<Angle> angles_;
};

bool crosses(const Leaf& l1, const Leaf& l2);

// Disjoint, and c2 lies in a single complementary arc of c1.
bool unlinked(const AngleClass& c1, const AngleClass& c2);

// Distinct, and c2 lies in the closure of one complementary arc of c1.
// Hulls may share vertices or an edge but not interior points.
bool non_crossing(const AngleClass& c1, const AngleClass& c2);

bool is_disjoint(const AngleClass& c1, const AngleClass& c2);

std::vector<Leaf> hull_edges(const AngleClass& c);
AngleClass image_class(int d, const AngleClass& c);
AngleClass image_class_iterate(int d, const AngleClass& c, std::size_t n);
bool is_covering_on_class(int d, const AngleClass& c);

// C disjoint from A and B, and no complementary arc of C meets both.
bool separates(const AngleClass& c, const AngleClass& a, const AngleClass& b);

}  // namespace lamina
