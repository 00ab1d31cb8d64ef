#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lamina/lamination.hpp"

namespace lamina {

struct BoundaryItem {
  enum class Kind { Leaf, Arc };
  Kind kind = Kind::Arc;
  Angle from;
  Angle to;
  bool full_circle = false;  // the only item of the single face of an empty diagram

  bool is_leaf() const { return kind == Kind::Leaf; }
  bool is_arc() const { return kind == Kind::Arc; }
  Rational arc_length() const;  // arcs only
  std::string str() const;
};

struct GapFace {
  std::size_t id = 0;
  std::vector<BoundaryItem> boundary;  // counterclockwise, face on the left
  std::vector<Angle> vertex_basis;     // sorted
  bool closed() const;                 // no boundary arcs
  std::size_t leaf_count() const;
};

// Faces of the disk cut along every hull edge of every class.
class Arrangement {
 public:
  explicit Arrangement(const Lamination& lam);

  const std::vector<GapFace>& faces() const { return faces_; }
  const std::vector<Leaf>& leaves() const { return leaves_; }
  const std::vector<Angle>& vertices() const { return vertices_; }

  // Faces whose closure contains the circle point x.
  std::vector<std::size_t> faces_at(const Angle& x) const;
  // The unique face whose closure contains every point, if any.
  std::optional<std::size_t> face_containing(const std::vector<Angle>& points) const;
  // The faces on either side of a leaf of the diagram.
  std::vector<std::size_t> faces_of_leaf(const Leaf& l) const;
  bool has_leaf(const Leaf& l) const;

 private:
  std::vector<Angle> vertices_;
  std::vector<Leaf> leaves_;
  std::vector<GapFace> faces_;
  std::vector<std::size_t> arc_face_;                     // arc after vertex i
  std::vector<std::vector<std::size_t>> vertex_faces_;    // sorted face ids
  std::map<Leaf, std::vector<std::size_t>> leaf_faces_;
};

std::vector<GapFace> faces(const Lamination& lam);

using FaceImage = std::variant<std::size_t, Leaf, Angle>;

FaceImage face_image(const Lamination& lam, const GapFace& f);

enum class GapKind { FinitePolygon, WanderingPolygon, AllCritical, FatouParattracting, FatouSiegel, Undetermined };
const char* to_string(GapKind kind);

struct RationalInterval {
  Rational lower;
  Rational upper;
  bool is_point() const { return lower == upper; }
  Rational width() const { return upper - lower; }
  std::string str() const;
};

struct GapClassification {
  GapKind kind = GapKind::Undetermined;
  std::optional<int> period;
  std::optional<int> preperiod;
  std::optional<int> degree;
  std::optional<RationalInterval> rotation_number;
  std::optional<int> chain_bound;
  int evidence_depth = 0;
  std::string note;
};

enum class CriticalLeafTag { Isolated, Separate, AllCriticalUnionBoundary, OneSided };
const char* to_string(CriticalLeafTag tag);

struct CriticalLeaf {
  Leaf leaf;
  CriticalLeafTag tag;
  int depth;
};

struct ClassifyOptions {
  int horizon = 64;
  int rotation_iterations = 1000;
};

// Shared state for repeated face queries on one lamination.
class GapAnalysis {
 public:
  explicit GapAnalysis(const Lamination& lam, ClassifyOptions options = {});

  const Lamination& lamination() const { return lam_; }
  const Arrangement& arrangement() const { return *arr_; }
  const ClassifyOptions& options() const { return options_; }

  // Empty when the image cannot be located at this depth.
  const std::optional<FaceImage>& image(std::size_t face) const { return images_[face]; }
  GapClassification classify(std::size_t face) const;
  std::vector<GapClassification> classify_all() const;

  int boundary_degree(std::size_t face, int m) const;
  RationalInterval rotation_number(std::size_t face, int m, int iterations) const;
  int chain_bound(std::size_t face) const;
  std::vector<CriticalLeaf> critical_leaves() const;

  // The periodic cycle containing face, if its orbit closes up on itself.
  std::optional<std::vector<std::size_t>> cycle_of(std::size_t face) const;

 private:
  std::optional<std::size_t> growth_signal(const std::vector<std::size_t>& cycle) const;
  std::size_t locate_in(const Arrangement& coarse, std::size_t face) const;

  Lamination lam_;
  ClassifyOptions options_;
  std::unique_ptr<Arrangement> arr_;
  std::vector<std::unique_ptr<Arrangement>> coarse_;  // depth-1, depth-2
  std::vector<std::optional<FaceImage>> images_;
};

GapClassification classify(const Lamination& lam, const GapFace& f, int horizon);
int boundary_degree(const Lamination& lam, const GapFace& f, int m);
RationalInterval rotation_number(const Lamination& lam, const GapFace& f, int m, int iterations);
std::vector<CriticalLeaf> classify_critical_leaves(const Lamination& lam);
int chain_bound(const Lamination& lam, const GapFace& f);

// Rotation interval of a monotone degree-one map on Z/period given by
// lifted images of 0..period-1; exact for cyclic permutations.
RationalInterval lift_rotation_interval(const std::vector<long>& lifted, int iterations);

}  // namespace lamina
