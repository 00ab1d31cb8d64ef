#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamina/chords.hpp"

namespace lamina {

enum class Mode { Equivalence, Geometric };

const char* to_string(Mode mode);

struct Provenance {
  enum class Kind { Generator, ForwardImage, Pullback, Explicit, Input };
  Kind kind = Kind::Input;
  int level = 0;
  std::string str() const;
};

class Lamination {
 public:
  explicit Lamination(int degree, Mode mode = Mode::Equivalence, int depth = 0);

  int degree() const { return degree_; }
  Mode mode() const { return mode_; }
  int depth() const { return depth_; }
  void set_depth(int depth) { depth_ = depth; }

  const std::vector<AngleClass>& classes() const { return classes_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  const AngleClass& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t size() const { return classes_.size(); }

  // Does not check linkage; validate() does.
  std::size_t add(AngleClass c, Provenance p);

  std::optional<std::size_t> find(const AngleClass& c) const;
  const std::vector<std::size_t>& classes_at(const Angle& x) const;
  std::vector<Angle> angles() const;
  // Least level among classes containing x.
  std::optional<int> level_of(const Angle& x) const;

  // Classes with level at most max_level; depth becomes max_level.
  Lamination restricted(int max_level) const;

  std::vector<std::string>& warnings() { return warnings_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  int degree_;
  Mode mode_;
  int depth_;
  std::vector<AngleClass> classes_;
  std::vector<Provenance> provenance_;
  std::map<AngleClass, std::size_t> index_;
  std::map<Angle, std::vector<std::size_t>> at_;
  std::vector<std::string> warnings_;
};

struct ExplicitPreimage {
  std::size_t generator = 0;
  AngleClass preimage;
};

Lamination generate(int d, const std::vector<AngleClass>& generators, int depth,
                    const std::vector<ExplicitPreimage>& explicit_preimages = {},
                    Mode mode = Mode::Equivalence);

struct PullbackSearch {
  std::vector<std::vector<AngleClass>> completions;
  std::string conflict;  // non-empty when no completion can exist
};

// All ways to split the uncovered preimage points of c into new classes
// mapping onto c without linking existing ones, before the sibling filter.
PullbackSearch pullback_completions(const Lamination& lam, const AngleClass& c, std::size_t limit = 256);

enum class Verdict { Pass, Fail, NotApplicable };
const char* to_string(Verdict v);

struct ForwardViolation {
  std::size_t cls;
  AngleClass image;
  std::optional<std::size_t> nearest;
};

struct InvarianceReport {
  std::vector<std::pair<std::size_t, std::size_t>> unlinked_violations;
  std::vector<ForwardViolation> forward_violations;
  std::vector<std::size_t> backward_violations;
  std::vector<std::size_t> covering_violations;
  std::vector<std::size_t> critical_classes;
  std::size_t backward_unchecked = 0;
  std::map<std::string, Verdict> verdict;
  bool passed() const;
};

InvarianceReport validate(const Lamination& lam);
std::vector<AngleClass> all_critical_classes(const Lamination& lam);

}  // namespace lamina
