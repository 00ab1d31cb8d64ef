#include "lamina/lamination.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lamina {

const char* to_string(Mode mode) { return mode == Mode::Equivalence ? "equivalence" : "geometric"; }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::string Provenance::str() const {
  switch (kind) {
    case Kind::Generator: return "generator";
    case Kind::ForwardImage: return "forward-image";
    case Kind::Pullback: return "pullback(" + std::to_string(level) + ")";
    case Kind::Explicit: return "explicit(" + std::to_string(level) + ")";
    case Kind::Input: return "input(" + std::to_string(level) + ")";
  }
  return "unknown";
}

Lamination::Lamination(int degree, Mode mode, int depth) : degree_(checked_degree(degree)), mode_(mode), depth_(depth) {}

std::size_t Lamination::add(AngleClass c, Provenance p) {
  if (c.size() < 2) throw Error(ErrorKind::DegenerateClass, "class " + c.str() + " has fewer than two angles");
  std::size_t id = classes_.size();
  for (const Angle& x : c) at_[x].push_back(id);
  index_.emplace(c, id);
  classes_.push_back(std::move(c));
  provenance_.push_back(p);
  return id;
}

std::optional<std::size_t> Lamination::find(const AngleClass& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& Lamination::classes_at(const Angle& x) const {
  static const std::vector<std::size_t> none;
  auto it = at_.find(x);
  return it == at_.end() ? none : it->second;
}

std::vector<Angle> Lamination::angles() const {
  std::vector<Angle> out;
  out.reserve(at_.size());
  for (const auto& [x, ids] : at_) out.push_back(x);
  return out;
}

std::optional<int> Lamination::level_of(const Angle& x) const {
  std::optional<int> best;
  for (std::size_t id : classes_at(x)) {
    int lv = provenance_[id].level;
    if (!best || lv < *best) best = lv;
  }
  return best;
}

Lamination Lamination::restricted(int max_level) const {
  Lamination out(degree_, mode_, max_level);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (provenance_[i].level <= max_level) out.add(classes_[i], provenance_[i]);
  }
  return out;
}

namespace {

bool compatible(Mode mode, const AngleClass& a, const AngleClass& b) {
  return mode == Mode::Equivalence ? unlinked(a, b) : non_crossing(a, b);
}

std::optional<std::size_t> first_conflict(const Lamination& lam, const AngleClass& c) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (!compatible(lam.mode(), lam[i], c)) return i;
  }
  return std::nullopt;
}

bool rotational(int d, const std::vector<AngleClass>& blocks) {
  for (const AngleClass& b : blocks) {
    Integer slot = Integer(b.least().value() * d);
    for (const Angle& x : b) {
      if (Integer(x.value() * d) != slot) return false;
    }
  }
  return true;
}

}  // namespace

PullbackSearch pullback_completions(const Lamination& lam, const AngleClass& c, std::size_t limit) {
  const int d = lam.degree();
  const std::size_t n = c.size();
  PullbackSearch result;

  std::set<Angle> covered;
  std::vector<std::vector<Angle>> remaining(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Angle& p : preimages(d, c[i])) {
      for (std::size_t id : lam.classes_at(p)) {
        if (image_class(d, lam[id]) == c) {
          covered.insert(p);
        } else if (lam.mode() == Mode::Equivalence) {
          result.conflict = "preimage " + p.str() + " of " + c.str() + " lies in class " + lam[id].str() +
                            " which does not map onto it";
          return result;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const Angle& p : preimages(d, c[i])) {
      if (!covered.count(p)) remaining[i].push_back(p);
    }
  }
  const std::size_t m = remaining[0].size();
  for (const auto& r : remaining) {
    if (r.size() != m) {
      result.conflict = "preimages of " + c.str() + " are unevenly covered by existing classes";
      return result;
    }
  }

  std::vector<std::vector<bool>> used(n, std::vector<bool>(m, false));
  std::vector<AngleClass> chosen;

  std::function<void(std::size_t)> place = [&](std::size_t left) {
    if (result.completions.size() >= limit) return;
    if (left == 0) {
      result.completions.push_back(chosen);
      return;
    }
    // Start each block at the least unused preimage.
    std::size_t i0 = n, j0 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!used[i][j] && (i0 == n || remaining[i][j] < remaining[i0][j0])) {
          i0 = i;
          j0 = j;
        }
      }
    }
    const Angle& start = remaining[i0][j0];
    used[i0][j0] = true;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, Rational)> extend = [&](std::size_t step, Rational last) {
      if (result.completions.size() >= limit) return;
      if (step == n) {
        std::vector<Angle> pts{start};
        for (std::size_t s = 1; s < n; ++s) pts.push_back(remaining[(i0 + s) % n][pick[s - 1]]);
        AngleClass block(std::move(pts));
        if (first_conflict(lam, block)) return;
        for (const AngleClass& other : chosen) {
          if (!compatible(lam.mode(), other, block)) return;
        }
        chosen.push_back(block);
        place(left - 1);
        chosen.pop_back();
        return;
      }
      std::size_t i = (i0 + step) % n;
      for (std::size_t j = 0; j < m; ++j) {
        if (used[i][j]) continue;
        Rational dist = ccw_distance(start, remaining[i][j]);
        if (dist <= last) continue;
        used[i][j] = true;
        pick.push_back(j);
        extend(step + 1, dist);
        pick.pop_back();
        used[i][j] = false;
      }
    };
    extend(1, Rational(0));
    used[i0][j0] = false;
  };
  place(m);
  return result;
}

namespace {

class Builder {
 public:
  explicit Builder(Lamination& lam) : lam_(lam) {}

  std::size_t add(const AngleClass& c, Provenance p) {
    std::size_t id = lam_.add(c, p);
    by_image_[image_class(lam_.degree(), c)].push_back(id);
    return id;
  }

  // A new block may not separate two classes sharing an image.
  bool separates_siblings(const AngleClass& block, const AngleClass& target,
                          const std::vector<AngleClass>& fresh) const {
    auto splits = [&](const std::vector<const AngleClass*>& group) {
      std::optional<std::size_t> arc;
      for (const AngleClass* member : group) {
        for (const Angle& x : *member) {
          auto a = block.arc_index(x);
          if (!a) continue;
          if (arc && *arc != *a) return true;
          arc = a;
          break;
        }
      }
      return false;
    };
    for (const auto& [image, ids] : by_image_) {
      std::vector<const AngleClass*> group;
      for (std::size_t id : ids) group.push_back(&lam_[id]);
      if (image == target) {
        for (const AngleClass& f : fresh) {
          if (&f != &block) group.push_back(&f);
        }
      }
      if (group.size() >= 2 && splits(group)) return true;
    }
    if (!by_image_.count(target)) {
      std::vector<const AngleClass*> group;
      for (const AngleClass& f : fresh) {
        if (&f != &block) group.push_back(&f);
      }
      if (group.size() >= 2 && splits(group)) return true;
    }
    return false;
  }

  void pull_back(std::size_t parent, int level) {
    const AngleClass c = lam_[parent];
    PullbackSearch search = pullback_completions(lam_, c);
    if (!search.conflict.empty()) {
      lam_.warnings().push_back("pullback of " + c.str() + " discarded: " + search.conflict);
      return;
    }
    std::vector<std::vector<AngleClass>> kept;
    for (auto& completion : search.completions) {
      bool ok = true;
      for (const AngleClass& b : completion) {
        if (separates_siblings(b, c, completion)) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(std::move(completion));
    }
    if (kept.empty()) {
      lam_.warnings().push_back("pullback of " + c.str() + " discarded: no unlinked completion");
      return;
    }
    for (auto& k : kept) std::sort(k.begin(), k.end());
    std::sort(kept.begin(), kept.end());
    std::size_t pick = 0;
    if (kept.size() > 1) {
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (rotational(lam_.degree(), kept[i])) {
          pick = i;
          break;
        }
      }
      lam_.warnings().push_back("pullback of " + c.str() + " ambiguous (" + std::to_string(kept.size()) +
                                " completions), tie-broken");
    }
    for (const AngleClass& b : kept[pick]) add(b, {Provenance::Kind::Pullback, level});
  }

 private:
  Lamination& lam_;
  std::map<AngleClass, std::vector<std::size_t>> by_image_;
};

}  // namespace

Lamination generate(int d, const std::vector<AngleClass>& generators, int depth,
                    const std::vector<ExplicitPreimage>& explicit_preimages, Mode mode) {
  checked_degree(d);
  if (depth < 0) throw Error(ErrorKind::NotGeneratingFamily, "negative depth");
  Lamination lam(d, mode, depth);
  Builder builder(lam);

  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() < 2) {
      throw Error(ErrorKind::DegenerateClass, "generator " + generators[i].str() + " has fewer than two angles");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!compatible(mode, generators[i], generators[j])) {
        throw Error(ErrorKind::NotGeneratingFamily,
                    "generators " + generators[j].str() + " and " + generators[i].str() + " are linked");
      }
    }
  }

  for (const AngleClass& g : generators) {
    AngleClass cur = g;
    bool first = true;
    for (std::size_t step = 0;; ++step) {
      if (step > 1000000) throw Error(ErrorKind::InternalInconsistency, "forward orbit did not close");
      if (lam.find(cur)) break;
      if (auto bad = first_conflict(lam, cur)) {
        throw Error(ErrorKind::NotGeneratingFamily,
                    "forward image " + cur.str() + " of " + g.str() + " is linked with " + lam[*bad].str());
      }
      builder.add(cur, {first ? Provenance::Kind::Generator : Provenance::Kind::ForwardImage, 0});
      AngleClass next = image_class(d, cur);
      if (next.size() < cur.size()) {
        throw Error(ErrorKind::PrecriticalGenerator, "generator " + g.str() + " has critical iterate " + cur.str());
      }
      cur = std::move(next);
      first = false;
    }
  }

  if (!explicit_preimages.empty() && depth >= 1) {
    for (const ExplicitPreimage& e : explicit_preimages) {
      if (e.generator >= generators.size()) {
        throw Error(ErrorKind::NotGeneratingFamily, "explicit preimage refers to missing generator " +
                                                         std::to_string(e.generator));
      }
      if (image_class(d, e.preimage) != generators[e.generator]) {
        throw Error(ErrorKind::NotGeneratingFamily,
                    e.preimage.str() + " does not map onto " + generators[e.generator].str());
      }
      if (lam.find(e.preimage)) continue;
      if (auto bad = first_conflict(lam, e.preimage)) {
        throw Error(ErrorKind::NotGeneratingFamily,
                    "explicit preimage " + e.preimage.str() + " is linked with " + lam[*bad].str());
      }
      builder.add(e.preimage, {Provenance::Kind::Explicit, 1});
    }
  }

  for (int level = 1; level <= depth; ++level) {
    std::vector<std::size_t> parents;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (lam.provenance()[i].level == level - 1) parents.push_back(i);
    }
    for (std::size_t p : parents) builder.pull_back(p, level);
  }
  return lam;
}

bool InvarianceReport::passed() const {
  for (const auto& [axiom, v] : verdict) {
    if (v == Verdict::Fail) return false;
  }
  return true;
}

InvarianceReport validate(const Lamination& lam) {
  const int d = lam.degree();
  InvarianceReport report;
  const auto& cls = lam.classes();

  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      if (!compatible(lam.mode(), cls[i], cls[j])) report.unlinked_violations.emplace_back(i, j);
    }
  }

  std::vector<AngleClass> images;
  images.reserve(cls.size());
  std::map<AngleClass, std::vector<std::size_t>> by_image;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    images.push_back(image_class(d, cls[i]));
    by_image[images[i]].push_back(i);
    if (images[i].size() < cls[i].size()) report.critical_classes.push_back(i);
    if (images[i].size() >= 2 && !lam.find(images[i])) {
      std::optional<std::size_t> nearest;
      std::size_t best = 0;
      for (const Angle& x : images[i]) {
        for (std::size_t id : lam.classes_at(x)) {
          std::size_t shared = 0;
          for (const Angle& y : images[i]) shared += cls[id].contains(y) ? 1 : 0;
          if (shared > best) {
            best = shared;
            nearest = id;
          }
        }
      }
      report.forward_violations.push_back({i, images[i], nearest});
    }
  }

  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (lam.provenance()[i].level >= lam.depth()) {
      ++report.backward_unchecked;
      continue;
    }
    std::vector<Angle> pre;
    for (const Angle& x : cls[i]) {
      for (const Angle& p : preimages(d, x)) pre.push_back(p);
    }
    std::sort(pre.begin(), pre.end());
    std::set<Angle> covered;
    auto it = by_image.find(cls[i]);
    if (it != by_image.end()) {
      for (std::size_t id : it->second) covered.insert(cls[id].begin(), cls[id].end());
    }
    if (!std::equal(pre.begin(), pre.end(), covered.begin(), covered.end())) {
      report.backward_violations.push_back(i);
    }
  }

  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (images[i].size() >= 2 && !is_covering_on_class(d, cls[i])) report.covering_violations.push_back(i);
  }

  auto verdict = [](bool ok) { return ok ? Verdict::Pass : Verdict::Fail; };
  report.verdict["E1"] = Verdict::NotApplicable;
  report.verdict["E2"] = verdict(report.unlinked_violations.empty());
  report.verdict["D1"] = verdict(report.forward_violations.empty());
  report.verdict["D2"] = verdict(report.backward_violations.empty());
  report.verdict["D3"] = verdict(report.covering_violations.empty());
  return report;
}

std::vector<AngleClass> all_critical_classes(const Lamination& lam) {
  std::vector<AngleClass> out;
  for (const AngleClass& c : lam.classes()) {
    if (image_class(lam.degree(), c).size() == 1) out.push_back(c);
  }
  return out;
}

}  // namespace lamina
