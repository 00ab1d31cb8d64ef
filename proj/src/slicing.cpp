#include <algorithm>
#include <random>

#include "lamina/criterion.hpp"

namespace lamina {

SlicingFamily::SlicingFamily(std::vector<AngleClass> members) : members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].empty()) throw Error(ErrorKind::InvalidFamily, "empty member");
    for (std::size_t j = 0; j < i; ++j) {
      if (!unlinked(members_[i], members_[j])) {
        throw Error(ErrorKind::InvalidFamily,
                    "members " + members_[j].str() + " and " + members_[i].str() + " are linked or overlap");
      }
    }
  }
}

namespace {

// Angles replaced by ranks so the cubic scan stays in integer arithmetic.
struct RankedFamily {
  std::vector<std::vector<std::size_t>> members;
  std::size_t points = 0;
};

RankedFamily rank_family(const std::vector<AngleClass>& members) {
  std::vector<Angle> all;
  for (const AngleClass& c : members) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  RankedFamily out;
  out.points = all.size();
  for (const AngleClass& c : members) {
    std::vector<std::size_t> r;
    for (const Angle& x : c) r.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), x) - all.begin()));
    out.members.push_back(std::move(r));
  }
  return out;
}

// Arc of sorted ranks c containing x (x not in c).
std::size_t arc_of(const std::vector<std::size_t>& c, std::size_t x) {
  auto it = std::lower_bound(c.begin(), c.end(), x);
  std::size_t above = static_cast<std::size_t>(it - c.begin());
  return above == 0 ? c.size() - 1 : above - 1;
}

bool ranked_separates(const std::vector<std::size_t>& c, const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
  // Members of a slicing family are pairwise disjoint.
  std::size_t arc_a = arc_of(c, a[0]);
  for (std::size_t x : a) {
    if (arc_of(c, x) != arc_a) return false;
  }
  for (std::size_t x : b) {
    if (arc_of(c, x) == arc_a) return false;
  }
  return true;
}

}  // namespace

SlicingResult is_well_slicing(const SlicingFamily& fam) {
  SlicingResult out;
  if (fam.size() < 2) {
    out.reason = "fewer than two members";
    return out;
  }
  RankedFamily r = rank_family(fam.members());
  const std::size_t n = r.members.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool found = false;
      for (std::size_t k = 0; k < n && !found; ++k) {
        if (k == i || k == j) continue;
        found = ranked_separates(r.members[k], r.members[i], r.members[j]);
      }
      if (!found) {
        out.unseparated = std::make_pair(i, j);
        out.reason = "no member separates " + fam.members()[i].str() + " and " + fam.members()[j].str();
        return out;
      }
    }
  }
  out.well_slicing = true;
  return out;
}

SlicingFamily vertical_collection(int denominator_bound) {
  if (denominator_bound < 3) throw Error(ErrorKind::InvalidFamily, "denominator bound must be at least 3");
  std::vector<Rational> alphas;
  for (int q = 2; q <= denominator_bound; ++q) {
    for (int p = 1; 2 * p < q; ++p) {
      Rational a(p, q);
      a.canonicalize();
      if (a.get_den() == q) alphas.push_back(a);
    }
  }
  std::sort(alphas.begin(), alphas.end());
  std::vector<AngleClass> members;
  for (const Rational& a : alphas) members.push_back(AngleClass{Angle(a), Angle(Rational(1) - a)});
  return SlicingFamily(std::move(members));
}

LemmaReport ray_separation_lemmas_check(const SlicingFamily& fam, std::size_t samples, std::uint64_t seed) {
  LemmaReport report;
  const auto& m = fam.members();
  if (m.size() < 3) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
  std::uniform_int_distribution<long> numer(0, 9999);

  auto random_point = [&]() { return AngleClass{Angle(numer(rng), 10000)}; };
  // A or B: a family member or a random singleton disjoint from the others.
  auto random_set = [&]() { return (rng() & 1) ? m[pick(rng)] : random_point(); };
  auto describe = [](std::initializer_list<const AngleClass*> xs) {
    std::string s;
    for (const AngleClass* x : xs) s += " " + x->str();
    return s;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    switch (s % 3) {
      case 0: {
        ++report.middle_separates.samples;
        const AngleClass& c1 = m[pick(rng)];
        const AngleClass& c2 = m[pick(rng)];
        const AngleClass& c3 = m[pick(rng)];
        AngleClass a = random_set(), b = random_set();
        if (!is_disjoint(c1, c2) || !separates(c1, a, b) || !separates(c2, a, b) || !is_disjoint(c3, a) ||
            !is_disjoint(c3, b) || !separates(c3, c1, c2)) {
          break;
        }
        ++report.middle_separates.premises_met;
        if (!separates(c3, a, b)) report.middle_separates.failures.push_back("middle" + describe({&c1, &c2, &c3, &a, &b}));
        break;
      }
      case 1: {
        ++report.sep_sep.samples;
        const AngleClass& k1 = m[pick(rng)];
        const AngleClass& k2 = m[pick(rng)];
        AngleClass a = random_set(), b = random_set();
        // K1 separates A from B and K2 separates K1 from B.
        if (!separates(k1, a, b) || !separates(k2, k1, b) || !is_disjoint(k2, a)) break;
        ++report.sep_sep.premises_met;
        if (!separates(k2, a, b)) report.sep_sep.failures.push_back("sep_sep" + describe({&k1, &k2, &a, &b}));
        break;
      }
      default: {
        ++report.no_finite.samples;
        const AngleClass& c1 = m[pick(rng)];
        const AngleClass& c2 = m[pick(rng)];
        const AngleClass* c3 = nullptr;
        for (const AngleClass& c : m) {
          if (separates(c, c1, c2)) {
            c3 = &c;
            break;
          }
        }
        if (!c3) break;
        ++report.no_finite.premises_met;
        // A separator of C3 and C2 is new and still separates C1 from C2.
        for (const AngleClass& c4 : m) {
          if (!separates(c4, *c3, c2)) continue;
          if (c4 == c1 || c4 == *c3 || !separates(c4, c1, c2)) {
            report.no_finite.failures.push_back("no_finite" + describe({&c1, &c2, c3, &c4}));
          }
        }
        break;
      }
    }
  }
  return report;
}

}  // namespace lamina
