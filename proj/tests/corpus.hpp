#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lamina/lamination.hpp"

namespace corpus {

using namespace lamina;

struct Sample {
  Lamination lam;
  std::vector<AngleClass> generators;
};

inline long pow_long(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Periodic orbit of a random angle with denominator d^p - 1, or a random preperiodic pair.
inline AngleClass random_generator(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> period(2, d == 2 ? 5 : 3);
  int k = kind(rng);
  if (k == 0) {
    long q = pow_long(d, period(rng)) - 1;
    std::uniform_int_distribution<long> p(1, q - 1);
    Angle a(p(rng), q);
    return AngleClass::from_unsorted(orbit(d, a).orbit);
  }
  long q = k == 1 ? pow_long(d, period(rng)) - 1 : 2 * (pow_long(d, period(rng)) - 1);
  std::uniform_int_distribution<long> p(0, q - 1);
  std::uniform_int_distribution<int> size(2, 3);
  std::vector<Angle> pts;
  int n = size(rng);
  for (int i = 0; i < n; ++i) pts.emplace_back(p(rng), q);
  return AngleClass::from_unsorted(pts);
}

inline bool non_critical(int d, const AngleClass& c) {
  AngleClass cur = c;
  for (int i = 0; i < 64; ++i) {
    if (cur.size() < 2) return false;
    AngleClass next = image_class(d, cur);
    if (next.size() != cur.size()) return false;
    if (next == c) return true;
    cur = next;
  }
  return true;
}

// Deterministic corpus of generated laminations from disjoint non-critical families.
inline std::vector<Sample> generated(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  const int degrees[] = {2, 3, 4};
  std::size_t attempt = 0;
  while (out.size() < count) {
    int d = degrees[attempt++ % 3];
    std::uniform_int_distribution<int> ngens(1, 2);
    std::uniform_int_distribution<int> depth(1, d == 2 ? 4 : (d == 3 ? 2 : 1));
    std::vector<AngleClass> gens;
    int n = ngens(rng);
    for (int i = 0; i < n; ++i) gens.push_back(random_generator(d, rng));
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      ok = gens[i].size() >= 2 && non_critical(d, gens[i]);
      for (std::size_t j = 0; j < i && ok; ++j) ok = is_disjoint(gens[i], gens[j]);
    }
    if (!ok) continue;
    try {
      Lamination lam = generate(d, gens, depth(rng));
      if (!lam.warnings().empty() || lam.size() > 400) continue;
      out.push_back({std::move(lam), std::move(gens)});
    } catch (const Error&) {
    }
  }
  return out;
}

// Geometric-mode copy with every polygon replaced by its edge leaves.
inline Lamination split_polygons(const Lamination& lam) {
  Lamination out(lam.degree(), Mode::Geometric, lam.depth());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    for (const Leaf& l : hull_edges(lam[i])) {
      AngleClass c{l.first(), l.second()};
      if (!out.find(c)) out.add(c, lam.provenance()[i]);
    }
  }
  return out;
}

// Random non-crossing leaves, allowed to share endpoints, in geometric mode.
inline Lamination random_diagram(int d, std::size_t leaves, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(2, 48);
  Lamination lam(d, Mode::Geometric, 0);
  std::vector<Angle> pool;
  for (std::size_t i = 0; i < leaves + 4; ++i) {
    long q = den(rng);
    pool.emplace_back(std::uniform_int_distribution<long>(0, q - 1)(rng), q);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Leaf> placed;
  for (std::size_t tries = 0; placed.size() < leaves && tries < 40 * leaves; ++tries) {
    Angle a = pool[pick(rng)], b = pool[pick(rng)];
    if (a == b) continue;
    Leaf l(a, b);
    bool fine = true;
    for (const Leaf& m : placed) {
      if (m == l || crosses(m, l)) {
        fine = false;
        break;
      }
    }
    if (!fine) continue;
    placed.push_back(l);
    lam.add(AngleClass{l.first(), l.second()}, {Provenance::Kind::Input, 0});
  }
  return lam;
}

}  // namespace corpus
