#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lamina/error.hpp"

namespace lamina {

using Integer = mpz_class;
using Rational = mpq_class;

// A point of R/Z stored as a reduced fraction in [0,1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& value);
  Angle(long numerator, long denominator);

  // Accepts "p/q" or "0".
  static Angle parse(std::string_view text);

  const Rational& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  std::string str() const;

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

struct OrbitInfo {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::vector<Angle> orbit;  // preperiod + period entries
};

int checked_degree(int d);

Angle sigma(int d, const Angle& a);
Angle sigma_iterate(int d, const Angle& a, std::size_t n);
OrbitInfo orbit(int d, const Angle& a, std::size_t max_steps = 1000000);
std::vector<Angle> preimages(int d, const Angle& a);

Rational rho(const Angle& a, const Angle& b);
Rational epsilon_d(int d);

// Length of the counterclockwise arc from a to b, in [0,1).
Rational ccw_distance(const Angle& a, const Angle& b);

// x in the open counterclockwise arc (s,t); s == t means the circle minus s.
bool in_open_arc(const Angle& x, const Angle& s, const Angle& t);

std::string to_string(const Rational& q);

}  // namespace lamina
