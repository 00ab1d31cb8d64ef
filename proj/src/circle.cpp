#include "lamina/circle.hpp"

#include <map>

namespace lamina {

namespace {

Rational frac(const Rational& q) {
  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(whole);
  r.canonicalize();
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Angle::Angle(const Rational& value) : value_(value) {
  value_.canonicalize();
  value_ = frac(value_);
}

Angle::Angle(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = Rational(numerator, denominator);
  value_.canonicalize();
  value_ = frac(value_);
}

Angle Angle::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("bad fraction '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (p >= q) throw std::invalid_argument("angle '" + std::string(text) + "' outside [0,1)");
  Rational r(p, q);
  r.canonicalize();
  return Angle(r);
}

std::string Angle::str() const {
  if (value_ == 0) return "0";
  return value_.get_str();
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

int checked_degree(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidDegree, "degree must be at least 2, got " + std::to_string(d));
  return d;
}

Angle sigma(int d, const Angle& a) {
  checked_degree(d);
  return Angle(a.value() * d);
}

Angle sigma_iterate(int d, const Angle& a, std::size_t n) {
  checked_degree(d);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), n);
  return Angle(a.value() * Rational(power));
}

OrbitInfo orbit(int d, const Angle& a, std::size_t max_steps) {
  checked_degree(d);
  std::map<Angle, std::size_t> seen;
  OrbitInfo info;
  Angle x = a;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    auto it = seen.find(x);
    if (it != seen.end()) {
      info.preperiod = it->second;
      info.period = i - it->second;
      return info;
    }
    seen.emplace(x, i);
    info.orbit.push_back(x);
    x = sigma(d, x);
  }
  throw Error(ErrorKind::InternalInconsistency, "orbit of " + a.str() + " exceeded the step cap");
}

std::vector<Angle> preimages(int d, const Angle& a) {
  checked_degree(d);
  std::vector<Angle> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out.emplace_back((a.value() + i) / d);
  return out;
}

Rational rho(const Angle& a, const Angle& b) {
  Rational diff = abs(a.value() - b.value());
  Rational other = 1 - diff;
  return diff < other ? diff : other;
}

Rational epsilon_d(int d) {
  checked_degree(d);
  return Rational(1, 2 * d);
}

Rational ccw_distance(const Angle& a, const Angle& b) {
  Rational diff = b.value() - a.value();
  if (diff < 0) diff += 1;
  return diff;
}

bool in_open_arc(const Angle& x, const Angle& s, const Angle& t) {
  if (x == s) return false;
  if (s == t) return true;
  return ccw_distance(s, x) < ccw_distance(s, t) && x != t;
}

}  // namespace lamina
