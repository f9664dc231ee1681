#ifndef PTC_RATIONAL_HPP
#define PTC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ptc {

using Rational = mpq_class;
using Integer = mpz_class;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

// num/den in lowest terms (the two-argument mpq constructor does not reduce).
Rational frac(long num, long den);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Reduce into [0, m).
Rational mod_positive(const Rational& q, const Rational& m);
// Floor of a rational as an Integer.
Integer floor_q(const Rational& q);

std::string to_string(const RatVec& v);

// Angle q*pi, stored with q in [0, 2).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& q);
  static Angle pi_units(std::int64_t num, std::int64_t den);

  const Rational& q() const { return q_; }
  Angle operator+(const Angle& o) const { return Angle(q_ + o.q_); }
  Angle operator-(const Angle& o) const { return Angle(q_ - o.q_); }
  Angle operator-() const { return Angle(-q_); }
  Angle plus_pi() const { return Angle(q_ + 1); }
  bool operator==(const Angle& o) const { return q_ == o.q_; }
  bool operator<(const Angle& o) const { return q_ < o.q_; }
  std::string str() const;

 private:
  Rational q_{0};
};

// Point of the torus R^{n+1}/R mod 2pi, normalized so that coordinate 0 is 0.
class AngleVector {
 public:
  AngleVector() = default;
  explicit AngleVector(const std::vector<Angle>& coords);
  explicit AngleVector(const RatVec& qs);

  std::size_t size() const { return c_.size(); }
  const Angle& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Angle>& coords() const { return c_; }
  bool operator==(const AngleVector& o) const { return c_ == o.c_; }
  bool operator<(const AngleVector& o) const { return c_ < o.c_; }
  std::string str() const;

 private:
  std::vector<Angle> c_;
};

}  // namespace ptc

#endif
