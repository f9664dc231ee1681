#include "ptc/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace ptc {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

Integer floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rational mod_positive(const Rational& q, const Rational& m) {
  Rational t = q / m;
  Rational r = q - Rational(floor_q(t)) * m;
  return r;
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Angle::Angle(const Rational& q) : q_(mod_positive(q, Rational(2))) {}

Angle Angle::pi_units(std::int64_t num, std::int64_t den) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Angle(q);
}

std::string Angle::str() const { return q_.get_str() + "pi"; }

AngleVector::AngleVector(const std::vector<Angle>& coords) {
  if (coords.empty()) return;
  Angle base = coords[0];
  c_.reserve(coords.size());
  for (const auto& a : coords) c_.push_back(a - base);
}

AngleVector::AngleVector(const RatVec& qs) {
  std::vector<Angle> a;
  a.reserve(qs.size());
  for (const auto& q : qs) a.emplace_back(q);
  *this = AngleVector(a);
}

std::string AngleVector::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].q().get_str();
  }
  os << "]pi";
  return os.str();
}

}  // namespace ptc
