#include "mvkit/core.hpp"

#include <sstream>

namespace mvkit {

std::int64_t height(const RootVector& v) {
  std::int64_t h = 0;
  for (auto x : v) h += x;
  return h;
}

Rational pair(const Coweight& theta, const RootVector& v) {
  if (theta.size() != v.size()) throw Error("pairing: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s += theta[i] * Rational(static_cast<long>(v[i]));
  return s;
}

RootVector add(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  RootVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RootVector sub(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw Error("vector dimension mismatch");
  RootVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RootVector scale(const RootVector& a, std::int64_t k) {
  RootVector r(a);
  for (auto& x : r) x *= k;
  return r;
}

bool is_zero(const RootVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

bool is_nonnegative(const RootVector& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

RootVector unit_vector(std::size_t n, std::size_t i) {
  RootVector r(n, 0);
  r[i] = 1;
  return r;
}

Coweight coweight_from_ints(const std::vector<std::int64_t>& v) {
  Coweight c;
  c.reserve(v.size());
  for (auto x : v) c.emplace_back(static_cast<long>(x));
  return c;
}

Coweight negate(const Coweight& c) {
  Coweight r(c);
  for (auto& x : r) x = -x;
  return r;
}

Coweight add(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw Error("coweight dimension mismatch");
  Coweight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Coweight scale(const Coweight& a, const Rational& k) {
  Coweight r(a);
  for (auto& x : r) x *= k;
  return r;
}

std::string to_string(const RootVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Coweight& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
  os << ')';
  return os.str();
}

Rational parse_rational(const std::string& s) {
  // finite decimals such as -6.25
  if (auto dot = s.find('.'); dot != std::string::npos && s.find('/') == std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      throw Error("invalid rational: " + s, ErrorKind::usage);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    Rational q = parse_rational(s.substr(0, dot) + frac + "/" + den.get_str());
    return q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("invalid rational: " + s, ErrorKind::usage);
  if (q.get_den() == 0) throw Error("zero denominator: " + s, ErrorKind::usage);
  q.canonicalize();
  return q;
}

}  // namespace mvkit
