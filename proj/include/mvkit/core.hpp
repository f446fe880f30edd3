#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvkit {

using Rational = mpq_class;

// Integer vector over the node set, used for roots and dimension-vectors alike.
using RootVector = std::vector<std::int64_t>;

// Rational functional on the root lattice, stored by its values on the simple roots.
using Coweight = std::vector<Rational>;

enum class ErrorKind { usage, validation, domain };

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, ErrorKind kind = ErrorKind::domain)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

std::int64_t height(const RootVector& v);
Rational pair(const Coweight& theta, const RootVector& v);

RootVector add(const RootVector& a, const RootVector& b);
RootVector sub(const RootVector& a, const RootVector& b);
RootVector scale(const RootVector& a, std::int64_t k);
bool is_zero(const RootVector& v);
bool is_nonnegative(const RootVector& v);
RootVector unit_vector(std::size_t n, std::size_t i);

Coweight coweight_from_ints(const std::vector<std::int64_t>& v);
Coweight negate(const Coweight& c);
Coweight add(const Coweight& a, const Coweight& b);
Coweight scale(const Coweight& a, const Rational& k);

std::string to_string(const RootVector& v);
std::string to_string(const Coweight& c);
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace mvkit
