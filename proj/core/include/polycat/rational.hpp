#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polycat {

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

// Always "p/q", including integers ("2/1").
std::string to_string(const Rational& q);
// Accepts "p/q" or "p"; throws SyntaxError.
Rational parse_rational(const std::string& text);

std::string to_string(const Vector& v);  // "(a, b, ...)"

Rational dot(const Vector& a, const Vector& b);
Vector scaled_vector(const Vector& v, const Rational& s);
Vector negated(const Vector& v);
bool is_zero(const Vector& v);

// Plus infinity or a finite value.
struct ExtendedRational {
  bool infinite = false;
  Rational value;

  static ExtendedRational inf() { return ExtendedRational{true, 0}; }
  static ExtendedRational finite(const Rational& q) { return ExtendedRational{false, q}; }
  bool operator==(const ExtendedRational& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

std::string to_string(const ExtendedRational& q);  // "inf" or "p/q"

}  // namespace polycat
