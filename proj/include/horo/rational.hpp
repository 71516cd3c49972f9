#pragma once

// Exact rational scalars and dense rational vectors.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace horo {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Points u, v, p, q, w of the ambient space V.
using RatVector = std::vector<Rational>;
// Linear functionals on V; paired with vectors through dot().
using RatCovector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p", "+p" or "p/q" (decimal digits only). Throws ParseError
/// naming the offending token.
Rational parse_rational(std::string_view token);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Comma-separated rationals, e.g. "1,-1/2,0".
RatVector parse_vector(std::string_view text);
std::string to_string(const RatVector& v);

Rational dot(const RatCovector& xi, const RatVector& u);
Rational squared_norm(const RatVector& v);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Rational& s, const RatVector& v);

RatVector zero_vector(std::size_t dim);
bool is_zero(const RatVector& v);

/// A rational r >= sqrt(x) for x >= 0, within a relative error of about 1e-12.
Rational sqrt_upper(const Rational& x);

double to_double(const Rational& r);
std::vector<double> to_double(const RatVector& v);

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace horo
