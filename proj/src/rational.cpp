#include "horo/rational.hpp"

#include <cctype>
#include <cmath>

namespace horo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  std::string_view body = trim(token);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(token) + "'");
  }
  const Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in rational '" + std::string(token) + "'");
  const Integer n{std::string(num)};
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.str(); }

RatVector parse_vector(std::string_view text) {
  RatVector out;
  std::string_view rest = trim(text);
  if (rest.empty()) throw ParseError("empty vector");
  while (true) {
    auto comma = rest.find(',');
    out.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rational dot(const RatCovector& xi, const RatVector& u) {
  require_same_dim(xi.size(), u.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += xi[i] * u[i];
  return s;
}

Rational squared_norm(const RatVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  require_same_dim(a.size(), b.size(), "vector add");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  require_same_dim(a.size(), b.size(), "vector subtract");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector operator-(const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVector zero_vector(std::size_t dim) { return RatVector(dim, Rational(0)); }

bool is_zero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational sqrt_upper(const Rational& x) {
  if (x < 0) throw std::domain_error("sqrt_upper of a negative rational");
  if (x == 0) return 0;
  Rational r(std::sqrt(to_double(x)));
  if (r * r == x) return r;
  r *= Rational(1000000000001, 1000000000000);
  while (r * r < x) r *= Rational(1001, 1000);
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<double> to_double(const RatVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

}  // namespace horo
