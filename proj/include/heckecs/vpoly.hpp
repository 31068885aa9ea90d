#pragma once

// Laurent polynomials in v with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace heckecs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-5/2"; throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

class VPoly {
 public:
  using Term = std::pair<int, BigInt>;  // (v-degree, coefficient)

  VPoly() = default;
  VPoly(long long c) { if (c != 0) terms_.emplace_back(0, BigInt(c)); }  // NOLINT
  static VPoly monomial(BigInt c, int degree);
  /// v^degree
  static VPoly v(int degree = 1) { return monomial(1, degree); }

  bool is_zero() const { return terms_.empty(); }
  /// True iff the polynomial lies in Z[v^-1].
  bool in_z_vinv() const { return terms_.empty() || terms_.back().first <= 0; }
  int max_degree() const { return terms_.back().first; }
  int min_degree() const { return terms_.front().first; }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coefficient(int degree) const;

  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  VPoly& operator*=(const VPoly& o) { return *this = *this * o; }
  /// Accumulates a * b without a temporary.
  void add_product(const VPoly& a, const VPoly& b);

  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  friend VPoly operator-(VPoly a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  friend bool operator==(const VPoly&, const VPoly&) = default;

  /// Exact substitution v := q (q != 0).
  Rational evaluate(const Rational& q) const;
  std::string to_string() const;

 private:
  explicit VPoly(std::vector<Term> t) : terms_(std::move(t)) {}
  void normalize();
  std::vector<Term> terms_;  // strictly increasing degree, no zeros
};

}  // namespace heckecs
