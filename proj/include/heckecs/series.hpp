#pragma once

// Anchored, height-truncated formal series
//
//     sum_beta c_beta e^{Lambda^vee - beta},   c_beta in Z[v, v^-1],
//
// the working model of the semi-infinite ring below a single anchor.  A
// series is either *exact* (finite support, nothing dropped; beta may have
// negative entries) or *truncated* at a depth D (every stored beta is
// nonnegative with ht(beta) <= D and all coefficients up to that height are
// correct).

#include "heckecs/rootdata.hpp"
#include "heckecs/vpoly.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <stdexcept>

namespace heckecs {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a query lands above the truncation depth.
class TruncationError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class AnchoredSeries {
 public:
  using TermMap = std::map<Coords, VPoly>;

  AnchoredSeries() = default;
  /// Zero series; `depth == nullopt` means exact.
  AnchoredSeries(DatumPtr datum, Labels labels, std::optional<int> depth);

  static AnchoredSeries exact(DatumPtr datum, Labels labels) {
    return AnchoredSeries(std::move(datum), std::move(labels), std::nullopt);
  }
  static AnchoredSeries truncated(DatumPtr datum, Labels labels, int depth) {
    return AnchoredSeries(std::move(datum), std::move(labels), depth);
  }
  /// The series 1 = e^0 anchored at 0.
  static AnchoredSeries one(DatumPtr datum, std::optional<int> depth);
  /// c * e^{Lambda - beta}.
  static AnchoredSeries monomial(DatumPtr datum, Labels labels, const Coords& beta, VPoly c,
                                 std::optional<int> depth = std::nullopt);
  /// 1 + u e^{-beta} (sign included in u), anchored at 0.
  static AnchoredSeries binomial(DatumPtr datum, const VPoly& u, const Coords& beta,
                                 std::optional<int> depth);
  /// sum_{j * ht(beta) <= depth} u^j e^{-j beta}: 1/(1 - u e^{-beta}) expanded
  /// in negative powers.  Throws if ht(beta) < 1.
  static AnchoredSeries geometric_inverse(DatumPtr datum, const VPoly& u, const Coords& beta, int depth);

  const DatumPtr& datum() const { return datum_; }
  const RootDatum& root_datum() const { return *datum_; }
  const Labels& labels() const { return labels_; }
  bool is_exact() const { return !depth_.has_value(); }
  /// Truncation depth; for exact series the largest stored height (0 if empty).
  int depth() const;
  const std::optional<int>& depth_bound() const { return depth_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Accumulates c at beta.  Terms above the depth are dropped.
  void add_term(const Coords& beta, const VPoly& c);
  /// Coefficient of e^{Lambda - beta}; TruncationError above the depth.
  VPoly coefficient(const Coords& beta) const;

  /// Copy truncated at `depth` (which must not exceed the current depth).
  AnchoredSeries truncated_to(int depth) const;
  /// The same element written relative to the anchor Lambda + gamma.
  AnchoredSeries reanchored(const Coords& gamma) const;
  /// Same terms reinterpreted over a different anchor label vector.
  AnchoredSeries relabeled(Labels labels) const;

  AnchoredSeries& operator+=(const AnchoredSeries& o);
  AnchoredSeries& operator-=(const AnchoredSeries& o);
  AnchoredSeries& operator*=(const VPoly& c);
  friend AnchoredSeries operator+(AnchoredSeries a, const AnchoredSeries& b) { return a += b; }
  friend AnchoredSeries operator-(AnchoredSeries a, const AnchoredSeries& b) { return a -= b; }
  friend AnchoredSeries operator*(AnchoredSeries a, const VPoly& c) { return a *= c; }
  friend AnchoredSeries operator*(const VPoly& c, AnchoredSeries a) { return a *= c; }
  /// Anchors add; the result depth is the smaller one.
  friend AnchoredSeries operator*(const AnchoredSeries& a, const AnchoredSeries& b);

  /// Exact structural equality (labels, truncation and terms).
  friend bool operator==(const AnchoredSeries& a, const AnchoredSeries& b);

  /// v := q in every coefficient.
  std::map<Coords, Rational> evaluate_v(const Rational& q) const;
  nlohmann::ordered_json to_json() const;
  std::string to_string() const;

 private:
  void require_compatible(const AnchoredSeries& o, const char* what) const;
  void check_beta(const Coords& beta) const;

  DatumPtr datum_;
  Labels labels_;
  std::optional<int> depth_;
  TermMap terms_;
};

/// Leading-coefficient division along the height filtration.  The divisor
/// must have coefficient 1 at beta = 0.  The quotient's anchor is the
/// difference of anchors; its depth is the smaller of the two depths.
AnchoredSeries divide(const AnchoredSeries& numerator, const AnchoredSeries& divisor);

/// First disagreement between two series on all beta with ht(beta) <= depth.
struct Mismatch {
  Coords beta{};
  VPoly lhs;
  VPoly rhs;
};
std::optional<Mismatch> first_mismatch(const AnchoredSeries& a, const AnchoredSeries& b, int depth);

/// Same comparison after the substitution v := q.
struct RationalMismatch {
  Coords beta{};
  Rational lhs;
  Rational rhs;
};
std::optional<RationalMismatch> first_mismatch_at(const AnchoredSeries& a, const AnchoredSeries& b,
                                                   int depth, const Rational& q);

nlohmann::ordered_json coords_json(const Coords& c, int n);
nlohmann::ordered_json vpoly_json(const VPoly& p);

}  // namespace heckecs
