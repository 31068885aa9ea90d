#pragma once

// Demazure-Lusztig operators on the coweight group algebra.
//
//   T_a  = c(a)[w_a] + b(a)[1],   c(a)  = (1 - v^-1 e^{-a}) / (1 - e^{a}),  b(a)  = (v^-1 - 1) / (1 - e^{a})
//   T'_a = c'(a)[w_a] + b'(a)[1], c'(a) = (1 - v e^{a}) / (1 - e^{a}),      b'(a) = (v - 1) / (1 - e^{a})
//
// Both are applied to finite series by exact division by (1 - e^{a}); a
// nonzero remainder is an internal error and is always checked.

#include "heckecs/series.hpp"
#include "heckecs/weyl.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace heckecs {

enum class DLKind { T, Tprime };

/// Thrown when an exact division leaves a remainder.
class DivisionRemainder : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Laurent polynomial in y = e^{-a}: exponent j stands for e^{-j a}.
using LinePoly = std::map<int, VPoly>;

/// N / (1 - e^{a}) for a Laurent polynomial N in y = e^{-a}, by synthetic
/// division from the top degree.  Throws DivisionRemainder if inexact.
LinePoly divide_one_minus_ea(const LinePoly& numerator);

/// T_i or T'_i applied to an exact series.  `i` is 0-based.
AnchoredSeries apply_T(int i, const AnchoredSeries& s, DLKind kind = DLKind::T);

/// T_{i1} ... T_{ik} (s): the rightmost letter acts first.
AnchoredSeries apply_T_word(const std::vector<int>& word, const AnchoredSeries& s, DLKind kind = DLKind::T);

/// T^2 = (v^-1 - 1) T + v^-1   (T' : T'^2 = (v - 1) T' + v).
bool check_quadratic(int i, const AnchoredSeries& s, DLKind kind = DLKind::T);

/// Braid relation for the pair (i, j): length-3 if the nodes are linked,
/// commutation if not.  Pairs with infinite order (affine A1) have no
/// relation and report true.
bool check_braid(int i, int j, const AnchoredSeries& s, DLKind kind = DLKind::T);

/// e^{-rho} T'_i e^{rho} = -v T_i, with the shift by rho^vee acting on the
/// anchor labels (every pairing k becomes k + 1).
bool check_conjugation(int i, const AnchoredSeries& s);

struct SymmetrizerResult {
  AnchoredSeries sum;
  /// Contribution of each layer 0..achieved_length.
  std::vector<AnchoredSeries> layer_deltas;
  /// Longest Weyl length included in the sum.
  int achieved_length = 0;
  bool stabilized = false;
  /// Set when the run stopped on a cap rather than by stabilization.
  std::string stop_reason;
};

struct SymmetrizerLimits {
  std::size_t layer_cap = 20000;
  int max_length = 400;
};

/// sum_{l(w) <= max_length} T_w(input), exactly.  T_{w_i w'} is obtained as
/// T_i applied to T_{w'}(input) along the BFS tree.
SymmetrizerResult symmetrizer_partial(const AnchoredSeries& input, int max_length,
                                      const SymmetrizerLimits& limits = {});

/// Adds layers until `margin` consecutive layers contribute nothing at
/// height <= depth (or the group is exhausted); the sum is truncated at depth.
SymmetrizerResult symmetrizer_stabilized(const AnchoredSeries& input, int depth, int margin,
                                         const SymmetrizerLimits& limits = {});

/// e^{Lambda} for the given anchor labels.
AnchoredSeries anchor_monomial(const DatumPtr& datum, const Labels& labels);

}  // namespace heckecs
