#pragma once

// Weyl-Kac characters and the products built from positive coroots:
// the denominators D, D_v, the Gindikin-Karpelevich product Delta, and the
// imaginary correction factor m_v.
//
// rho in the exponents of the character formula is taken to be rho^vee, the
// coweight with every label equal to 1; the formulas live in the coweight
// group algebra and this is the only reading that type-checks there.

#include "heckecs/series.hpp"

namespace heckecs {

/// prod_{a > 0, ht(a) <= depth} (1 - u e^{-a})^{m(a)}, u = v^-1 if deformed else 1.
AnchoredSeries denominator(const DatumPtr& datum, int depth, bool deformed);

/// prod_{a > 0} ((1 - v^-1 e^{-a}) / (1 - e^{-a}))^{m(a)} to the given depth.
AnchoredSeries gk_delta(const DatumPtr& datum, int depth);

/// prod_{i=1..l} prod_{j >= 1} (1 - v^{-m_i - 1} e^{-jc}) / (1 - v^{-m_i} e^{-jc})
/// truncated at the given depth (affine specs only).
AnchoredSeries m_factor(const DatumPtr& datum, int depth);

/// sum_w (-1)^{l(w)} e^{w(Lambda + rho) - rho}, anchored at Lambda, truncated
/// at depth.  ht((Lambda + rho) - w(Lambda + rho)) >= l(w), so only layers of
/// length <= depth are visited.
AnchoredSeries weyl_kac_numerator(const DatumPtr& datum, const Labels& labels, int depth);

/// chi_Lambda truncated at depth; labels must be dominant.
AnchoredSeries weyl_kac_character(const DatumPtr& datum, const Labels& labels, int depth);

/// Finite specs: the whole character as an exact Laurent polynomial.
AnchoredSeries finite_character(const DatumPtr& datum, const Labels& labels);

/// ht(Lambda - w_0 Lambda): depth of the lowest weight (finite specs).
int lowest_weight_depth(const DatumPtr& datum, const Labels& labels);

/// prod over finite positive coroots of (1 - v^-1 e^{-a}), exactly (finite specs).
AnchoredSeries finite_deformed_denominator(const DatumPtr& datum);

/// D^{w_i} = -e^{a_i} D to the given depth, with D^{w_i} computed as the
/// product over the reflected coroot multiset.  `i` is 0-based.
bool check_denominator_wtwist(const DatumPtr& datum, int i, int depth);

void require_dominant(const RootDatum& datum, const Labels& labels);

}  // namespace heckecs
