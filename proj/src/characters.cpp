#include "heckecs/characters.hpp"

#include "heckecs/weyl.hpp"

namespace heckecs {

void require_dominant(const RootDatum& datum, const Labels& labels) {
  if (static_cast<int>(labels.size()) != datum.nodes())
    throw std::invalid_argument("expected " + std::to_string(datum.nodes()) + " labels for " + datum.name());
  for (int x : labels)
    if (x < 0) throw std::invalid_argument("labels must be dominant (nonnegative)");
}

AnchoredSeries denominator(const DatumPtr& datum, int depth, bool deformed) {
  const VPoly u = deformed ? VPoly::v(-1) : VPoly(1);
  AnchoredSeries d = AnchoredSeries::one(datum, depth);
  for (const Coroot& a : datum->positive_coroots_up_to(depth))
    for (int k = 0; k < a.multiplicity; ++k) d = d * AnchoredSeries::binomial(datum, -u, a.coords, depth);
  return d;
}

AnchoredSeries gk_delta(const DatumPtr& datum, int depth) {
  AnchoredSeries d = AnchoredSeries::one(datum, depth);
  for (const Coroot& a : datum->positive_coroots_up_to(depth))
    for (int k = 0; k < a.multiplicity; ++k) {
      d = d * AnchoredSeries::binomial(datum, -VPoly::v(-1), a.coords, depth);
      d = d * AnchoredSeries::geometric_inverse(datum, 1, a.coords, depth);
    }
  return d;
}

AnchoredSeries m_factor(const DatumPtr& datum, int depth) {
  if (!datum->affine()) throw SpecError("m_factor needs an affine spec");
  const Coords& c = datum->imaginary();
  AnchoredSeries m = AnchoredSeries::one(datum, depth);
  for (int e : datum->exponents())
    for (int j = 1; j * height(c) <= depth; ++j) {
      Coords jc{};
      for (std::size_t k = 0; k < jc.size(); ++k) jc[k] = j * c[k];
      m = m * AnchoredSeries::binomial(datum, -VPoly::v(-e - 1), jc, depth);
      m = m * AnchoredSeries::geometric_inverse(datum, VPoly::v(-e), jc, depth);
    }
  return m;
}

AnchoredSeries weyl_kac_numerator(const DatumPtr& datum, const Labels& labels, int depth) {
  require_dominant(*datum, labels);
  const CartanMatrix& a = datum->cartan();
  Labels shifted = labels;
  for (int& x : shifted) x += 1;

  AnchoredSeries num = AnchoredSeries::truncated(datum, labels, depth);
  Layer layer = identity_layer(*datum);
  std::vector<Coords> betas{Coords{}};
  num.add_term(Coords{}, 1);
  for (int len = 1; len <= depth; ++len) {
    Layer next = next_layer(*datum, layer, std::numeric_limits<std::size_t>::max());
    if (next.empty()) break;
    std::vector<Coords> next_betas;
    next_betas.reserve(next.size());
    const VPoly sign = len % 2 ? -1 : 1;
    for (std::size_t k = 0; k < next.size(); ++k) {
      next_betas.push_back(reflect(a, next.gen[k], shifted, betas[next.parent[k]]));
      num.add_term(next_betas.back(), sign);
    }
    layer = std::move(next);
    betas = std::move(next_betas);
  }
  return num;
}

AnchoredSeries weyl_kac_character(const DatumPtr& datum, const Labels& labels, int depth) {
  AnchoredSeries chi = weyl_kac_numerator(datum, labels, depth);
  for (const Coroot& a : datum->positive_coroots_up_to(depth))
    for (int k = 0; k < a.multiplicity; ++k)
      chi = chi * AnchoredSeries::geometric_inverse(datum, 1, a.coords, depth);
  return chi;
}

int lowest_weight_depth(const DatumPtr& datum, const Labels& labels) {
  if (datum->affine()) throw SpecError("lowest weights exist only for finite specs");
  require_dominant(*datum, labels);
  const CartanMatrix& a = datum->cartan();
  Coords beta{};
  // Reflect while some pairing is positive; this ends at w_0 Lambda.
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < datum->nodes(); ++i)
      if (labels[static_cast<std::size_t>(i)] - a.pair(i, beta) > 0) {
        beta = reflect(a, i, labels, beta);
        moved = true;
      }
  }
  return height(beta);
}

AnchoredSeries finite_character(const DatumPtr& datum, const Labels& labels) {
  const int depth = lowest_weight_depth(datum, labels);
  const AnchoredSeries chi = weyl_kac_character(datum, labels, depth);
  AnchoredSeries out = AnchoredSeries::exact(datum, labels);
  for (const auto& [beta, c] : chi.terms()) out.add_term(beta, c);
  return out;
}

AnchoredSeries finite_deformed_denominator(const DatumPtr& datum) {
  if (datum->affine()) throw SpecError("finite_deformed_denominator needs a finite spec");
  AnchoredSeries d = AnchoredSeries::one(datum, std::nullopt);
  for (const Coroot& a : datum->positive_coroots_up_to(datum->finite_positive_count()))
    d = d * AnchoredSeries::binomial(datum, -VPoly::v(-1), a.coords, std::nullopt);
  return d;
}

bool check_denominator_wtwist(const DatumPtr& datum, int i, int depth) {
  const CartanMatrix& a = datum->cartan();
  const Coords ai = unit(i);
  const Labels zero(static_cast<std::size_t>(datum->nodes()), 0);

  // Product over the reflected multiset; w_i sends a_i to -a_i and permutes
  // the remaining positive coroots.  Real pairings are at most 2, so images
  // of height <= depth come from coroots of height <= depth + 2.
  AnchoredSeries others = AnchoredSeries::one(datum, depth);
  for (const Coroot& b : datum->positive_coroots_up_to(depth + 2)) {
    if (b.coords == ai) continue;
    const Coords image = reflect(a, i, zero, b.coords);
    if (!is_nonnegative(image)) return false;  // would contradict the permutation property
    if (height(image) > depth) continue;
    for (int k = 0; k < b.multiplicity; ++k)
      others = others * AnchoredSeries::binomial(datum, -1, image, depth);
  }
  // (1 - e^{a_i}) written over the anchor a_i^vee: -e^{a_i} + e^{a_i - a_i}.
  Labels col(static_cast<std::size_t>(datum->nodes()));
  for (int j = 0; j < datum->nodes(); ++j) col[static_cast<std::size_t>(j)] = a(j, i);
  AnchoredSeries flip = AnchoredSeries::monomial(datum, col, Coords{}, -1);
  flip.add_term(ai, 1);
  const AnchoredSeries lhs = flip * others;

  // -e^{a_i} D: the same terms over the anchor a_i^vee.
  AnchoredSeries rhs = denominator(datum, depth, false).relabeled(col);
  rhs *= VPoly(-1);
  return !first_mismatch(lhs, rhs, depth).has_value();
}

}  // namespace heckecs
