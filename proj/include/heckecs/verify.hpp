#pragma once

// Executable checks of the Whittaker/Casselman-Shalika identities.
//
// Every identity here is prefactor-free: the factor q^{<rho, Lambda^vee>}
// depends on components of Lambda^vee that anchor labels do not record, so it
// is reported symbolically and never folded into a comparison.

#include "heckecs/hecke.hpp"
#include "heckecs/series.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace heckecs {

enum class Verdict { Pass, Fail, Unstabilized };
std::string to_string(Verdict v);

struct VerificationReport {
  std::string check;
  std::string spec;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::Pass;
  std::optional<nlohmann::ordered_json> witness;  // always present on Fail
  std::optional<int> achieved_length;
  double ms = 0;
  /// Sub-checks (symmetrizer properties, per-q evaluations, ...).
  std::vector<VerificationReport> details;

  bool passed() const { return verdict == Verdict::Pass; }
  void fail(nlohmann::ordered_json w) {
    verdict = Verdict::Fail;
    if (!witness) witness = std::move(w);
  }
  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

nlohmann::ordered_json mismatch_json(const Mismatch& m, int nodes);
nlohmann::ordered_json mismatch_json(const RationalMismatch& m, int nodes);

/// The symbolic prefactor in front of every Whittaker value.
inline constexpr const char* kWhittakerPrefactor = "q^<rho, Lambda^vee>";

struct WhittakerValue {
  AnchoredSeries series;  // exact for finite specs, truncated for affine
  int achieved_length = 0;
  bool stabilized = false;
  std::string stop_reason;
};

struct RunOptions {
  int margin = 2;
  SymmetrizerLimits limits;
};

/// sum_w T_w(e^Lambda): the whole finite group, or the stabilized affine sum
/// to `depth` (required for affine specs).
WhittakerValue whittaker_normalized(const DatumPtr& datum, const Labels& labels, std::optional<int> depth,
                                    const RunOptions& opts = {});

/// First coefficient with a positive power of v, if any.
std::optional<std::pair<Coords, VPoly>> first_non_polynomial(const AnchoredSeries& s);

VerificationReport verify_finite_cs(const DatumPtr& datum, const Labels& labels);

struct AffineCsOptions {
  int depth = 6;
  RunOptions run;
  std::vector<Rational> qs;  // spot evaluations v := q
  /// Replaces m_v on the right-hand side when set.
  std::optional<AnchoredSeries> correction;
  /// Also require every left-hand coefficient to lie in Z[v^-1].
  bool polynomiality = true;
};
/// correction * D_v * chi_Lambda at the given depth; m_v unless `correction` is set.
AnchoredSeries affine_cs_rhs(const DatumPtr& datum, const Labels& labels, int depth,
                             const std::optional<AnchoredSeries>& correction = std::nullopt);
VerificationReport verify_affine_cs(const DatumPtr& datum, const Labels& labels, const AffineCsOptions& opts);
/// Same check against an already computed left-hand side.
VerificationReport verify_affine_cs(const WhittakerValue& lhs, const AffineCsOptions& opts);

/// Compares apply_T with the rational assembly
///   c(a_i) (T_{w'} e^Lambda)^{w_i} + b(a_i) T_{w'} e^Lambda
/// divided exactly by (1 - e^{a_i}).  Throws std::invalid_argument unless
/// l(w_i w') = l(w') + 1.
VerificationReport verify_recursion(const DatumPtr& datum, const Labels& labels, const std::vector<int>& w_prime,
                                    int i);

/// N / (1 - e^{a_i}) on an exact series, line by line along a_i via suffix
/// sums.  Throws DivisionRemainder when a line does not sum to zero.
AnchoredSeries divide_by_one_minus_ea(const AnchoredSeries& numerator, int i);

/// Factor f in the reflection property w_a P = f P.
enum class WaFactor {
  CMinusA,       // c(-a) = (1 - v^-1 e^{a}) / (1 - e^{-a})
  EigenQuotient  // (v^-1 - b(a)) / c(a) = (1 - v^-1 e^{a}) / (1 - v^-1 e^{-a})
};

/// (i) T_a P = v^-1 P, (ii) P T_a = v^-1 P, (iii) w_a P = f P,
/// (iv) w_a (P / D_v) = P / D_v, for every generator, at height <= depth - buffer.
/// w_a moves a point of height h by up to h * max|A_ij| + label, so P is
/// computed to the larger "working depth" that covers every preimage of the
/// window; it is reported in the params.
VerificationReport verify_symmetrizer_properties(const DatumPtr& datum, const Labels& labels, int depth,
                                                 int buffer, const RunOptions& opts = {},
                                                 WaFactor factor = WaFactor::CMinusA);

struct Proportionality {
  AnchoredSeries gamma;
  bool stabilized = false;
  int achieved_length = 0;
  /// First term not on Z_{>=0} c (finite specs: any term besides beta = 0).
  std::optional<Coords> off_axis;
};
/// P(e^Lambda) / (D_v chi_Lambda) by leading-coefficient division.
Proportionality extract_proportionality(const DatumPtr& datum, const Labels& labels, int depth,
                                        const RunOptions& opts = {});

struct GkLimitOptions {
  int depth = 6;
  int max_doublings = 6;
  RunOptions run;
  std::optional<AnchoredSeries> correction;  // replaces m_v (affine)
};
/// [e^{Lambda - nu}] sum_w T_w(e^Lambda) for Lambda = s * rho^vee, s = 1, 2, 4, ...
/// until the value is unchanged over two successive doublings, against [e^{-nu}] Delta (finite) or
/// [e^{-nu}] m_v Delta (affine).
VerificationReport verify_gk_limit(const DatumPtr& datum, const Coords& nu, const GkLimitOptions& opts = {});

/// Quadratic, braid and conjugation relations on `count` seeded random monomials.
VerificationReport verify_hecke_relations(const DatumPtr& datum, int count, std::uint64_t seed);

/// sum_w (-1)^{l(w)} e^{w rho - rho} = D to the given depth.
VerificationReport verify_denominator_identity(const DatumPtr& datum, int depth);

/// D^{w_i} = -e^{a_i} D for every generator.
VerificationReport verify_denominator_twist(const DatumPtr& datum, int depth);

}  // namespace heckecs
