#include "heckecs/verify.hpp"

#include "heckecs/characters.hpp"
#include "heckecs/weyl.hpp"

#include <chrono>
#include <random>

namespace heckecs {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unstabilized: return "unstabilized";
  }
  return "?";
}

json VerificationReport::to_json(bool with_timing) const {
  json j;
  j["check"] = check;
  j["spec"] = spec;
  j["params"] = params;
  j["verdict"] = heckecs::to_string(verdict);
  if (witness) j["witness"] = *witness;
  if (achieved_length) j["achieved_L"] = *achieved_length;
  if (with_timing) j["ms"] = ms;
  if (!details.empty()) {
    json d = json::array();
    for (const auto& r : details) d.push_back(r.to_json(with_timing));
    j["details"] = std::move(d);
  }
  return j;
}

json mismatch_json(const Mismatch& m, int nodes) {
  return json{{"beta", coords_json(m.beta, nodes)}, {"lhs", m.lhs.to_string()}, {"rhs", m.rhs.to_string()}};
}

json mismatch_json(const RationalMismatch& m, int nodes) {
  return json{{"beta", coords_json(m.beta, nodes)},
              {"lhs", rational_to_string(m.lhs)},
              {"rhs", rational_to_string(m.rhs)}};
}

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport start(std::string check, const RootDatum& datum) {
  VerificationReport r;
  r.check = std::move(check);
  r.spec = datum.name();
  return r;
}

json labels_json(const Labels& l) { return json(l); }

// Copies a series' terms into an exact series over the same anchor.
AnchoredSeries to_exact(const AnchoredSeries& s) {
  if (s.is_exact()) return s;
  AnchoredSeries out = AnchoredSeries::exact(s.datum(), s.labels());
  for (const auto& [beta, c] : s.terms()) out.add_term(beta, c);
  return out;
}

bool compare(VerificationReport& r, const AnchoredSeries& lhs, const AnchoredSeries& rhs, int depth) {
  if (auto m = first_mismatch(lhs, rhs, depth)) {
    r.fail(mismatch_json(*m, lhs.root_datum().nodes()));
    return false;
  }
  return true;
}

void mark_unstabilized(VerificationReport& r, const WhittakerValue& w) {
  r.verdict = Verdict::Unstabilized;
  r.achieved_length = w.achieved_length;
  r.witness = json{{"stop_reason", w.stop_reason}};
}

// Folds sub-reports into the parent verdict; the first failure supplies the witness.
void absorb(VerificationReport& parent, VerificationReport child) {
  if (child.verdict == Verdict::Unstabilized && parent.verdict == Verdict::Pass) {
    parent.verdict = Verdict::Unstabilized;
    parent.witness = json{{"check", child.check}, {"detail", child.witness.value_or(json())}};
  } else if (child.verdict == Verdict::Fail) {
    if (parent.verdict != Verdict::Fail) parent.witness.reset();
    parent.fail(json{{"check", child.check}, {"detail", *child.witness}});
  }
  parent.details.push_back(std::move(child));
}

Labels constant_labels(const RootDatum& datum, int value) {
  return Labels(static_cast<std::size_t>(datum.nodes()), value);
}

// Height of the deepest w_i-preimage of a point that sits at height <= window
// and at most one step above the anchor cone: ht(beta) + l_i - <a_i, beta>.
// A window is only trustworthy when P is known down to this height.
int reflection_reach(const RootDatum& datum, const Labels& labels, int window) {
  const CartanMatrix& a = datum.cartan();
  int reach = 0;
  for (int i = 0; i < datum.nodes(); ++i) {
    int pull = 0;
    for (int j = 0; j < datum.nodes(); ++j) pull = std::max(pull, -a(i, j));
    reach = std::max(reach, window + labels[static_cast<std::size_t>(i)] + 2 + (window + 1) * pull);
  }
  return reach;
}

std::string generator_name(int i) { return "a" + std::to_string(i + 1); }

}  // namespace

WhittakerValue whittaker_normalized(const DatumPtr& datum, const Labels& labels, std::optional<int> depth,
                                    const RunOptions& opts) {
  require_dominant(*datum, labels);
  const AnchoredSeries e = anchor_monomial(datum, labels);
  WhittakerValue out;
  if (!datum->affine()) {
    // l(w_0) is the number of positive roots.
    SymmetrizerResult r = symmetrizer_partial(e, datum->finite_positive_count(), opts.limits);
    out.series = std::move(r.sum);
    out.achieved_length = r.achieved_length;
    out.stabilized = true;
    return out;
  }
  if (!depth) throw std::invalid_argument("affine specs need a truncation depth");
  SymmetrizerResult r = symmetrizer_stabilized(e, *depth, opts.margin, opts.limits);
  out.series = std::move(r.sum);
  out.achieved_length = r.achieved_length;
  out.stabilized = r.stabilized;
  out.stop_reason = std::move(r.stop_reason);
  return out;
}

std::optional<std::pair<Coords, VPoly>> first_non_polynomial(const AnchoredSeries& s) {
  for (const auto& [beta, c] : s.terms())
    if (!c.in_z_vinv()) return std::make_pair(beta, c);
  return std::nullopt;
}

VerificationReport verify_finite_cs(const DatumPtr& datum, const Labels& labels) {
  Stopwatch clock;
  VerificationReport r = start("finite-cs", *datum);
  r.params["labels"] = labels_json(labels);
  if (datum->affine()) throw SpecError("finite-cs needs a finite spec");
  const WhittakerValue lhs = whittaker_normalized(datum, labels, std::nullopt);
  const AnchoredSeries rhs = finite_deformed_denominator(datum) * finite_character(datum, labels);
  r.achieved_length = lhs.achieved_length;
  compare(r, lhs.series, rhs, std::max(lhs.series.depth(), rhs.depth()));
  r.ms = clock.ms();
  return r;
}

AnchoredSeries affine_cs_rhs(const DatumPtr& datum, const Labels& labels, int depth,
                             const std::optional<AnchoredSeries>& correction) {
  const AnchoredSeries corr = correction ? correction->truncated_to(depth) : m_factor(datum, depth);
  return corr * denominator(datum, depth, true) * weyl_kac_character(datum, labels, depth);
}

VerificationReport verify_affine_cs(const WhittakerValue& lhs, const AffineCsOptions& opts) {
  Stopwatch clock;
  const DatumPtr& datum = lhs.series.datum();
  VerificationReport r = start("affine-cs", *datum);
  r.params["labels"] = labels_json(lhs.series.labels());
  r.params["depth"] = opts.depth;
  r.params["margin"] = opts.run.margin;
  json qs = json::array();
  for (const Rational& q : opts.qs) qs.push_back(rational_to_string(q));
  r.params["q"] = qs;
  r.params["correction"] = opts.correction ? "custom" : "m_v";
  r.achieved_length = lhs.achieved_length;
  if (!lhs.stabilized) {
    mark_unstabilized(r, lhs);
    r.ms = clock.ms();
    return r;
  }

  const int d = opts.depth;
  const AnchoredSeries rhs = affine_cs_rhs(datum, lhs.series.labels(), d, opts.correction);
  compare(r, lhs.series, rhs, d);

  for (const Rational& q : opts.qs) {
    VerificationReport sub = start("affine-cs at v=" + rational_to_string(q), *datum);
    sub.params["q"] = rational_to_string(q);
    if (auto m = first_mismatch_at(lhs.series, rhs, d, q)) sub.fail(mismatch_json(*m, datum->nodes()));
    absorb(r, std::move(sub));
  }

  if (opts.polynomiality) {
    VerificationReport poly = start("polynomiality", *datum);
    if (auto bad = first_non_polynomial(lhs.series))
      poly.fail(json{{"beta", coords_json(bad->first, datum->nodes())}, {"coeff", bad->second.to_string()}});
    absorb(r, std::move(poly));
  }

  r.ms = clock.ms();
  return r;
}

VerificationReport verify_affine_cs(const DatumPtr& datum, const Labels& labels, const AffineCsOptions& opts) {
  if (!datum->affine()) throw SpecError("affine-cs needs an affine spec");
  Stopwatch clock;
  VerificationReport r = verify_affine_cs(whittaker_normalized(datum, labels, opts.depth, opts.run), opts);
  r.ms = clock.ms();
  return r;
}

AnchoredSeries divide_by_one_minus_ea(const AnchoredSeries& numerator, int i) {
  if (!numerator.is_exact()) throw SeriesError("divide_by_one_minus_ea needs an exact series");
  const auto idx = static_cast<std::size_t>(i);
  // Lines along a_i: the other coordinates fixed, position j = beta_i.
  std::map<Coords, std::map<int, VPoly>> lines;
  for (const auto& [beta, c] : numerator.terms()) {
    Coords base = beta;
    base[idx] = 0;
    lines[base][beta[idx]] += c;
  }
  // Q (1 - e^{a_i}) = N reads q_j - q_{j+1} = n_j, so q_j = sum_{s >= j} n_s
  // and the whole line must sum to zero for Q to be finite.
  AnchoredSeries out = AnchoredSeries::exact(numerator.datum(), numerator.labels());
  for (const auto& [base, line] : lines) {
    VPoly suffix;
    for (int j = line.rbegin()->first; j > line.begin()->first; --j) {
      if (auto it = line.find(j); it != line.end()) suffix += it->second;
      Coords b = base;
      b[idx] = j;
      out.add_term(b, suffix);
    }
    suffix += line.begin()->second;
    if (!suffix.is_zero())
      throw DivisionRemainder("line through " + coords_to_string(base, numerator.root_datum().nodes()) +
                              " leaves remainder " + suffix.to_string());
  }
  return out;
}

VerificationReport verify_recursion(const DatumPtr& datum, const Labels& labels, const std::vector<int>& w_prime,
                                    int i) {
  Stopwatch clock;
  const int n = datum->nodes();
  if (i < 0 || i >= n) throw std::invalid_argument("generator out of range");
  VerificationReport r = start("recursion", *datum);
  r.params["labels"] = labels_json(labels);
  json word = json::array();
  for (int g : w_prime) word.push_back(g + 1);
  r.params["w_prime"] = word;
  r.params["generator"] = i + 1;

  // Lengths via orbit keys: w_j w grows iff <a_j, w rho^vee> > 0.
  const CartanMatrix& a = datum->cartan();
  const Labels ones = constant_labels(*datum, 1);
  Coords key{};
  for (auto it = w_prime.rbegin(); it != w_prime.rend(); ++it) {
    if (*it < 0 || *it >= n) throw std::invalid_argument("generator out of range in w'");
    if (1 - a.pair(*it, key) <= 0) throw std::invalid_argument("w' is not a reduced word");
    key = reflect(a, *it, ones, key);
  }
  if (1 - a.pair(i, key) <= 0)
    throw std::invalid_argument("length condition violated: l(w_" + std::to_string(i + 1) + " w') < l(w') + 1");

  const AnchoredSeries x = apply_T_word(w_prime, anchor_monomial(datum, labels));
  const AnchoredSeries lhs = apply_T(i, x);

  // c(a) x^{w_a} + b(a) x over the common denominator (1 - e^{a}).
  AnchoredSeries num = AnchoredSeries::binomial(datum, -VPoly::v(-1), unit(i), std::nullopt) * act_on_series({i}, x);
  num += x * (VPoly::v(-1) - 1);
  const AnchoredSeries rhs = divide_by_one_minus_ea(num, i);

  r.achieved_length = static_cast<int>(w_prime.size()) + 1;
  compare(r, lhs, rhs, std::max(lhs.depth(), rhs.depth()));
  r.ms = clock.ms();
  return r;
}

VerificationReport verify_symmetrizer_properties(const DatumPtr& datum, const Labels& labels, int depth,
                                                 int buffer, const RunOptions& opts, WaFactor factor) {
  Stopwatch clock;
  if (buffer < 1 || buffer > depth) throw std::invalid_argument("buffer must lie in [1, depth]");
  VerificationReport r = start("symmetrizer", *datum);
  r.params["labels"] = labels_json(labels);
  r.params["depth"] = depth;
  r.params["buffer"] = buffer;
  r.params["margin"] = opts.margin;
  r.params["reflection_factor"] = factor == WaFactor::CMinusA ? "c(-a)" : "(1 - v^-1 e^a)/(1 - v^-1 e^-a)";
  const int window = depth - buffer;
  const int working = std::max(depth, reflection_reach(*datum, labels, window));
  r.params["working_depth"] = working;

  const WhittakerValue pv = whittaker_normalized(datum, labels, working, opts);
  r.achieved_length = pv.achieved_length;
  if (!pv.stabilized) {
    mark_unstabilized(r, pv);
    r.ms = clock.ms();
    return r;
  }
  const AnchoredSeries& p = pv.series;
  const AnchoredSeries pe = to_exact(p);
  const AnchoredSeries vp = p * VPoly::v(-1);

  AnchoredSeries q = p;
  for (const Coroot& b : datum->positive_coroots_up_to(working))
    for (int k = 0; k < b.multiplicity; ++k)
      q = q * AnchoredSeries::geometric_inverse(datum, VPoly::v(-1), b.coords, working);
  const AnchoredSeries qe = to_exact(q);

  const CartanMatrix& a = datum->cartan();
  for (int i = 0; i < datum->nodes(); ++i) {
    const std::string g = generator_name(i);

    VerificationReport left = start("T_" + g + " P = v^-1 P", *datum);
    compare(left, apply_T(i, pe), vp, window);
    absorb(r, std::move(left));

    VerificationReport right = start("P T_" + g + " = v^-1 P", *datum);
    const AnchoredSeries t = apply_T(i, anchor_monomial(datum, labels));
    if (datum->affine()) {
      const SymmetrizerResult s = symmetrizer_stabilized(t, working, opts.margin, opts.limits);
      right.achieved_length = s.achieved_length;
      if (!s.stabilized) {
        right.verdict = Verdict::Unstabilized;
        right.witness = json{{"stop_reason", s.stop_reason}};
      } else {
        compare(right, s.sum, vp, window);
      }
    } else {
      compare(right, symmetrizer_partial(t, datum->finite_positive_count(), opts.limits).sum, vp, window);
    }
    absorb(r, std::move(right));

    // Both sides written over the anchor Lambda + a_i, so the window grows by one.
    VerificationReport refl = start("w_" + g + " P = f P", *datum);
    Labels col(static_cast<std::size_t>(datum->nodes()));
    for (int j = 0; j < datum->nodes(); ++j) col[static_cast<std::size_t>(j)] = a(j, i);
    AnchoredSeries top = AnchoredSeries::monomial(datum, col, Coords{}, -VPoly::v(-1));
    top.add_term(unit(i), 1);
    const VPoly ratio = factor == WaFactor::CMinusA ? VPoly(1) : VPoly::v(-1);
    const AnchoredSeries f = top * AnchoredSeries::geometric_inverse(datum, ratio, unit(i), working + 1);
    compare(refl, act_on_series({i}, pe).reanchored(unit(i)), f * p, window + 1);
    absorb(r, std::move(refl));

    VerificationReport inv = start("w_" + g + " (P / D_v) = P / D_v", *datum);
    compare(inv, act_on_series({i}, qe), q, window);
    absorb(r, std::move(inv));
  }
  r.ms = clock.ms();
  return r;
}

Proportionality extract_proportionality(const DatumPtr& datum, const Labels& labels, int depth,
                                        const RunOptions& opts) {
  const WhittakerValue pv = whittaker_normalized(datum, labels, depth, opts);
  Proportionality out;
  out.stabilized = pv.stabilized;
  out.achieved_length = pv.achieved_length;
  const AnchoredSeries den = denominator(datum, depth, true) * weyl_kac_character(datum, labels, depth);
  out.gamma = divide(pv.series, den).truncated_to(depth);

  const Coords c = datum->affine() ? datum->imaginary() : Coords{};
  const int hc = height(c);
  for (const auto& [beta, coeff] : out.gamma.terms()) {
    bool on_axis = beta == Coords{};
    if (!on_axis && hc > 0 && height(beta) % hc == 0) {
      const int j = height(beta) / hc;
      on_axis = true;
      for (std::size_t k = 0; k < beta.size(); ++k) on_axis = on_axis && beta[k] == j * c[k];
    }
    if (!on_axis) {
      out.off_axis = beta;
      break;
    }
  }
  return out;
}

VerificationReport verify_gk_limit(const DatumPtr& datum, const Coords& nu, const GkLimitOptions& opts) {
  Stopwatch clock;
  const int n = datum->nodes();
  VerificationReport r = start("gk-limit", *datum);
  r.params["nu"] = coords_json(nu, n);
  r.params["depth"] = opts.depth;
  r.params["margin"] = opts.run.margin;
  r.params["correction"] = !datum->affine() ? "none" : opts.correction ? "custom" : "m_v";
  if (!is_nonnegative(nu)) throw std::invalid_argument("nu must be a nonnegative combination of simple coroots");
  const int h = height(nu);
  if (h > opts.depth) throw std::invalid_argument("ht(nu) exceeds the depth");

  AnchoredSeries target = gk_delta(datum, h);
  if (datum->affine()) target = (opts.correction ? opts.correction->truncated_to(h) : m_factor(datum, h)) * target;
  const VPoly rhs = target.coefficient(nu);

  // "Sufficiently dominant": scale rho^vee until the value survives two
  // doublings in a row unchanged.  One agreement is not enough: small scalings
  // can both give 0 before the support of the sum reaches nu.
  json trail = json::array();
  std::optional<VPoly> prev;
  std::optional<VPoly> limit;
  int unchanged = 0;
  int scale = 1;
  for (int doubling = 0; doubling <= opts.max_doublings; ++doubling, scale *= 2) {
    const WhittakerValue w = whittaker_normalized(datum, constant_labels(*datum, scale), h, opts.run);
    if (!w.stabilized) {
      mark_unstabilized(r, w);
      r.params["scalings"] = trail;
      r.ms = clock.ms();
      return r;
    }
    VPoly value = w.series.coefficient(nu);
    trail.push_back(json{{"scale", scale}, {"value", value.to_string()}});
    unchanged = prev && *prev == value ? unchanged + 1 : 0;
    if (unchanged == 2) {
      limit = std::move(value);
      break;
    }
    prev = std::move(value);
  }
  r.params["scalings"] = trail;
  if (!limit) {
    r.verdict = Verdict::Unstabilized;
    r.witness = json{{"stop_reason", "value still changing after " +
                                         std::to_string(opts.max_doublings) + " doublings"}};
  } else if (!(*limit == rhs)) {
    r.fail(json{{"beta", coords_json(nu, n)}, {"lhs", limit->to_string()}, {"rhs", rhs.to_string()}});
  }
  r.ms = clock.ms();
  return r;
}

VerificationReport verify_hecke_relations(const DatumPtr& datum, int count, std::uint64_t seed) {
  Stopwatch clock;
  const int n = datum->nodes();
  VerificationReport r = start("hecke-relations", *datum);
  r.params["count"] = count;
  r.params["seed"] = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> label_dist(-3, 3), beta_dist(-2, 2), deg_dist(-2, 2), sign_dist(0, 1);

  const auto check = [&](bool ok, const AnchoredSeries& s, std::string relation) {
    if (!ok) r.fail(json{{"relation", std::move(relation)}, {"monomial", s.to_json()}});
    return ok;
  };
  for (int t = 0; t < count && r.passed(); ++t) {
    Labels labels(static_cast<std::size_t>(n));
    for (int& x : labels) x = label_dist(rng);
    Coords beta{};
    for (int k = 0; k < n; ++k) beta[static_cast<std::size_t>(k)] = beta_dist(rng);
    const VPoly coeff = VPoly::monomial(sign_dist(rng) ? 1 : -1, deg_dist(rng));
    const AnchoredSeries s = AnchoredSeries::monomial(datum, labels, beta, coeff);
    for (int i = 0; i < n; ++i) {
      const std::string g = generator_name(i);
      check(check_quadratic(i, s, DLKind::T), s, "quadratic T_" + g);
      check(check_quadratic(i, s, DLKind::Tprime), s, "quadratic T'_" + g);
      check(check_conjugation(i, s), s, "conjugation " + g);
      for (int j = i + 1; j < n; ++j) {
        const std::string pair = g + "," + generator_name(j);
        check(check_braid(i, j, s, DLKind::T), s, "braid T " + pair);
        check(check_braid(i, j, s, DLKind::Tprime), s, "braid T' " + pair);
      }
    }
  }
  r.ms = clock.ms();
  return r;
}

VerificationReport verify_denominator_identity(const DatumPtr& datum, int depth) {
  Stopwatch clock;
  VerificationReport r = start("denominator-identity", *datum);
  r.params["depth"] = depth;
  compare(r, weyl_kac_numerator(datum, constant_labels(*datum, 0), depth), denominator(datum, depth, false), depth);
  r.ms = clock.ms();
  return r;
}

VerificationReport verify_denominator_twist(const DatumPtr& datum, int depth) {
  Stopwatch clock;
  VerificationReport r = start("denominator-twist", *datum);
  r.params["depth"] = depth;
  for (int i = 0; i < datum->nodes(); ++i)
    if (!check_denominator_wtwist(datum, i, depth)) r.fail(json{{"generator", i + 1}});
  r.ms = clock.ms();
  return r;
}

}  // namespace heckecs
