#include "heckecs/acceptance.hpp"

#include "heckecs/characters.hpp"
#include "heckecs/weyl.hpp"

#include <chrono>
#include <cstdio>

namespace heckecs::acceptance {

using json = nlohmann::ordered_json;

json Outcome::to_json(bool with_timing) const {
  json j;
  if (id > 0) j["criterion"] = id;
  j["title"] = title;
  j["verdict"] = heckecs::to_string(verdict);
  j["summary"] = summary;
  if (with_timing) j["seconds"] = seconds;
  json reports_json = json::array();
  for (const auto& r : reports) reports_json.push_back(r.to_json(with_timing));
  j["reports"] = std::move(reports_json);
  return j;
}

bool Result::all_passed() const {
  for (const auto& o : criteria)
    if (o.verdict != Verdict::Pass) return false;
  return true;
}

json Result::to_json(bool with_timing) const {
  json c = json::array(), d = json::array();
  for (const auto& o : criteria) c.push_back(o.to_json(with_timing));
  for (const auto& o : diagnostics) d.push_back(o.to_json(with_timing));
  return json{{"criteria", c}, {"diagnostics", d}, {"all_passed", all_passed()}};
}

std::string format_line(const Outcome& o) {
  std::string verdict = heckecs::to_string(o.verdict);
  for (char& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  char timing[32];
  std::snprintf(timing, sizeof timing, "[%.1f s]", o.seconds);
  const std::string tag = o.id > 0 ? "C" + std::to_string(o.id) : "diag";
  return verdict + "  " + tag + "  " + o.title + "  " + timing + "  " + o.summary;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(const VerificationReport& r) {
  std::string s = r.spec + " " + r.check;
  if (r.params.contains("labels")) s += " labels=" + r.params["labels"].dump();
  if (r.params.contains("nu")) s += " nu=" + r.params["nu"].dump();
  if (r.witness) s += ": " + r.witness->dump();
  return s;
}

// Pass iff every report passes; the first non-passing report is quoted.
Outcome conclude(int id, std::string title, std::vector<VerificationReport> reports, const Stopwatch& clock,
                 double budget = 0) {
  Outcome o;
  o.id = id;
  o.title = std::move(title);
  o.seconds = clock.seconds();
  const VerificationReport* first_bad = nullptr;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) {
      o.verdict = Verdict::Fail;
      if (!first_bad || first_bad->verdict != Verdict::Fail) first_bad = &r;
    } else if (r.verdict == Verdict::Unstabilized && o.verdict == Verdict::Pass) {
      o.verdict = Verdict::Unstabilized;
      first_bad = &r;
    }
  }
  if (first_bad) {
    o.summary = describe(*first_bad);
  } else {
    o.summary = std::to_string(reports.size()) + (reports.size() == 1 ? " check exact" : " checks exact");
  }
  if (budget > 0 && o.seconds > budget) {
    if (o.verdict == Verdict::Pass) o.summary.clear();
    o.verdict = Verdict::Fail;
    char buf[64];
    std::snprintf(buf, sizeof buf, "over budget (%.1f s > %.0f s) ", o.seconds, budget);
    o.summary = buf + o.summary;
  }
  o.reports = std::move(reports);
  return o;
}

VerificationReport plain_report(std::string check, const RootDatum& datum, json params) {
  VerificationReport r;
  r.check = std::move(check);
  r.spec = datum.name();
  r.params = std::move(params);
  return r;
}

void all_labels(int n, int max_label, Labels& cur, std::vector<Labels>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int x = 0; x <= max_label; ++x) {
    cur.push_back(x);
    all_labels(n, max_label, cur, out);
    cur.pop_back();
  }
}

std::vector<Labels> label_box(int n, int max_label) {
  std::vector<Labels> out;
  Labels cur;
  all_labels(n, max_label, cur, out);
  return out;
}

struct AffineRun {
  DatumPtr datum;
  Labels labels;
  int depth;
  WhittakerValue lhs;
};

AnchoredSeries inverted_m(const DatumPtr& datum, int depth) {
  return divide(AnchoredSeries::one(datum, depth), m_factor(datum, depth));
}

}  // namespace

Result run(const Options& opts, const std::function<void(const Outcome&)>& report) {
  Result res;
  const auto emit = [&](Outcome o, bool diagnostic = false) {
    if (report) report(o);
    (diagnostic ? res.diagnostics : res.criteria).push_back(std::move(o));
  };
  RunOptions run_opts;
  run_opts.margin = kMargin;
  run_opts.limits = opts.limits;

  const DatumPtr A1 = RootDatum::make("A1"), A2 = RootDatum::make("A2"), A3 = RootDatum::make("A3"),
                 D4 = RootDatum::make("D4"), A1a = RootDatum::make("A1!"), A2a = RootDatum::make("A2!");

  {  // 1
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    for (int k = 0; k <= 5; ++k) reports.push_back(verify_finite_cs(A1, {2 * k}));
    for (const Labels& l : label_box(2, 2)) reports.push_back(verify_finite_cs(A2, l));
    for (const Labels& l : label_box(3, 2)) reports.push_back(verify_finite_cs(A3, l));
    for (const Labels& l : label_box(4, 1)) reports.push_back(verify_finite_cs(D4, l));
    emit(conclude(1, "finite Casselman-Shalika identity (A1 2k<=10, A2/A3 labels<=2, D4 labels<=1)",
                  std::move(reports), clock, kFiniteCsBudget));
  }

  {  // 2
    Stopwatch clock;
    // e^{a} + (1 - v^-1) + (1 - v^-1) e^{-a} - v^-1 e^{-2a}, anchored at Lambda = a.
    AnchoredSeries hand = AnchoredSeries::exact(A1, {2});
    const VPoly one_minus = VPoly(1) - VPoly::v(-1);
    hand.add_term(Coords{0}, 1);
    hand.add_term(Coords{1}, one_minus);
    hand.add_term(Coords{2}, one_minus);
    hand.add_term(Coords{3}, -VPoly::v(-1));
    const AnchoredSeries lhs = whittaker_normalized(A1, {2}, std::nullopt).series;
    const AnchoredSeries rhs = finite_deformed_denominator(A1) * finite_character(A1, {2});
    std::vector<VerificationReport> reports;
    for (const auto& [name, side] : {std::pair{"sum of T_w(e^Lambda)", &lhs}, std::pair{"D_v chi", &rhs}}) {
      VerificationReport r = plain_report(std::string(name) + " = hand value", *A1, json{{"labels", {2}}});
      if (auto m = first_mismatch(*side, hand, 3)) r.fail(mismatch_json(*m, 1));
      reports.push_back(std::move(r));
    }
    emit(conclude(2, "hand-checked A1 anchor case, Lambda = a", std::move(reports), clock));
  }

  // Shared by criteria 3, 4, 11 and the diagnostics.
  std::vector<AffineRun> affine;
  {  // 3
    Stopwatch clock;
    const std::vector<std::pair<DatumPtr, std::pair<Labels, int>>> configs = {
        {A1a, {{0, 1}, kAffineA1Depth}},  {A1a, {{1, 1}, kAffineA1Depth}}, {A1a, {{2, 1}, kAffineA1Depth}},
        {A2a, {{0, 0, 1}, kAffineA2Depth}}, {A2a, {{1, 0, 1}, kAffineA2Depth}}};
    std::vector<VerificationReport> reports;
    for (const auto& [datum, cfg] : configs) {
      AffineRun run{datum, cfg.first, cfg.second, whittaker_normalized(datum, cfg.first, cfg.second, run_opts)};
      AffineCsOptions o;
      o.depth = run.depth;
      o.run = run_opts;
      o.polynomiality = false;
      reports.push_back(verify_affine_cs(run.lhs, o));
      affine.push_back(std::move(run));
    }
    emit(conclude(3, "affine Casselman-Shalika identity sum T_w = m_v D_v chi (A1! D=6, A2! D=4)",
                  std::move(reports), clock, kAffineCsBudget));
  }

  {  // 4
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    for (const AffineRun& run : affine) {
      const AnchoredSeries rhs = affine_cs_rhs(run.datum, run.labels, run.depth);
      for (int q : {2, 3}) {
        VerificationReport r = plain_report("affine-cs at v=" + std::to_string(q), *run.datum,
                                            json{{"labels", run.labels}, {"depth", run.depth}, {"q", q}});
        r.achieved_length = run.lhs.achieved_length;
        if (!run.lhs.stabilized) {
          r.verdict = Verdict::Unstabilized;
          r.witness = json{{"stop_reason", run.lhs.stop_reason}};
        } else if (auto m = first_mismatch_at(run.lhs.series, rhs, run.depth, Rational(q))) {
          r.fail(mismatch_json(*m, run.datum->nodes()));
        }
        reports.push_back(std::move(r));
      }
    }
    emit(conclude(4, "affine identity after v := 2 and v := 3 (exact rationals)", std::move(reports), clock));
  }

  {  // 5
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    for (const DatumPtr& d : {A2, A3, A1a, A2a}) reports.push_back(verify_hecke_relations(d, kHeckeSamples, opts.seed));
    emit(conclude(5, "quadratic, braid and conjugation relations on 100 seeded monomials (A2, A3, A1!, A2!)",
                  std::move(reports), clock, kHeckeBudget));
  }

  std::optional<Proportionality> gamma;
  {  // 6
    Stopwatch clock;
    gamma = extract_proportionality(A1a, {0, 1}, kAffineA1Depth, run_opts);
    VerificationReport r = plain_report("proportionality = m_v", *A1a, json{{"labels", {0, 1}}, {"depth", kAffineA1Depth}});
    r.achieved_length = gamma->achieved_length;
    if (!gamma->stabilized) {
      r.verdict = Verdict::Unstabilized;
      r.witness = json{{"stop_reason", "symmetrizer did not stabilize"}};
    } else if (gamma->off_axis) {
      r.fail(json{{"off_axis_beta", coords_json(*gamma->off_axis, 2)}});
    } else if (auto m = first_mismatch(gamma->gamma, m_factor(A1a, kAffineA1Depth), kAffineA1Depth)) {
      r.fail(mismatch_json(*m, 2));
    }
    std::vector<VerificationReport> reports;
    reports.push_back(std::move(r));
    emit(conclude(6, "proportionality constant P / (D_v chi) equals m_v on Z>=0 c (A1!, D=6)", std::move(reports),
                  clock));
  }

  {  // 7
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    reports.push_back(verify_denominator_identity(A1a, kDenominatorDepthA1));
    reports.push_back(verify_denominator_identity(A2a, kDenominatorDepthA2));
    emit(conclude(7, "denominator identity sum (-1)^l(w) e^{w rho - rho} = D (A1! D=8, A2! D=6)",
                  std::move(reports), clock));
  }

  {  // 8
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    for (const DatumPtr& d : {A2, A1a}) {
      const Labels labels(static_cast<std::size_t>(d->nodes()), 1);
      const CartanMatrix& a = d->cartan();
      for (const auto& layer : enumerate_layers(*d, kRecursionMaxLength))
        for (const WeylElement& w : layer)
          for (int i = 0; i < d->nodes(); ++i)
            if (1 - a.pair(i, w.key) > 0) reports.push_back(verify_recursion(d, labels, w.word, i));
    }
    emit(conclude(8, "recursion: exact-division route = rational assembly route (l(w') <= 4, A2 and A1!)",
                  std::move(reports), clock));
  }

  {  // 9
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    reports.push_back(verify_symmetrizer_properties(A1a, {0, 1}, kSymmetrizerDepth, kSymmetrizerBuffer, run_opts));
    emit(conclude(9, "symmetrizer properties (i)-(iv) at depth D-3, D=6 (A1!, labels 0,1)", std::move(reports),
                  clock));
  }

  const std::vector<Coords> affine_nus = {Coords{1, 1}, Coords{1, 0}, Coords{2, 1}};
  {  // 10
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    GkLimitOptions o;
    o.max_doublings = kGkMaxDoublings;
    o.run = run_opts;
    o.depth = kGkFiniteMaxHeight;
    for (int k = 0; k <= kGkFiniteMaxHeight; ++k) reports.push_back(verify_gk_limit(A1, Coords{k}, o));
    for (int p = 0; p <= kGkFiniteMaxHeight; ++p)
      for (int q = 0; p + q <= kGkFiniteMaxHeight; ++q) reports.push_back(verify_gk_limit(A2, Coords{p, q}, o));
    o.depth = kAffineA1Depth;
    for (const Coords& nu : affine_nus) reports.push_back(verify_gk_limit(A1a, nu, o));
    emit(conclude(10, "Gindikin-Karpelevich limit (A1/A2 ht(nu)<=4; A1! nu in {c, a1, a1+c})", std::move(reports),
                  clock));
  }

  {  // 11
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    for (const AffineRun& run : affine) {
      VerificationReport r = plain_report("polynomiality", *run.datum, json{{"labels", run.labels}, {"depth", run.depth}});
      if (!run.lhs.stabilized) {
        r.verdict = Verdict::Unstabilized;
        r.witness = json{{"stop_reason", run.lhs.stop_reason}};
      } else if (auto bad = first_non_polynomial(run.lhs.series)) {
        r.fail(json{{"beta", coords_json(bad->first, run.datum->nodes())}, {"coeff", bad->second.to_string()}});
      }
      reports.push_back(std::move(r));
    }
    emit(conclude(11, "stabilized affine Whittaker coefficients lie in Z[v^-1]", std::move(reports), clock));
  }

  // Diagnostics: the same checks with the imaginary correction inverted, and
  // with the reflection factor derived from T_a P = v^-1 P.
  {
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    for (const AffineRun& run : affine) {
      AffineCsOptions o;
      o.depth = run.depth;
      o.run = run_opts;
      o.qs = {Rational(2), Rational(3)};
      o.correction = inverted_m(run.datum, run.depth);
      o.polynomiality = false;
      reports.push_back(verify_affine_cs(run.lhs, o));
    }
    emit(conclude(0, "criteria 3-4 with m_v replaced by 1/m_v", std::move(reports), clock), true);
  }
  {
    Stopwatch clock;
    VerificationReport r = plain_report("proportionality = 1/m_v", *A1a, json{{"labels", {0, 1}}, {"depth", kAffineA1Depth}});
    if (auto m = first_mismatch(gamma->gamma, inverted_m(A1a, kAffineA1Depth), kAffineA1Depth))
      r.fail(mismatch_json(*m, 2));
    std::vector<VerificationReport> reports;
    reports.push_back(std::move(r));
    emit(conclude(0, "criterion 6 against 1/m_v", std::move(reports), clock), true);
  }
  {
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    GkLimitOptions o;
    o.max_doublings = kGkMaxDoublings;
    o.run = run_opts;
    o.depth = kAffineA1Depth;
    o.correction = inverted_m(A1a, kAffineA1Depth);
    for (const Coords& nu : affine_nus) reports.push_back(verify_gk_limit(A1a, nu, o));
    emit(conclude(0, "criterion 10 (A1!) with m_v replaced by 1/m_v", std::move(reports), clock), true);
  }
  {
    Stopwatch clock;
    std::vector<VerificationReport> reports;
    reports.push_back(verify_symmetrizer_properties(A1a, {0, 1}, kSymmetrizerDepth, kSymmetrizerBuffer, run_opts,
                                                    WaFactor::EigenQuotient));
    emit(conclude(0, "criterion 9 with w_a P = (1 - v^-1 e^a)/(1 - v^-1 e^-a) P", std::move(reports), clock), true);
  }
  return res;
}

}  // namespace heckecs::acceptance
