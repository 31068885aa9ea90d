#include "heckecs/series.hpp"

#include <algorithm>
#include <climits>

namespace heckecs {

namespace {

int min_height(const AnchoredSeries::TermMap& t) {
  int m = INT_MAX;
  for (const auto& [beta, c] : t) m = std::min(m, height(beta));
  return m;
}

}  // namespace

AnchoredSeries::AnchoredSeries(DatumPtr datum, Labels labels, std::optional<int> depth)
    : datum_(std::move(datum)), labels_(std::move(labels)), depth_(depth) {
  if (!datum_) throw SeriesError("series without root datum");
  if (static_cast<int>(labels_.size()) != datum_->nodes())
    throw SeriesError("anchor has " + std::to_string(labels_.size()) + " labels, spec " + datum_->name() +
                      " has " + std::to_string(datum_->nodes()) + " nodes");
  if (depth_ && *depth_ < 0) throw SeriesError("negative truncation depth");
}

AnchoredSeries AnchoredSeries::one(DatumPtr datum, std::optional<int> depth) {
  const auto n = static_cast<std::size_t>(datum->nodes());
  return monomial(std::move(datum), Labels(n, 0), Coords{}, 1, depth);
}

AnchoredSeries AnchoredSeries::monomial(DatumPtr datum, Labels labels, const Coords& beta, VPoly c,
                                        std::optional<int> depth) {
  AnchoredSeries s(std::move(datum), std::move(labels), depth);
  s.add_term(beta, c);
  return s;
}

AnchoredSeries AnchoredSeries::binomial(DatumPtr datum, const VPoly& u, const Coords& beta,
                                        std::optional<int> depth) {
  AnchoredSeries s = one(std::move(datum), depth);
  s.add_term(beta, u);
  return s;
}

AnchoredSeries AnchoredSeries::geometric_inverse(DatumPtr datum, const VPoly& u, const Coords& beta, int depth) {
  const int h = height(beta);
  if (h < 1) throw SeriesError("geometric_inverse needs a displacement of positive height");
  if (!is_nonnegative(beta)) throw SeriesError("geometric_inverse needs a nonnegative displacement");
  AnchoredSeries s = one(std::move(datum), depth);
  VPoly power = 1;
  Coords jb{};
  for (int j = 1; j * h <= depth; ++j) {
    power = power * u;
    for (std::size_t k = 0; k < jb.size(); ++k) jb[k] += beta[k];
    s.add_term(jb, power);
  }
  return s;
}

int AnchoredSeries::depth() const {
  if (depth_) return *depth_;
  int m = 0;
  for (const auto& [beta, c] : terms_) m = std::max(m, height(beta));
  return m;
}

void AnchoredSeries::check_beta(const Coords& beta) const {
  if (depth_ && !is_nonnegative(beta))
    throw SeriesError("truncated series cannot hold exponent above its anchor " +
                      coords_to_string(beta, datum_->nodes()));
}

void AnchoredSeries::add_term(const Coords& beta, const VPoly& c) {
  if (c.is_zero()) return;
  if (depth_ && height(beta) > *depth_) return;
  check_beta(beta);
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VPoly AnchoredSeries::coefficient(const Coords& beta) const {
  if (depth_ && height(beta) > *depth_)
    throw TruncationError("coefficient query at height " + std::to_string(height(beta)) +
                          " above truncation depth " + std::to_string(*depth_));
  auto it = terms_.find(beta);
  return it == terms_.end() ? VPoly{} : it->second;
}

AnchoredSeries AnchoredSeries::truncated_to(int depth) const {
  if (depth_ && depth > *depth_)
    throw TruncationError("cannot raise truncation depth from " + std::to_string(*depth_) + " to " +
                          std::to_string(depth));
  AnchoredSeries out(datum_, labels_, depth);
  for (const auto& [beta, c] : terms_)
    if (height(beta) <= depth) out.add_term(beta, c);
  return out;
}

AnchoredSeries AnchoredSeries::reanchored(const Coords& gamma) const {
  const CartanMatrix& a = datum_->cartan();
  Labels l = labels_;
  for (int i = 0; i < datum_->nodes(); ++i) l[static_cast<std::size_t>(i)] += a.pair(i, gamma);
  std::optional<int> d = depth_;
  if (d) *d += height(gamma);
  AnchoredSeries out(datum_, std::move(l), d);
  for (const auto& [beta, c] : terms_) {
    Coords b = beta;
    for (std::size_t k = 0; k < b.size(); ++k) b[k] += gamma[k];
    out.add_term(b, c);
  }
  return out;
}

AnchoredSeries AnchoredSeries::relabeled(Labels labels) const {
  AnchoredSeries out(datum_, std::move(labels), depth_);
  out.terms_ = terms_;
  return out;
}

void AnchoredSeries::require_compatible(const AnchoredSeries& o, const char* what) const {
  if (datum_->spec() != o.datum_->spec())
    throw SeriesError(std::string(what) + ": spec mismatch " + datum_->name() + " vs " + o.datum_->name());
}

AnchoredSeries& AnchoredSeries::operator+=(const AnchoredSeries& o) {
  require_compatible(o, "add");
  if (labels_ != o.labels_) throw SeriesError("add: anchors differ");
  if (o.depth_ && (!depth_ || *o.depth_ < *depth_)) {
    *this = truncated_to(*o.depth_);
  }
  for (const auto& [beta, c] : o.terms_) add_term(beta, c);
  return *this;
}

AnchoredSeries& AnchoredSeries::operator-=(const AnchoredSeries& o) {
  AnchoredSeries neg = o;
  neg *= VPoly(-1);
  return *this += neg;
}

AnchoredSeries& AnchoredSeries::operator*=(const VPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [beta, coeff] : terms_) coeff = coeff * c;
  return *this;
}

AnchoredSeries operator*(const AnchoredSeries& a, const AnchoredSeries& b) {
  a.require_compatible(b, "mul");
  Labels l = a.labels_;
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += b.labels_[i];

  // An exact factor reaching above its anchor lowers the depth to which the
  // other (truncated) factor determines the product.
  std::optional<int> depth;
  auto bound = [](const AnchoredSeries& exact, int other_depth) {
    const int m = exact.terms_.empty() ? 0 : min_height(exact.terms_);
    return other_depth + std::min(0, m);
  };
  if (a.depth_ && b.depth_) depth = std::min(*a.depth_, *b.depth_);
  else if (a.depth_) depth = bound(b, *a.depth_);
  else if (b.depth_) depth = bound(a, *b.depth_);
  if (depth && *depth < 0) throw SeriesError("mul: product determined to no depth");

  AnchoredSeries out(a.datum_, std::move(l), depth);
  for (const auto& [ba, ca] : a.terms_) {
    const int ha = height(ba);
    for (const auto& [bb, cb] : b.terms_) {
      if (depth && ha + height(bb) > *depth) continue;
      Coords s;
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = ba[k] + bb[k];
      out.add_term(s, ca * cb);
    }
  }
  return out;
}

bool operator==(const AnchoredSeries& a, const AnchoredSeries& b) {
  return a.datum_->spec() == b.datum_->spec() && a.labels_ == b.labels_ && a.depth_ == b.depth_ &&
         a.terms_ == b.terms_;
}

std::map<Coords, Rational> AnchoredSeries::evaluate_v(const Rational& q) const {
  if (q == 0) throw SeriesError("evaluate_v at q = 0");
  std::map<Coords, Rational> out;
  for (const auto& [beta, c] : terms_) {
    Rational r = c.evaluate(q);
    if (r != 0) out.emplace(beta, std::move(r));
  }
  return out;
}

nlohmann::ordered_json coords_json(const Coords& c, int n) {
  auto j = nlohmann::ordered_json::array();
  for (int i = 0; i < n; ++i) j.push_back(c[static_cast<std::size_t>(i)]);
  return j;
}

nlohmann::ordered_json vpoly_json(const VPoly& p) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& [d, c] : p.terms()) {
    // Coefficients beyond 64 bits are written as decimal strings.
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      j.push_back({d, c.convert_to<std::int64_t>()});
    else
      j.push_back({d, c.str()});
  }
  return j;
}

nlohmann::ordered_json AnchoredSeries::to_json() const {
  const int n = datum_->nodes();
  nlohmann::ordered_json j;
  j["spec"] = datum_->name();
  j["anchor_labels"] = labels_;
  j["depth"] = depth_ ? nlohmann::ordered_json(*depth_) : nlohmann::ordered_json(nullptr);
  j["exact"] = !depth_.has_value();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [beta, c] : terms_) {
    nlohmann::ordered_json t;
    t["beta"] = coords_json(beta, n);
    t["coeff"] = vpoly_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string AnchoredSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Coords, const VPoly*>> order;
  for (const auto& [beta, c] : terms_) order.emplace_back(beta, &c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return height(x.first) < height(y.first); });
  std::string s;
  for (const auto& [beta, c] : order) {
    if (!s.empty()) s += " + ";
    s += "(" + c->to_string() + ")";
    if (height(beta) != 0 || !is_nonnegative(beta)) s += "e^-" + coords_to_string(beta, datum_->nodes());
  }
  if (depth_) s += " + O(ht > " + std::to_string(*depth_) + ")";
  return s;
}

AnchoredSeries divide(const AnchoredSeries& numerator, const AnchoredSeries& divisor) {
  if (numerator.root_datum().spec() != divisor.root_datum().spec())
    throw SeriesError("divide: spec mismatch");
  if (divisor.coefficient(Coords{}) != VPoly(1))
    throw SeriesError("divide: divisor must have leading coefficient 1");
  for (const auto& [beta, c] : divisor.terms())
    if (!is_nonnegative(beta)) throw SeriesError("divide: divisor reaches above its anchor");

  std::optional<int> depth = numerator.depth_bound();
  if (divisor.depth_bound() && (!depth || *divisor.depth_bound() < *depth)) depth = divisor.depth_bound();
  if (!depth) throw SeriesError("divide: quotient of two exact series needs a truncation depth");

  Labels l = numerator.labels();
  for (std::size_t i = 0; i < l.size(); ++i) l[i] -= divisor.labels()[i];
  AnchoredSeries quotient(numerator.datum(), std::move(l), depth);

  // Remainder keyed by (height, beta) so the lowest height is always next.
  std::map<std::pair<int, Coords>, VPoly> rem;
  for (const auto& [beta, c] : numerator.terms())
    if (height(beta) <= *depth) rem.emplace(std::pair{height(beta), beta}, c);
  while (!rem.empty()) {
    auto node = rem.extract(rem.begin());
    const Coords& beta = node.key().second;
    const VPoly& r = node.mapped();
    quotient.add_term(beta, r);
    for (const auto& [gamma, d] : divisor.terms()) {
      if (height(gamma) == 0) continue;
      Coords s;
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = beta[k] + gamma[k];
      const int h = height(s);
      if (h > *depth) continue;
      VPoly& slot = rem[{h, s}];
      slot -= r * d;
      if (slot.is_zero()) rem.erase({h, s});
    }
  }
  return quotient;
}

namespace {

void check_depth(const AnchoredSeries& s, int depth) {
  if (!s.is_exact() && depth > s.depth())
    throw TruncationError("comparison depth " + std::to_string(depth) + " exceeds truncation depth " +
                          std::to_string(s.depth()));
}

template <typename F>
void for_each_key(const AnchoredSeries& a, const AnchoredSeries& b, int depth, F&& f) {
  if (a.root_datum().spec() != b.root_datum().spec()) throw SeriesError("compare: spec mismatch");
  if (a.labels() != b.labels()) throw SeriesError("compare: anchors differ");
  check_depth(a, depth);
  check_depth(b, depth);
  std::vector<Coords> keys;
  for (const auto& [beta, c] : a.terms()) keys.push_back(beta);
  for (const auto& [beta, c] : b.terms()) keys.push_back(beta);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const Coords& beta : keys)
    if (height(beta) <= depth && f(beta)) return;
}

VPoly lookup(const AnchoredSeries& s, const Coords& beta) {
  auto it = s.terms().find(beta);
  return it == s.terms().end() ? VPoly{} : it->second;
}

}  // namespace

std::optional<Mismatch> first_mismatch(const AnchoredSeries& a, const AnchoredSeries& b, int depth) {
  std::optional<Mismatch> out;
  for_each_key(a, b, depth, [&](const Coords& beta) {
    VPoly x = lookup(a, beta), y = lookup(b, beta);
    if (x == y) return false;
    out = Mismatch{beta, std::move(x), std::move(y)};
    return true;
  });
  return out;
}

std::optional<RationalMismatch> first_mismatch_at(const AnchoredSeries& a, const AnchoredSeries& b,
                                                   int depth, const Rational& q) {
  std::optional<RationalMismatch> out;
  for_each_key(a, b, depth, [&](const Coords& beta) {
    Rational x = lookup(a, beta).evaluate(q), y = lookup(b, beta).evaluate(q);
    if (x == y) return false;
    out = RationalMismatch{beta, std::move(x), std::move(y)};
    return true;
  });
  return out;
}

}  // namespace heckecs
