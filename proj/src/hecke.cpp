#include "heckecs/hecke.hpp"

#include <unordered_map>

namespace heckecs {

namespace {

const VPoly& v_inv() {
  static const VPoly p = VPoly::v(-1);
  return p;
}

// Numerator of T_a(e^mu) (resp. T'_a) divided by e^mu, as a polynomial in
// y = e^{-a}, where k = <a, mu>.  e^{w_a mu} = e^mu y^k.
LinePoly numerator(int k, DLKind kind) {
  LinePoly n;
  if (kind == DLKind::T) {
    // (1 - v^-1 y) y^k + (v^-1 - 1)
    n[k] += 1;
    n[k + 1] -= v_inv();
    n[0] += v_inv() - 1;
  } else {
    // (1 - v y^-1) y^k + (v - 1)
    n[k] += 1;
    n[k - 1] -= VPoly::v(1);
    n[0] += VPoly::v(1) - 1;
  }
  std::erase_if(n, [](const auto& t) { return t.second.is_zero(); });
  return n;
}

}  // namespace

LinePoly divide_one_minus_ea(const LinePoly& numerator) {
  // 1 - e^{a} = 1 - y^-1 = (y - 1) / y, so N / (1 - e^a) = y N / (y - 1).
  LinePoly out;
  if (numerator.empty()) return out;
  const int lo = numerator.begin()->first + 1;
  const int hi = numerator.rbegin()->first + 1;
  // Synthetic division of sum_j p_j y^j (j = lo..hi) by (y - 1).
  VPoly carry;
  for (int j = hi; j > lo; --j) {
    auto it = numerator.find(j - 1);
    if (it != numerator.end()) carry += it->second;
    if (!carry.is_zero()) out[j - 1] = carry;
  }
  auto it = numerator.find(lo - 1);
  VPoly remainder = carry;
  if (it != numerator.end()) remainder += it->second;
  if (!remainder.is_zero())
    throw DivisionRemainder("division by (1 - e^a) left remainder " + remainder.to_string());
  return out;
}

AnchoredSeries apply_T(int i, const AnchoredSeries& s, DLKind kind) {
  if (!s.is_exact()) throw SeriesError("apply_T needs an exact (finite) series");
  const RootDatum& datum = s.root_datum();
  if (i < 0 || i >= datum.nodes()) throw std::out_of_range("generator index out of range");
  const CartanMatrix& a = datum.cartan();
  const int li = s.labels()[static_cast<std::size_t>(i)];

  std::unordered_map<int, LinePoly> quotients;  // per pairing k
  AnchoredSeries out = AnchoredSeries::exact(s.datum(), s.labels());
  for (const auto& [beta, c] : s.terms()) {
    const int k = li - a.pair(i, beta);
    auto q = quotients.find(k);
    if (q == quotients.end()) q = quotients.emplace(k, divide_one_minus_ea(numerator(k, kind))).first;
    for (const auto& [j, qc] : q->second) {
      Coords b = beta;
      b[static_cast<std::size_t>(i)] += j;
      out.add_term(b, c * qc);
    }
  }
  return out;
}

AnchoredSeries apply_T_word(const std::vector<int>& word, const AnchoredSeries& s, DLKind kind) {
  AnchoredSeries out = s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_T(*it, out, kind);
  return out;
}

bool check_quadratic(int i, const AnchoredSeries& s, DLKind kind) {
  const AnchoredSeries t1 = apply_T(i, s, kind);
  const AnchoredSeries t2 = apply_T(i, t1, kind);
  const VPoly q = kind == DLKind::T ? v_inv() : VPoly::v(1);
  AnchoredSeries rhs = t1 * (q - 1);
  rhs += s * q;
  return t2 == rhs;
}

bool check_braid(int i, int j, const AnchoredSeries& s, DLKind kind) {
  const int aij = s.root_datum().cartan()(i, j);
  if (i == j) return true;
  if (aij == 0) return apply_T_word({i, j}, s, kind) == apply_T_word({j, i}, s, kind);
  if (aij == -1) return apply_T_word({i, j, i}, s, kind) == apply_T_word({j, i, j}, s, kind);
  return true;
}

bool check_conjugation(int i, const AnchoredSeries& s) {
  Labels shifted = s.labels();
  for (int& x : shifted) x += 1;
  const AnchoredSeries lhs = apply_T(i, s.relabeled(shifted), DLKind::Tprime).relabeled(s.labels());
  const AnchoredSeries rhs = apply_T(i, s, DLKind::T) * (-VPoly::v(1));
  return lhs == rhs;
}

AnchoredSeries anchor_monomial(const DatumPtr& datum, const Labels& labels) {
  return AnchoredSeries::monomial(datum, labels, Coords{}, 1);
}

namespace {

// Shared driver: walks the BFS tree carrying T_w(input) for the current
// layer only.  `on_layer` receives the exact contribution of each layer and
// returns false to stop.
template <typename OnLayer>
void walk_symmetrizer(const AnchoredSeries& input, const SymmetrizerLimits& limits, SymmetrizerResult& res,
                      OnLayer&& on_layer) {
  if (!input.is_exact()) throw SeriesError("symmetrizer needs an exact input series");
  const RootDatum& datum = input.root_datum();
  Layer layer = identity_layer(datum);
  std::vector<AnchoredSeries> values{input};
  if (!on_layer(0, input)) return;
  for (int len = 1;; ++len) {
    if (len > limits.max_length) {
      res.stop_reason = "length cap " + std::to_string(limits.max_length) + " reached";
      return;
    }
    Layer next;
    try {
      next = next_layer(datum, layer, limits.layer_cap);
    } catch (const LayerCapExceeded& e) {
      res.stop_reason = e.what();
      return;
    }
    if (next.empty()) {
      res.stabilized = true;  // finite group exhausted
      return;
    }
    std::vector<AnchoredSeries> next_values;
    next_values.reserve(next.size());
    AnchoredSeries delta = AnchoredSeries::exact(input.datum(), input.labels());
    for (std::size_t k = 0; k < next.size(); ++k) {
      next_values.push_back(apply_T(next.gen[k], values[next.parent[k]]));
      delta += next_values.back();
    }
    layer = std::move(next);
    values = std::move(next_values);
    if (!on_layer(len, delta)) return;
  }
}

}  // namespace

SymmetrizerResult symmetrizer_partial(const AnchoredSeries& input, int max_length, const SymmetrizerLimits& limits) {
  if (max_length < 0) throw std::invalid_argument("max_length must be nonnegative");
  SymmetrizerResult res;
  res.sum = AnchoredSeries::exact(input.datum(), input.labels());
  SymmetrizerLimits lim = limits;
  lim.max_length = max_length;
  walk_symmetrizer(input, lim, res, [&](int len, const AnchoredSeries& delta) {
    res.sum += delta;
    res.layer_deltas.push_back(delta);
    res.achieved_length = len;
    return true;
  });
  res.stop_reason.clear();
  return res;
}

SymmetrizerResult symmetrizer_stabilized(const AnchoredSeries& input, int depth, int margin,
                                         const SymmetrizerLimits& limits) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (margin < 1) throw std::invalid_argument("margin must be at least 1");
  SymmetrizerResult res;
  res.sum = AnchoredSeries::truncated(input.datum(), input.labels(), depth);
  int quiet = 0;
  walk_symmetrizer(input, limits, res, [&](int len, const AnchoredSeries& delta) {
    AnchoredSeries d = delta.truncated_to(depth);
    res.achieved_length = len;
    quiet = d.is_zero() ? quiet + 1 : 0;
    res.sum += d;
    res.layer_deltas.push_back(std::move(d));
    if (len > 0 && quiet >= margin) {
      res.stabilized = true;
      return false;
    }
    return true;
  });
  return res;
}

}  // namespace heckecs
