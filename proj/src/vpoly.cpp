#include "heckecs/vpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heckecs {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    auto whole = [](const std::string& s) {
      if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos)
        throw std::invalid_argument("not an integer: '" + s + "'");
      return BigInt(s.front() == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(whole(text));
    BigInt num = whole(text.substr(0, slash));
    BigInt den = whole(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

VPoly VPoly::monomial(BigInt c, int degree) {
  VPoly p;
  if (c != 0) p.terms_.emplace_back(degree, std::move(c));
  return p;
}

BigInt VPoly::coefficient(int degree) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                             [](const Term& t, int d) { return t.first < d; });
  return it != terms_.end() && it->first == degree ? it->second : BigInt(0);
}

void VPoly::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

namespace {

template <typename Op>
std::vector<VPoly::Term> merge(const std::vector<VPoly::Term>& a, const std::vector<VPoly::Term>& b, Op op) {
  std::vector<VPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, op(BigInt(0), j->second));
      ++j;
    } else {
      BigInt c = op(i->second, j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

VPoly& VPoly::operator+=(const VPoly& o) {
  terms_ = merge(terms_, o.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x + y); });
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
  terms_ = merge(terms_, o.terms_, [](const BigInt& x, const BigInt& y) { return BigInt(x - y); });
  return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    std::vector<VPoly::Term> out;
    out.reserve(a.terms_.size());
    for (const auto& [d, c] : a.terms_) out.emplace_back(d + b.terms_[0].first, c * b.terms_[0].second);
    return VPoly(std::move(out));
  }
  std::map<int, BigInt> acc;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) acc[da + db] += ca * cb;
  std::vector<VPoly::Term> out;
  for (auto& [d, c] : acc)
    if (c != 0) out.emplace_back(d, std::move(c));
  return VPoly(std::move(out));
}

void VPoly::add_product(const VPoly& a, const VPoly& b) { *this += a * b; }

Rational VPoly::evaluate(const Rational& q) const {
  if (q == 0) throw std::invalid_argument("cannot evaluate at v = 0");
  Rational sum = 0;
  for (const auto& [d, c] : terms_) {
    Rational p = 1;
    const Rational base = d >= 0 ? q : Rational(1) / q;
    for (int k = 0; k < (d >= 0 ? d : -d); ++k) p *= base;
    sum += Rational(c) * p;
  }
  return sum;
}

std::string VPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (d == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += d == 1 ? std::string("v") : "v^" + std::to_string(d);
  }
  return s;
}

}  // namespace heckecs
