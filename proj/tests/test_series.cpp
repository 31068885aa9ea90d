#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckecs/series.hpp"

#include <random>

using namespace heckecs;

namespace {

Coords C(std::initializer_list<int> xs) {
  Coords c{};
  std::copy(xs.begin(), xs.end(), c.begin());
  return c;
}

const VPoly vinv = VPoly::v(-1);

// Schoolbook product on a plain map, the oracle for VPoly multiplication.
std::map<int, long long> naive_product(const std::map<int, long long>& a, const std::map<int, long long>& b) {
  std::map<int, long long> out;
  for (auto [da, ca] : a)
    for (auto [db, cb] : b) out[da + db] += ca * cb;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

VPoly from_map(const std::map<int, long long>& m) {
  VPoly p;
  for (auto [d, c] : m) p += VPoly::monomial(c, d);
  return p;
}

}  // namespace

TEST_CASE("VPoly basics") {
  CHECK(VPoly().is_zero());
  CHECK(VPoly(0).is_zero());
  CHECK((VPoly(1) - vinv).to_string() == "1 - v^-1");
  CHECK((vinv - VPoly(1)).to_string() == "-1 + v^-1");
  CHECK((VPoly::v(1) - VPoly::v(1)).is_zero());
  CHECK((VPoly(1) - vinv).in_z_vinv());
  CHECK(!VPoly::v(1).in_z_vinv());
  CHECK(vinv.evaluate(3) == Rational(1, 3));
  CHECK((VPoly(1) - vinv).evaluate(2) == Rational(1, 2));
  CHECK((VPoly::monomial(3, -2) * VPoly::monomial(-2, 5)) == VPoly::monomial(-6, 3));
}

TEST_CASE("VPoly multiplication against a schoolbook oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(-4, 4), coef(-5, 5), len(0, 5);
  for (int t = 0; t < 200; ++t) {
    std::map<int, long long> a, b;
    for (int k = len(rng); k > 0; --k) a[deg(rng)] += coef(rng);
    for (int k = len(rng); k > 0; --k) b[deg(rng)] += coef(rng);
    std::erase_if(a, [](const auto& x) { return x.second == 0; });
    std::erase_if(b, [](const auto& x) { return x.second == 0; });
    CHECK(from_map(a) * from_map(b) == from_map(naive_product(a, b)));
  }
}

TEST_CASE("VPoly coefficients beyond 64 bits stay exact") {
  VPoly p = VPoly::monomial(BigInt(1) << 40, 0);
  const VPoly q = p * p * p;
  CHECK(q.coefficient(0) == (BigInt(1) << 120));
}

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("0.5"));
}

TEST_CASE("series products: A1 example") {
  auto d = RootDatum::make("A1");
  const auto p = AnchoredSeries::binomial(d, -vinv, C({1}), 4) * AnchoredSeries::binomial(d, 1, C({1}), 4);
  CHECK(p.coefficient(C({0})) == VPoly(1));
  CHECK(p.coefficient(C({1})) == VPoly(1) - vinv);
  CHECK(p.coefficient(C({2})) == -vinv);
  CHECK(p.coefficient(C({3})).is_zero());
  CHECK_THROWS_AS(p.coefficient(C({5})), TruncationError);

  const auto at2 = p.evaluate_v(2);
  CHECK(at2.at(C({0})) == 1);
  CHECK(at2.at(C({1})) == Rational(1, 2));
  CHECK(at2.at(C({2})) == Rational(-1, 2));
}

TEST_CASE("geometric inverse") {
  auto d = RootDatum::make("A1");
  const auto g = AnchoredSeries::geometric_inverse(d, 1, C({1}), 2);
  CHECK(g.size() == 3);
  for (int j = 0; j <= 2; ++j) CHECK(g.coefficient(C({j})) == VPoly(1));

  auto a = RootDatum::make("A1!");
  const auto h = AnchoredSeries::geometric_inverse(a, vinv, C({1, 1}), 5);
  CHECK(h.size() == 3);
  CHECK(h.coefficient(C({1, 1})) == vinv);
  CHECK(h.coefficient(C({2, 2})) == VPoly::v(-2));

  for (int depth = 0; depth <= 7; ++depth) {
    const auto one = AnchoredSeries::binomial(a, -vinv, C({1, 1}), depth) *
                     AnchoredSeries::geometric_inverse(a, vinv, C({1, 1}), depth);
    CHECK(one == AnchoredSeries::one(a, depth));
    const auto tele = AnchoredSeries::binomial(a, -1, C({1, 0}), depth) *
                      AnchoredSeries::geometric_inverse(a, 1, C({1, 0}), depth);
    CHECK(tele == AnchoredSeries::one(a, depth));
  }
}

TEST_CASE("anchors add under multiplication; identity element") {
  auto d = RootDatum::make("A2");
  const auto e = AnchoredSeries::monomial(d, {1, 2}, C({0, 0}), 1, 3);
  const auto prod = e * AnchoredSeries::one(d, 3);
  CHECK(prod.labels() == Labels{1, 2});
  CHECK(prod.coefficient(C({0, 0})) == VPoly(1));
  const auto twice = e * e;
  CHECK(twice.labels() == Labels{2, 4});
}

TEST_CASE("truncated series reject exponents above the anchor") {
  auto d = RootDatum::make("A1");
  auto s = AnchoredSeries::truncated(d, {0}, 3);
  CHECK_THROWS_AS(s.add_term(C({-1}), 1), SeriesError);
  auto x = AnchoredSeries::exact(d, {0});
  x.add_term(C({-1}), 1);
  CHECK(x.coefficient(C({-1})) == VPoly(1));
}

TEST_CASE("ring axioms on random truncated series") {
  auto d = RootDatum::make("A2!");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(0, 3), k(-2, 2), deg(-2, 1);
  const auto random_series = [&](int depth) {
    auto s = AnchoredSeries::truncated(d, {0, 0, 0}, depth);
    for (int t = 0; t < 8; ++t) s.add_term(C({c(rng), c(rng), c(rng)}), VPoly::monomial(k(rng), deg(rng)));
    return s;
  };
  for (int t = 0; t < 20; ++t) {
    const auto a = random_series(5), b = random_series(5), e = random_series(5);
    CHECK(a * b == b * a);
    CHECK((a * b) * e == a * (b * e));
    CHECK(a * (b + e) == a * b + a * e);
    CHECK(a - a == AnchoredSeries::truncated(d, {0, 0, 0}, 5));
  }
}

TEST_CASE("truncation contract: lower-depth product agrees with the truncated high-depth one") {
  auto d = RootDatum::make("A1!");
  const auto x = AnchoredSeries::geometric_inverse(d, vinv, C({1, 0}), 8) *
                 AnchoredSeries::binomial(d, -vinv, C({0, 1}), 8);
  const auto y = AnchoredSeries::geometric_inverse(d, vinv, C({1, 0}), 4) *
                 AnchoredSeries::binomial(d, -vinv, C({0, 1}), 4);
  CHECK(x.truncated_to(4) == y);
  // Mixed depths: the result keeps the smaller one.
  CHECK((x * y).depth() == 4);
}

TEST_CASE("division recovers the factor") {
  auto d = RootDatum::make("A2!");
  auto a = AnchoredSeries::binomial(d, -vinv, C({1, 0, 0}), 6) * AnchoredSeries::binomial(d, 3, C({1, 1, 1}), 6);
  auto b = AnchoredSeries::geometric_inverse(d, VPoly::v(-2), C({0, 1, 1}), 6);
  CHECK(divide(a * b, b) == a);
  CHECK_THROWS_AS(divide(a, AnchoredSeries::binomial(d, 1, C({0, 0, 0}), 6) * VPoly(2)), SeriesError);
}

TEST_CASE("reanchoring keeps the element") {
  auto d = RootDatum::make("A1");
  auto s = AnchoredSeries::exact(d, {2});
  s.add_term(C({0}), 1);
  s.add_term(C({1}), vinv);
  const auto r = s.reanchored(C({1}));
  CHECK(r.labels() == Labels{4});
  CHECK(r.coefficient(C({1})) == VPoly(1));
  CHECK(r.coefficient(C({2})) == vinv);
}

TEST_CASE("JSON is deterministic and ordered") {
  auto d = RootDatum::make("A1!");
  auto s = AnchoredSeries::truncated(d, {0, 1}, 2);
  s.add_term(C({1, 1}), vinv);
  s.add_term(C({0, 0}), 1);
  s.add_term(C({0, 1}), VPoly(1) - vinv);
  const auto j = s.to_json();
  CHECK(j.dump() ==
        R"({"spec":"A1!","anchor_labels":[0,1],"depth":2,"exact":false,"terms":[{"beta":[0,0],"coeff":[[0,1]]},{"beta":[0,1],"coeff":[[-1,-1],[0,1]]},{"beta":[1,1],"coeff":[[-1,1]]}]})");
  auto big = AnchoredSeries::exact(d, {0, 0});
  big.add_term(C({0, 0}), VPoly::monomial(BigInt(1) << 70, 0));
  CHECK(big.to_json()["terms"][0]["coeff"][0][1] == "1180591620717411303424");
}

TEST_CASE("mismatch reporting") {
  auto d = RootDatum::make("A1");
  auto a = AnchoredSeries::truncated(d, {0}, 3), b = AnchoredSeries::truncated(d, {0}, 3);
  a.add_term(C({2}), 1);
  b.add_term(C({2}), 2);
  const auto m = first_mismatch(a, b, 3);
  REQUIRE(m);
  CHECK(m->beta == C({2}));
  CHECK(!first_mismatch(a, b, 1));
  CHECK_THROWS_AS(first_mismatch(a, b, 4), TruncationError);
  CHECK(first_mismatch_at(a, b, 3, 5)->rhs == 2);
}
