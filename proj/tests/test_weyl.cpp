#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckecs/weyl.hpp"
#include "oracle.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

using namespace heckecs;

namespace {

Coords C(std::initializer_list<int> xs) {
  Coords c{};
  std::copy(xs.begin(), xs.end(), c.begin());
  return c;
}

std::vector<std::size_t> layer_sizes(const char* spec, int max_length) {
  std::vector<std::size_t> out;
  for (const auto& l : enumerate_layers(*RootDatum::make(spec), max_length)) out.push_back(l.size());
  return out;
}

// Poincare polynomial coefficients prod (1 + t + ... + t^{m_i}).
std::vector<std::size_t> poincare(const std::vector<int>& exps) {
  std::vector<std::size_t> p{1};
  for (int m : exps) {
    std::vector<std::size_t> q(p.size() + static_cast<std::size_t>(m), 0);
    for (std::size_t k = 0; k < p.size(); ++k)
      for (int j = 0; j <= m; ++j) q[k + static_cast<std::size_t>(j)] += p[k];
    p = q;
  }
  return p;
}

}  // namespace

TEST_CASE("layer sizes") {
  CHECK(layer_sizes("A1", 10) == std::vector<std::size_t>{1, 1});
  CHECK(layer_sizes("A2", 10) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(layer_sizes("A1!", 5) == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
  // Affine A2: Poincare series (1 + t)(1 + t + t^2) / (1 - t)(1 - t^2) -> 1, 3, 6, 9, 12.
  CHECK(layer_sizes("A2!", 4) == std::vector<std::size_t>{1, 3, 6, 9, 12});
  for (const char* name : {"A3", "D4", "A4"}) {
    CAPTURE(name);
    CHECK(layer_sizes(name, 100) == poincare(RootDatum::make(name)->exponents()));
  }
}

TEST_CASE("reflection on Lambda - beta") {
  const auto d = RootDatum::make("A1");
  CHECK(reflect(d->cartan(), 0, {2}, C({0})) == C({2}));
  CHECK(reflect(d->cartan(), 0, {2}, C({1})) == C({1}));
  const auto a = RootDatum::make("A1!");
  // Lambda labels (0, 1): w_0 fixes e^Lambda, w_1 sends it to Lambda - a_1.
  CHECK(reflect(a->cartan(), 0, {0, 1}, C({0, 0})) == C({0, 0}));
  CHECK(reflect(a->cartan(), 1, {0, 1}, C({0, 0})) == C({0, 1}));
  for (int i = 0; i < 2; ++i)
    for (const Coords b : {C({0, 0}), C({1, 2}), C({3, 1})})
      CHECK(reflect(a->cartan(), i, {0, 1}, reflect(a->cartan(), i, {0, 1}, b)) == b);
}

TEST_CASE("words are reduced and keys agree with the words") {
  for (const char* name : {"A2", "A3", "D4", "A1!", "A2!"}) {
    CAPTURE(name);
    const auto d = RootDatum::make(name);
    std::set<Coords> keys;
    int len = 0;
    for (const auto& layer : enumerate_layers(*d, 5)) {
      for (const auto& w : layer) {
        CHECK(w.length() == len);
        CHECK(orbit_key(*d, w.word) == w.key);
        CHECK(keys.insert(w.key).second);
        if (len > 0) {
          const int s = left_descent(w);
          CHECK(s == w.word.front());
          // s w' is longer than w' iff <a_s, w' rho> > 0, i.e. (A key')_s < 1.
          std::vector<int> rest(w.word.begin() + 1, w.word.end());
          CHECK(d->cartan().pair(s, orbit_key(*d, rest)) < 1);
        }
      }
      ++len;
    }
  }
  CHECK_THROWS(left_descent(WeylElement{}));
}

TEST_CASE("finite groups agree with the orbit oracle") {
  for (const char* name : {"A2", "A3", "D4"}) {
    CAPTURE(name);
    const auto d = RootDatum::make(name);
    std::size_t total = 0, longest = 0;
    for (const auto& layer : enumerate_layers(*d, 100))
      for (const auto& w : layer) {
        ++total;
        longest = std::max(longest, w.word.size());
      }
    CHECK(total == oracle::weyl_words(d->cartan()).size());
    CHECK(longest == static_cast<std::size_t>(d->finite_positive_count()));
  }
}

TEST_CASE("act agrees with the point-evaluation oracle") {
  const auto d = RootDatum::make("A3");
  const auto& a = d->cartan();
  const oracle::Point z{Rational(2), Rational(3), Rational(5, 7)};
  const Labels lambda{1, 0, 2};
  for (const auto& layer : enumerate_layers(*d, 3))
    for (const auto& w : layer) {
      const Coords beta = act(a, w.word, lambda, C({0, 0, 0}));
      // z^{w Lambda}: reflect the point by the letters in reverse.
      oracle::Point p = z;
      for (int g : w.word) p = oracle::reflect_point(a, p, g);
      const oracle::Weight lam(lambda.begin(), lambda.end());
      CHECK(oracle::monomial(p, lam) == oracle::monomial(z, lam) * oracle::neg_coroot_at(a, z, beta));
    }
}

TEST_CASE("w acting on a series is an involution for generators") {
  const auto d = RootDatum::make("A2!");
  auto s = AnchoredSeries::exact(d, {1, 0, 2});
  s.add_term(C({0, 0, 0}), 1);
  s.add_term(C({1, 0, 1}), VPoly::v(-1));
  s.add_term(C({0, 2, 1}), VPoly(3));
  for (int i = 0; i < 3; ++i) CHECK(act_on_series({i, i}, s) == s);
  CHECK(act_on_series({0, 1, 0}, s) == act_on_series({1, 0, 1}, s));
}

TEST_CASE("layer cap") {
  CHECK_THROWS_AS(enumerate_layers(*RootDatum::make("A2!"), 6, 5), LayerCapExceeded);
}

TEST_CASE("layer cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "heckecs-test-cache";
  std::filesystem::remove_all(dir);
  const LayerCache cache(dir);
  const auto d = RootDatum::make("A2!");
  const auto fresh = enumerate_layers(*d, 4);
  CHECK(cache.layers(*d, 4) == fresh);
  REQUIRE(std::filesystem::exists(cache.path_for(*d, 4)));
  CHECK(cache.layers(*d, 4) == fresh);  // from disk

  // A corrupted header is ignored and the file rewritten.
  { std::ofstream(cache.path_for(*d, 4)) << "{\"format\":\"other\"}\n"; }
  CHECK(cache.layers(*d, 4) == fresh);
  std::ifstream in(cache.path_for(*d, 4));
  std::string header;
  std::getline(in, header);
  CHECK(header.find("heckecs-layers/1") != std::string::npos);
  std::filesystem::remove_all(dir);
}
