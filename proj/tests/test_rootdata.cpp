#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckecs/rootdata.hpp"
#include "heckecs/weyl.hpp"
#include "oracle.hpp"

#include <algorithm>

using namespace heckecs;

namespace {

std::vector<Coords> coords_of(const std::vector<Coroot>& roots) {
  std::vector<Coords> out;
  for (const auto& r : roots) out.push_back(r.coords);
  return out;
}

Coords C(std::initializer_list<int> xs) {
  Coords c{};
  std::copy(xs.begin(), xs.end(), c.begin());
  return c;
}

}  // namespace

TEST_CASE("spec parsing") {
  CHECK(RootSystemSpec::parse("A1").to_string() == "A1");
  CHECK(RootSystemSpec::parse("A2!").affine);
  CHECK(RootSystemSpec::parse("A2!").nodes() == 3);
  CHECK(RootSystemSpec::parse("D3").to_string() == "A3");
  CHECK(RootSystemSpec::parse("E8!").nodes() == 9);
  CHECK_THROWS_AS(RootSystemSpec::parse("D2"), SpecError);
  CHECK_THROWS_AS(RootSystemSpec::parse("E5"), SpecError);
  CHECK_THROWS_AS(RootSystemSpec::parse("B3"), SpecError);
  CHECK_THROWS_AS(RootSystemSpec::parse("A0"), SpecError);
  CHECK_THROWS_AS(RootSystemSpec::parse(""), SpecError);
}

TEST_CASE("Cartan matrices") {
  CHECK(build_cartan(RootSystemSpec::parse("A1")).rows() == std::vector<std::vector<int>>{{2}});
  CHECK(build_cartan(RootSystemSpec::parse("A1!")).rows() == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  CHECK(build_cartan(RootSystemSpec::parse("A2")).rows() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  for (const char* name : {"A3", "D4", "D5", "E6", "E7", "E8", "A3!", "D4!", "E6!"}) {
    CAPTURE(name);
    const RootDatum d(RootSystemSpec::parse(name));
    const CartanMatrix& a = d.cartan();
    for (int i = 0; i < d.nodes(); ++i) {
      CHECK(a(i, i) == 2);
      for (int j = 0; j < d.nodes(); ++j) {
        CHECK(a(i, j) == a(j, i));
        if (i != j) CHECK((a(i, j) == 0 || a(i, j) == -1));
      }
    }
    // The imaginary coroot spans the kernel.
    if (d.affine())
      for (int i = 0; i < d.nodes(); ++i) CHECK(a.pair(i, d.imaginary()) == 0);
  }
}

TEST_CASE("highest roots") {
  CHECK(highest_root(RootSystemSpec::parse("A1")) == C({1}));
  CHECK(highest_root(RootSystemSpec::parse("A2")) == C({1, 1}));
  CHECK(highest_root(RootSystemSpec::parse("D4")) == C({1, 2, 1, 1}));
}

TEST_CASE("positive coroots: finite systems against a reflection-closure oracle") {
  const std::vector<std::pair<const char*, std::size_t>> counts = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [name, n] : counts) {
    CAPTURE(name);
    const RootDatum d(RootSystemSpec::parse(name));
    auto lib = coords_of(d.positive_coroots_up_to(1000));
    auto ref = oracle::positive_coroots(d.cartan());
    std::sort(lib.begin(), lib.end());
    CHECK(lib.size() == n);
    CHECK(lib == ref);
    CHECK(d.finite_positive_count() == static_cast<int>(n));
  }
  CHECK(coords_of(RootDatum(RootSystemSpec::parse("A1")).positive_coroots_up_to(1)) == std::vector<Coords>{C({1})});
  CHECK(coords_of(RootDatum(RootSystemSpec::parse("A2")).positive_coroots_up_to(2)) ==
        std::vector<Coords>{C({0, 1}), C({1, 0}), C({1, 1})});
}

TEST_CASE("positive coroots: affine A1 to depth 2") {
  const RootDatum d(RootSystemSpec::parse("A1!"));
  const auto roots = d.positive_coroots_up_to(2);
  REQUIRE(roots.size() == 3);
  CHECK(roots[2].coords == C({1, 1}));
  CHECK(roots[2].kind == RootKind::Imaginary);
  CHECK(roots[2].multiplicity == 1);
  for (int k = 0; k < 2; ++k) CHECK(roots[static_cast<std::size_t>(k)].kind == RootKind::Real);
}

TEST_CASE("affine real coroots are the alpha + n c with alpha finite") {
  // Oracle: alpha + n c for finite roots alpha of either sign, n >= 0 (n >= 1 for negative alpha).
  for (const char* name : {"A1!", "A2!", "D4!"}) {
    CAPTURE(name);
    const RootDatum d(RootSystemSpec::parse(name));
    const RootDatum fin(d.spec().finite_part());
    const int depth = 3 * height(d.imaginary());
    std::vector<Coords> expect;
    for (const Coords& a : oracle::positive_coroots(fin.cartan()))
      for (int sign : {1, -1})
        for (int n = sign > 0 ? 0 : 1; n * height(d.imaginary()) <= depth + height(a); ++n) {
          Coords b{};
          for (int k = 0; k < d.nodes(); ++k) b[static_cast<std::size_t>(k)] = n * d.imaginary()[static_cast<std::size_t>(k)];
          for (int k = 0; k < fin.nodes(); ++k) b[static_cast<std::size_t>(k)] += sign * a[static_cast<std::size_t>(k)];
          if (height(b) > 0 && height(b) <= depth) expect.push_back(b);
        }
    std::vector<Coords> real;
    for (const auto& r : d.positive_coroots_up_to(depth))
      if (r.kind == RootKind::Real) real.push_back(r.coords);
      else CHECK(r.multiplicity == d.spec().rank);
    std::sort(real.begin(), real.end());
    std::sort(expect.begin(), expect.end());
    CHECK(real == expect);
  }
}

TEST_CASE("exponents") {
  CHECK(RootDatum(RootSystemSpec::parse("A1")).exponents() == std::vector<int>{1});
  CHECK(RootDatum(RootSystemSpec::parse("A2")).exponents() == std::vector<int>{1, 2});
  CHECK(RootDatum(RootSystemSpec::parse("D4")).exponents() == std::vector<int>{1, 3, 3, 5});
  CHECK(RootDatum(RootSystemSpec::parse("E6")).exponents() == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(RootDatum(RootSystemSpec::parse("E8")).exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  // Affine specs use the exponents of the finite part.
  CHECK(RootDatum(RootSystemSpec::parse("A2!")).exponents() == std::vector<int>{1, 2});
}

TEST_CASE("sum of exponents and |W| = prod (m_i + 1)") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4", "D5"}) {
    CAPTURE(name);
    const RootDatum d(RootSystemSpec::parse(name));
    int sum = 0;
    std::size_t order = 1;
    for (int m : d.exponents()) {
      sum += m;
      order *= static_cast<std::size_t>(m + 1);
    }
    CHECK(sum == d.finite_positive_count());
    std::size_t bfs = 0;
    for (const auto& layer : enumerate_layers(d, 1000)) bfs += layer.size();
    CHECK(bfs == order);
    CHECK(oracle::weyl_words(d.cartan()).size() == order);
  }
}

TEST_CASE("height of c") {
  CHECK(coxeter_height_of_c(RootSystemSpec::parse("A1!")) == 2);
  CHECK(coxeter_height_of_c(RootSystemSpec::parse("A2!")) == 3);
  CHECK(coxeter_height_of_c(RootSystemSpec::parse("D4!")) == 6);
  CHECK(coxeter_height_of_c(RootSystemSpec::parse("E8!")) == 30);
}

TEST_CASE("spec hash is stable and distinguishes specs") {
  const RootDatum a(RootSystemSpec::parse("A2!")), b(RootSystemSpec::parse("A2!")), c(RootSystemSpec::parse("A2"));
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != c.hash());
  CHECK(a.hash().size() == 16);
}
