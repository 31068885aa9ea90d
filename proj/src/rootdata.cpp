#include "heckecs/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <deque>
#include <set>

namespace heckecs {

int height(const Coords& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

Coords unit(int i) {
  Coords c{};
  c[static_cast<std::size_t>(i)] = 1;
  return c;
}

bool is_nonnegative(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

std::string coords_to_string(const Coords& c, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += std::to_string(c[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- spec

void RootSystemSpec::validate() const {
  switch (family) {
    case Family::A:
      if (rank < 1) throw SpecError("type A needs rank >= 1");
      break;
    case Family::D:
      if (rank < 3) throw SpecError("type D needs rank >= 3");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw SpecError("type E needs rank 6, 7 or 8");
      break;
  }
  if (nodes() > kMaxNodes) throw SpecError("rank too large");
}

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
  if (text.size() < 2) throw SpecError("bad spec string '" + std::string(text) + "'");
  RootSystemSpec s;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': s.family = Family::A; break;
    case 'D': s.family = Family::D; break;
    case 'E': s.family = Family::E; break;
    default: throw SpecError("unknown family in '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(1);
  if (!rest.empty() && rest.back() == '!') {
    s.affine = true;
    rest.remove_suffix(1);
  }
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), s.rank);
  if (ec != std::errc{} || ptr != rest.data() + rest.size())
    throw SpecError("bad rank in '" + std::string(text) + "'");
  s.validate();
  if (s.family == Family::D && s.rank == 3) s.family = Family::A;
  return s;
}

std::string RootSystemSpec::to_string() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return f + std::to_string(rank) + (affine ? "!" : "");
}

// ---------------------------------------------------------------- cartan

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return r;
}

namespace {

// Bourbaki numbering, 0-based here.
CartanMatrix finite_cartan(const RootSystemSpec& spec) {
  const int n = spec.rank;
  CartanMatrix a(n);
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  return a;
}

// All positive roots of a finite system, closed under simple reflections.
std::vector<Coords> finite_positive_roots(const CartanMatrix& a) {
  const int n = a.size();
  std::vector<Coords> roots;
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < n; ++i) {
    roots.push_back(unit(i));
    seen.insert(unit(i));
    queue.push_back(unit(i));
  }
  while (!queue.empty()) {
    Coords r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Coords s = r;
      s[static_cast<std::size_t>(i)] -= a.pair(i, r);
      if (is_nonnegative(s) && seen.insert(s).second) {
        roots.push_back(s);
        queue.push_back(s);
      }
    }
  }
  return roots;
}

}  // namespace

Coords highest_root(const RootSystemSpec& spec) {
  if (spec.affine) throw SpecError("highest_root needs a finite spec");
  const auto roots = finite_positive_roots(finite_cartan(spec));
  return *std::max_element(roots.begin(), roots.end(), [](const Coords& x, const Coords& y) {
    return height(x) < height(y);
  });
}

CartanMatrix build_cartan(const RootSystemSpec& spec) {
  spec.validate();
  CartanMatrix fin = finite_cartan(spec.finite_part());
  if (!spec.affine) return fin;
  const int l = spec.rank;
  const Coords theta = highest_root(spec.finite_part());
  CartanMatrix a(l + 1);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) a(i, j) = fin(i, j);
  // a_{l+1} = delta - theta, so <a_{l+1}, a_j^vee> = -<theta, a_j^vee>.
  for (int j = 0; j < l; ++j) {
    const int p = -fin.pair(j, theta);
    a(l, j) = p;
    a(j, l) = p;
  }
  a(l, l) = 2;
  return a;
}

int coxeter_height_of_c(const RootSystemSpec& spec) {
  if (!spec.affine) throw SpecError("coxeter_height_of_c needs an affine spec");
  return 1 + height(highest_root(spec.finite_part()));
}

std::vector<Coroot> positive_coroots_up_to(const RootSystemSpec& spec, int depth) {
  const CartanMatrix a = build_cartan(spec);
  const int n = a.size();
  std::vector<Coroot> out;
  if (depth < 1) return out;

  // A positive real root of height > 1 has a simple reflection lowering its
  // height, so growing from the simple roots inside the height bound reaches
  // every real root of height <= depth.
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < n; ++i) {
    seen.insert(unit(i));
    queue.push_back(unit(i));
  }
  while (!queue.empty()) {
    Coords r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Coords s = r;
      s[static_cast<std::size_t>(i)] -= a.pair(i, r);
      if (is_nonnegative(s) && height(s) <= depth && seen.insert(s).second) queue.push_back(s);
    }
  }
  for (const Coords& r : seen) out.push_back({r, RootKind::Real, 1});

  if (spec.affine) {
    Coords c{};
    const Coords theta = highest_root(spec.finite_part());
    for (int i = 0; i < spec.rank; ++i) c[static_cast<std::size_t>(i)] = theta[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(spec.rank)] = 1;
    for (int j = 1; j * height(c) <= depth; ++j) {
      Coords jc{};
      for (int i = 0; i < n; ++i) jc[static_cast<std::size_t>(i)] = j * c[static_cast<std::size_t>(i)];
      out.push_back({jc, RootKind::Imaginary, spec.rank});
    }
  }
  std::sort(out.begin(), out.end(), [](const Coroot& x, const Coroot& y) {
    const int hx = height(x.coords), hy = height(y.coords);
    return hx != hy ? hx < hy : x.coords < y.coords;
  });
  return out;
}

std::vector<int> exponents(const RootSystemSpec& spec) {
  const auto roots = finite_positive_roots(finite_cartan(spec.finite_part()));
  std::vector<int> histogram;
  for (const Coords& r : roots) {
    const auto h = static_cast<std::size_t>(height(r));
    if (histogram.size() < h) histogram.resize(h, 0);
    ++histogram[h - 1];
  }
  // The histogram is a partition; its conjugate is the exponent multiset.
  std::vector<int> exps;
  const int parts = histogram.empty() ? 0 : histogram.front();
  for (int j = 1; j <= parts; ++j)
    exps.push_back(static_cast<int>(std::count_if(histogram.begin(), histogram.end(),
                                                  [j](int x) { return x >= j; })));
  std::sort(exps.begin(), exps.end());
  return exps;
}

// ---------------------------------------------------------------- datum

RootDatum::RootDatum(const RootSystemSpec& spec)
    : spec_(spec), cartan_(build_cartan(spec)), exponents_(heckecs::exponents(spec)) {
  finite_positive_count_ = static_cast<int>(finite_positive_roots(finite_cartan(spec.finite_part())).size());
  if (spec.affine) {
    const Coords theta = highest_root(spec.finite_part());
    for (int i = 0; i < spec.rank; ++i) c_[static_cast<std::size_t>(i)] = theta[static_cast<std::size_t>(i)];
    c_[static_cast<std::size_t>(spec.rank)] = 1;
  }
}

const Coords& RootDatum::imaginary() const {
  if (!spec_.affine) throw SpecError("finite root systems have no imaginary coroot");
  return c_;
}

std::string RootDatum::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (char ch : spec_.to_string()) mix(static_cast<unsigned char>(ch));
  for (int i = 0; i < nodes(); ++i)
    for (int j = 0; j < nodes(); ++j) mix(static_cast<std::uint64_t>(cartan_(i, j) + 16));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace heckecs
