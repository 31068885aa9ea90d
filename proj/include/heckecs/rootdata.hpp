#pragma once

// Simply-laced root data: finite types A, D, E and their untwisted
// affinizations.  Everything is expressed in simple-coroot coordinates;
// pairings go through the Cartan matrix A[i][j] = <a_i, a_j^vee>.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heckecs {

/// Largest number of Dynkin nodes we ever need (affine E8).
inline constexpr int kMaxNodes = 9;

/// Integer vector over the simple coroots.  Unused trailing slots are zero,
/// so the built-in lexicographic order agrees with the order over the first
/// `rank` entries.
using Coords = std::array<int, kMaxNodes>;

/// Anchor labels <a_i, Lambda^vee>, one per node.
using Labels = std::vector<int>;

int height(const Coords& c);
Coords unit(int i);
bool is_nonnegative(const Coords& c);
std::string coords_to_string(const Coords& c, int n);

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : c) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { A, D, E };

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;  // rank of the underlying finite system
  bool affine = false;

  /// Parses "A1", "D4", "E8!" ("!" = untwisted affine).  D3 is returned as A3.
  static RootSystemSpec parse(std::string_view text);
  std::string to_string() const;
  int nodes() const { return affine ? rank + 1 : rank; }
  RootSystemSpec finite_part() const { return {family, rank, false}; }
  void validate() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}

  int size() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  /// (A beta)_i = <a_i, beta^vee>.
  int pair(int i, const Coords& beta) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * beta[j];
    return s;
  }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

enum class RootKind { Real, Imaginary };

struct Coroot {
  Coords coords{};
  RootKind kind = RootKind::Real;
  int multiplicity = 1;
};

CartanMatrix build_cartan(const RootSystemSpec& spec);

/// Highest root theta of a finite system (coordinates of theta^vee).
Coords highest_root(const RootSystemSpec& spec);

/// All positive coroots of height <= depth, sorted by (height, coords).
std::vector<Coroot> positive_coroots_up_to(const RootSystemSpec& spec, int depth);

/// Exponents read off the height histogram of positive roots.
std::vector<int> exponents(const RootSystemSpec& spec);

/// ht(c) for an affine spec.
int coxeter_height_of_c(const RootSystemSpec& spec);

/// Immutable bundle of everything derived from a spec.
class RootDatum {
 public:
  explicit RootDatum(const RootSystemSpec& spec);
  static std::shared_ptr<const RootDatum> make(std::string_view text) {
    return std::make_shared<const RootDatum>(RootSystemSpec::parse(text));
  }

  const RootSystemSpec& spec() const { return spec_; }
  std::string name() const { return spec_.to_string(); }
  int nodes() const { return cartan_.size(); }
  bool affine() const { return spec_.affine; }
  const CartanMatrix& cartan() const { return cartan_; }
  const std::vector<int>& exponents() const { return exponents_; }
  /// Minimal imaginary coroot c (affine only).
  const Coords& imaginary() const;
  /// Number of finite positive roots.
  int finite_positive_count() const { return finite_positive_count_; }
  /// Stable 64-bit digest of the spec string and Cartan matrix.
  std::string hash() const;

  std::vector<Coroot> positive_coroots_up_to(int depth) const {
    return heckecs::positive_coroots_up_to(spec_, depth);
  }

 private:
  RootSystemSpec spec_;
  CartanMatrix cartan_;
  std::vector<int> exponents_;
  Coords c_{};
  int finite_positive_count_ = 0;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace heckecs
