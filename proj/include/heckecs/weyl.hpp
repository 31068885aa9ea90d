#pragma once

// Weyl group elements as reduced words, enumerated layer by layer.
//
// An element w is identified by its orbit key rho^vee - w(rho^vee) in
// simple-coroot coordinates; rho^vee is regular, so the key is faithful.
// Words are read left to right as products w = w_{i1} w_{i2} ... w_{ik}
// and generator indices are 0-based in code, 1-based in any text or JSON.

#include "heckecs/rootdata.hpp"
#include "heckecs/series.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace heckecs {

struct WeylElement {
  std::vector<int> word;  // reduced
  Coords key{};           // rho^vee - w(rho^vee)

  int length() const { return static_cast<int>(word.size()); }
  int sign() const { return word.size() % 2 ? -1 : 1; }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

class LayerCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple reflection on Lambda - beta:  beta + (label_i - (A beta)_i) e_i.
inline Coords reflect(const CartanMatrix& a, int i, const Labels& labels, Coords beta) {
  beta[static_cast<std::size_t>(i)] += labels[static_cast<std::size_t>(i)] - a.pair(i, beta);
  return beta;
}

/// Applies w = w_{i1} ... w_{ik} to Lambda - beta (rightmost letter first).
Coords act(const CartanMatrix& a, const std::vector<int>& word, const Labels& labels, Coords beta);

/// One BFS layer plus provenance: element k was obtained as
/// gen[k] * (previous layer)[parent[k]], with length one larger.
struct Layer {
  std::vector<WeylElement> elements;
  std::vector<std::size_t> parent;
  std::vector<int> gen;
  bool empty() const { return elements.empty(); }
  std::size_t size() const { return elements.size(); }
};

Layer identity_layer(const RootDatum& datum);

/// All w_i * w' of length l(w') + 1, deduplicated by key, in a deterministic
/// order (parents in order, then generators in order; first hit wins).
Layer next_layer(const RootDatum& datum, const Layer& layer, std::size_t layer_cap);

/// Layers 0..max_length (fewer if the group is exhausted).
std::vector<std::vector<WeylElement>> enumerate_layers(const RootDatum& datum, int max_length,
                                                       std::size_t layer_cap = 20000);

/// First letter of the reduced word; throws for the identity.
int left_descent(const WeylElement& w);

/// Orbit key recomputed from the word alone.
Coords orbit_key(const RootDatum& datum, const std::vector<int>& word);

/// w applied termwise to an exact series; the anchor is unchanged and the
/// displacements may leave the anchor cone.
AnchoredSeries act_on_series(const std::vector<int>& word, const AnchoredSeries& s);
inline AnchoredSeries act_on_series(const WeylElement& w, const AnchoredSeries& s) {
  return act_on_series(w.word, s);
}

/// On-disk cache of enumerate_layers, one JSON record per line:
///   {"format":"heckecs-layers/1","spec":"A2!","spec_hash":"...","max_length":L}
///   {"length":k,"word":[1,2,...],"orbit_key":[...]}
/// A file whose header does not match the requested spec hash and length is
/// ignored and rewritten.
class LayerCache {
 public:
  explicit LayerCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// $HECKECS_CACHE_DIR if set, otherwise nullopt.
  static std::optional<LayerCache> from_environment();

  std::vector<std::vector<WeylElement>> layers(const RootDatum& datum, int max_length,
                                               std::size_t layer_cap = 20000) const;
  std::filesystem::path path_for(const RootDatum& datum, int max_length) const;

 private:
  std::optional<std::vector<std::vector<WeylElement>>> load(const RootDatum& datum, int max_length) const;
  void store(const RootDatum& datum, int max_length, const std::vector<std::vector<WeylElement>>& layers) const;
  std::filesystem::path dir_;
};

}  // namespace heckecs
