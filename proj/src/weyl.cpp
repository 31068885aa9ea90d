#include "heckecs/weyl.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <unordered_set>

namespace heckecs {

Coords act(const CartanMatrix& a, const std::vector<int>& word, const Labels& labels, Coords beta) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) beta = reflect(a, *it, labels, beta);
  return beta;
}

Layer identity_layer(const RootDatum&) {
  Layer l;
  l.elements.push_back(WeylElement{});
  l.parent.push_back(0);
  l.gen.push_back(-1);
  return l;
}

Layer next_layer(const RootDatum& datum, const Layer& layer, std::size_t layer_cap) {
  const CartanMatrix& a = datum.cartan();
  const Labels rho(static_cast<std::size_t>(datum.nodes()), 1);
  Layer out;
  std::unordered_set<Coords, CoordsHash> seen;
  for (std::size_t p = 0; p < layer.elements.size(); ++p) {
    const WeylElement& w = layer.elements[p];
    for (int i = 0; i < datum.nodes(); ++i) {
      // l(w_i w) = l(w) + 1  iff  <a_i, w(rho^vee)> > 0.
      if (1 - a.pair(i, w.key) <= 0) continue;
      Coords key = reflect(a, i, rho, w.key);
      if (!seen.insert(key).second) continue;
      if (out.elements.size() >= layer_cap)
        throw LayerCapExceeded("Weyl layer " + std::to_string(w.length() + 1) + " of " + datum.name() +
                               " exceeds the cap of " + std::to_string(layer_cap) + " elements");
      WeylElement x;
      x.word.reserve(w.word.size() + 1);
      x.word.push_back(i);
      x.word.insert(x.word.end(), w.word.begin(), w.word.end());
      x.key = key;
      out.elements.push_back(std::move(x));
      out.parent.push_back(p);
      out.gen.push_back(i);
    }
  }
  return out;
}

std::vector<std::vector<WeylElement>> enumerate_layers(const RootDatum& datum, int max_length,
                                                       std::size_t layer_cap) {
  if (max_length < 0) throw std::invalid_argument("max_length must be nonnegative");
  std::vector<std::vector<WeylElement>> out;
  Layer layer = identity_layer(datum);
  out.push_back(layer.elements);
  for (int k = 1; k <= max_length; ++k) {
    layer = next_layer(datum, layer, layer_cap);
    if (layer.empty()) break;
    out.push_back(layer.elements);
  }
  return out;
}

int left_descent(const WeylElement& w) {
  if (w.word.empty()) throw std::invalid_argument("the identity has no left descent");
  return w.word.front();
}

Coords orbit_key(const RootDatum& datum, const std::vector<int>& word) {
  const Labels rho(static_cast<std::size_t>(datum.nodes()), 1);
  return act(datum.cartan(), word, rho, Coords{});
}

AnchoredSeries act_on_series(const std::vector<int>& word, const AnchoredSeries& s) {
  if (!s.is_exact()) throw SeriesError("act_on_series needs an exact (finite) series");
  const CartanMatrix& a = s.root_datum().cartan();
  AnchoredSeries out = AnchoredSeries::exact(s.datum(), s.labels());
  for (const auto& [beta, c] : s.terms()) out.add_term(act(a, word, s.labels(), beta), c);
  return out;
}

// ---------------------------------------------------------------- cache

std::optional<LayerCache> LayerCache::from_environment() {
  if (const char* dir = std::getenv("HECKECS_CACHE_DIR"); dir && *dir) return LayerCache(dir);
  return std::nullopt;
}

std::filesystem::path LayerCache::path_for(const RootDatum& datum, int max_length) const {
  std::string name = datum.name();
  for (char& ch : name)
    if (ch == '!') ch = 'x';
  return dir_ / (name + "-" + datum.hash() + "-L" + std::to_string(max_length) + ".jsonl");
}

std::optional<std::vector<std::vector<WeylElement>>> LayerCache::load(const RootDatum& datum,
                                                                      int max_length) const {
  std::ifstream in(path_for(datum, max_length));
  if (!in) return std::nullopt;
  std::string line;
  try {
    if (!std::getline(in, line)) return std::nullopt;
    auto header = nlohmann::json::parse(line);
    if (header.value("format", "") != "heckecs-layers/1" || header.value("spec_hash", "") != datum.hash() ||
        header.value("max_length", -1) != max_length)
      return std::nullopt;
    std::vector<std::vector<WeylElement>> layers;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto rec = nlohmann::json::parse(line);
      WeylElement w;
      for (int g : rec.at("word")) w.word.push_back(g - 1);
      const auto key = rec.at("orbit_key").get<std::vector<int>>();
      for (std::size_t i = 0; i < key.size() && i < w.key.size(); ++i) w.key[i] = key[i];
      const auto k = rec.at("length").get<std::size_t>();
      if (k != w.word.size()) return std::nullopt;
      if (layers.size() <= k) layers.resize(k + 1);
      layers[k].push_back(std::move(w));
    }
    if (layers.empty()) return std::nullopt;
    return layers;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void LayerCache::store(const RootDatum& datum, int max_length,
                       const std::vector<std::vector<WeylElement>>& layers) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = path_for(datum, max_length);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    nlohmann::ordered_json header;
    header["format"] = "heckecs-layers/1";
    header["spec"] = datum.name();
    header["spec_hash"] = datum.hash();
    header["max_length"] = max_length;
    out << header.dump() << '\n';
    for (const auto& layer : layers)
      for (const auto& w : layer) {
        nlohmann::ordered_json rec;
        rec["length"] = w.length();
        auto word = nlohmann::ordered_json::array();
        for (int g : w.word) word.push_back(g + 1);
        rec["word"] = std::move(word);
        rec["orbit_key"] = coords_json(w.key, datum.nodes());
        out << rec.dump() << '\n';
      }
  }
  std::filesystem::rename(tmp, path, ec);
}

std::vector<std::vector<WeylElement>> LayerCache::layers(const RootDatum& datum, int max_length,
                                                         std::size_t layer_cap) const {
  if (auto cached = load(datum, max_length)) return *cached;
  auto layers = enumerate_layers(datum, max_length, layer_cap);
  store(datum, max_length, layers);
  return layers;
}

}  // namespace heckecs
