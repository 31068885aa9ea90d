// heckecs: command-line front end for the Hecke/Whittaker toolkit.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 a run did not
// stabilize, 64 usage or input error.

#include "heckecs/acceptance.hpp"
#include "heckecs/characters.hpp"
#include "heckecs/verify.hpp"
#include "heckecs/version.hpp"
#include "heckecs/weyl.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace heckecs;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUnstabilized = 2;
constexpr int kExitUsage = 64;

struct Config {
  std::string spec;
  std::vector<int> labels;
  int depth = 6;
  int margin = 2;
  int buffer = 3;
  std::vector<std::string> q;
  std::string format = "text";
  std::string cache_dir;
  std::size_t layer_cap = 20000;
  std::uint64_t seed = acceptance::kDefaultSeed;
  int max_length = 4;
  std::vector<int> word;
  int generator = 1;
  std::vector<int> nu;
  int count = 100;
  std::string factor = "c-minus-a";
  bool timing = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool json_out(const Config& c) { return c.format == "json"; }

json header(const Config& c, const DatumPtr& datum) {
  json h;
  h["tool"] = "heckecs";
  h["version"] = kVersion;
  h["spec"] = datum ? datum->name() : "";
  h["spec_hash"] = datum ? datum->hash() : "";
  h["seed"] = c.seed;
  return h;
}

void print_header(const Config& c, const DatumPtr& datum) {
  if (json_out(c)) return;
  std::cout << "# heckecs " << kVersion;
  if (datum) std::cout << "  spec " << datum->name() << "  spec_hash " << datum->hash();
  std::cout << "  seed " << c.seed << "\n";
}

void print_json(const Config& c, const DatumPtr& datum, json result) {
  json out;
  out["header"] = header(c, datum);
  out["result"] = std::move(result);
  std::cout << out.dump(2) << "\n";
}

DatumPtr datum_of(const Config& c) {
  if (c.spec.empty()) throw UsageError("--spec is required");
  return RootDatum::make(c.spec);
}

Labels labels_of(const Config& c, const RootDatum& d) {
  if (static_cast<int>(c.labels.size()) != d.nodes())
    throw UsageError("--labels needs " + std::to_string(d.nodes()) + " entries for " + d.name());
  return Labels(c.labels.begin(), c.labels.end());
}

RunOptions run_options(const Config& c) {
  RunOptions o;
  o.margin = c.margin;
  o.limits.layer_cap = c.layer_cap;
  return o;
}

std::vector<Rational> qs_of(const Config& c) {
  std::vector<Rational> out;
  for (const std::string& s : c.q) {
    Rational q = parse_rational(s);
    if (q == 0) throw UsageError("--q must be nonzero");
    out.push_back(q);
  }
  return out;
}

std::optional<LayerCache> cache_of(const Config& c) {
  if (!c.cache_dir.empty()) return LayerCache(c.cache_dir);
  return LayerCache::from_environment();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return kExitFail;
    case Verdict::Unstabilized: return kExitUnstabilized;
  }
  return kExitFail;
}

// ---- plain computations ----------------------------------------------------

int cmd_roots(const Config& c) {
  const DatumPtr d = datum_of(c);
  const auto roots = d->positive_coroots_up_to(c.depth);
  if (json_out(c)) {
    json arr = json::array();
    for (const Coroot& r : roots)
      arr.push_back(json{{"coords", coords_json(r.coords, d->nodes())},
                         {"height", height(r.coords)},
                         {"kind", r.kind == RootKind::Real ? "real" : "imaginary"},
                         {"multiplicity", r.multiplicity}});
    print_json(c, d, json{{"depth", c.depth}, {"coroots", arr}});
    return 0;
  }
  print_header(c, d);
  for (const Coroot& r : roots)
    std::cout << height(r.coords) << "  " << coords_to_string(r.coords, d->nodes()) << "  "
              << (r.kind == RootKind::Real ? "real" : "imaginary x" + std::to_string(r.multiplicity)) << "\n";
  return 0;
}

int cmd_exponents(const Config& c) {
  const DatumPtr d = datum_of(c);
  if (json_out(c)) {
    print_json(c, d, json{{"exponents", d->exponents()}});
    return 0;
  }
  print_header(c, d);
  for (std::size_t k = 0; k < d->exponents().size(); ++k) std::cout << (k ? " " : "") << d->exponents()[k];
  std::cout << "\n";
  return 0;
}

int cmd_weyl(const Config& c) {
  const DatumPtr d = datum_of(c);
  const auto cache = cache_of(c);
  const auto layers = cache ? cache->layers(*d, c.max_length, c.layer_cap)
                            : enumerate_layers(*d, c.max_length, c.layer_cap);
  const auto word_json = [](const std::vector<int>& w) {
    json a = json::array();
    for (int g : w) a.push_back(g + 1);
    return a;
  };
  if (json_out(c)) {
    json arr = json::array();
    for (const auto& layer : layers) {
      json elems = json::array();
      for (const WeylElement& w : layer)
        elems.push_back(json{{"word", word_json(w.word)}, {"orbit_key", coords_json(w.key, d->nodes())}});
      arr.push_back(json{{"length", arr.size()}, {"size", layer.size()}, {"elements", elems}});
    }
    print_json(c, d, json{{"max_length", c.max_length}, {"layers", arr}});
    return 0;
  }
  print_header(c, d);
  for (std::size_t len = 0; len < layers.size(); ++len) {
    std::cout << "length " << len << ": " << layers[len].size() << "\n";
    for (const WeylElement& w : layers[len]) std::cout << "  " << word_json(w.word).dump() << "\n";
  }
  return 0;
}

int cmd_character(const Config& c) {
  const DatumPtr d = datum_of(c);
  const AnchoredSeries chi = weyl_kac_character(d, labels_of(c, *d), c.depth);
  if (json_out(c)) {
    print_json(c, d, chi.to_json());
    return 0;
  }
  print_header(c, d);
  std::cout << chi.to_string() << "\n";
  return 0;
}

int cmd_whittaker(const Config& c) {
  const DatumPtr d = datum_of(c);
  const WhittakerValue w = whittaker_normalized(d, labels_of(c, *d), c.depth, run_options(c));
  if (json_out(c)) {
    json r;
    r["prefactor"] = kWhittakerPrefactor;
    r["stabilized"] = w.stabilized;
    r["achieved_L"] = w.achieved_length;
    if (!w.stop_reason.empty()) r["stop_reason"] = w.stop_reason;
    r["series"] = w.series.to_json();
    print_json(c, d, r);
  } else {
    print_header(c, d);
    std::cout << kWhittakerPrefactor << " * [" << w.series.to_string() << "]\n";
    std::cout << (w.stabilized ? "stabilized" : "NOT stabilized: " + w.stop_reason) << " at L = " << w.achieved_length
              << "\n";
  }
  return w.stabilized ? 0 : kExitUnstabilized;
}

// ---- verification ----------------------------------------------------------

void print_report(const VerificationReport& r, int indent = 0) {
  std::string verdict = to_string(r.verdict);
  for (char& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::cout << std::string(static_cast<std::size_t>(indent), ' ') << verdict << "  " << r.check;
  if (!r.params.empty()) std::cout << "  " << r.params.dump();
  if (r.achieved_length) std::cout << "  L=" << *r.achieved_length;
  std::cout << "\n";
  if (r.witness) std::cout << std::string(static_cast<std::size_t>(indent + 4), ' ') << "witness " << r.witness->dump() << "\n";
  for (const auto& sub : r.details) print_report(sub, indent + 2);
}

int emit_report(const Config& c, const DatumPtr& d, const VerificationReport& r) {
  if (json_out(c)) {
    print_json(c, d, r.to_json(c.timing));
  } else {
    print_header(c, d);
    print_report(r);
  }
  return exit_code(r.verdict);
}

int cmd_verify(const Config& c, const std::string& check) {
  if (check == "all") {
    if (!json_out(c)) print_header(c, nullptr);
    acceptance::Options o;
    o.seed = c.seed;
    o.limits.layer_cap = c.layer_cap;
    const acceptance::Result res = acceptance::run(o, [&](const acceptance::Outcome& out) {
      if (!json_out(c)) std::cout << acceptance::format_line(out) << std::endl;
    });
    if (json_out(c)) print_json(c, nullptr, res.to_json(c.timing));
    int rc = 0;
    for (const auto& out : res.criteria) {
      if (out.verdict == Verdict::Fail) return kExitFail;
      if (out.verdict == Verdict::Unstabilized) rc = kExitUnstabilized;
    }
    return rc;
  }

  const DatumPtr d = datum_of(c);
  if (check == "finite-cs") return emit_report(c, d, verify_finite_cs(d, labels_of(c, *d)));
  if (check == "affine-cs") {
    AffineCsOptions o;
    o.depth = c.depth;
    o.run = run_options(c);
    o.qs = qs_of(c);
    return emit_report(c, d, verify_affine_cs(d, labels_of(c, *d), o));
  }
  if (check == "recursion") {
    std::vector<int> w;
    for (int g : c.word) w.push_back(g - 1);
    return emit_report(c, d, verify_recursion(d, labels_of(c, *d), w, c.generator - 1));
  }
  if (check == "symmetrizer") {
    const WaFactor f = c.factor == "eigen" ? WaFactor::EigenQuotient : WaFactor::CMinusA;
    return emit_report(c, d, verify_symmetrizer_properties(d, labels_of(c, *d), c.depth, c.buffer, run_options(c), f));
  }
  if (check == "gk-limit") {
    if (static_cast<int>(c.nu.size()) != d->nodes())
      throw UsageError("--nu needs " + std::to_string(d->nodes()) + " entries");
    Coords nu{};
    for (std::size_t k = 0; k < c.nu.size(); ++k) nu[k] = c.nu[k];
    GkLimitOptions o;
    o.depth = c.depth;
    o.run = run_options(c);
    return emit_report(c, d, verify_gk_limit(d, nu, o));
  }
  if (check == "hecke-relations") return emit_report(c, d, verify_hecke_relations(d, c.count, c.seed));
  if (check == "denominator-identity") return emit_report(c, d, verify_denominator_identity(d, c.depth));
  throw UsageError("unknown check " + check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure-Lusztig operators, Weyl-Kac characters and Casselman-Shalika checks"};
  app.set_version_flag("--version", std::string("heckecs ") + kVersion);
  app.require_subcommand(1);
  Config c;

  const auto common = [&](CLI::App* sub, bool labels, bool depth) {
    sub->add_option("--spec", c.spec, "root system, e.g. A2, D4, A1! (! = untwisted affine)");
    if (labels) sub->add_option("--labels", c.labels, "anchor labels <a_i, Lambda>, comma separated")->delimiter(',');
    if (depth) sub->add_option("--depth", c.depth, "truncation depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", c.cache_dir, "Weyl layer cache directory")->envname("HECKECS_CACHE_DIR");
    sub->add_option("--layer-cap", c.layer_cap, "largest Weyl layer to enumerate")->check(CLI::Range(std::size_t{1}, std::size_t(1) << 40));
    sub->add_option("--seed", c.seed, "seed for random-monomial checks");
    sub->add_option("--margin", c.margin, "empty layers required for stabilization")->check(CLI::PositiveNumber);
  };

  CLI::App* roots = app.add_subcommand("roots", "positive coroots up to a depth");
  common(roots, false, true);
  CLI::App* exps = app.add_subcommand("exponents", "exponents of the finite Weyl group");
  common(exps, false, false);
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group layers by length");
  common(weyl, false, false);
  weyl->add_option("--max-length", c.max_length, "longest length to enumerate")->check(CLI::NonNegativeNumber);
  CLI::App* character = app.add_subcommand("character", "Weyl-Kac character, truncated");
  common(character, true, true);
  CLI::App* whittaker = app.add_subcommand("whittaker", "sum over W of T_w(e^Lambda)");
  common(whittaker, true, true);

  CLI::App* verify = app.add_subcommand("verify", "run a verification");
  verify->require_subcommand(1);
  std::string check;
  for (const char* name : {"finite-cs", "affine-cs", "recursion", "symmetrizer", "gk-limit", "hecke-relations",
                           "denominator-identity", "all"}) {
    CLI::App* sub = verify->add_subcommand(name);
    common(sub, true, true);
    sub->add_option("--buffer", c.buffer, "comparison buffer below the depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--q", c.q, "spot-evaluate at v = q (exact rational, repeatable)");
    sub->add_option("--word", c.word, "w' as 1-based generators, comma separated")->delimiter(',');
    sub->add_option("--generator", c.generator, "1-based generator i");
    sub->add_option("--nu", c.nu, "displacement nu in simple coroots, comma separated")->delimiter(',');
    sub->add_option("--count", c.count, "number of random monomials")->check(CLI::PositiveNumber);
    sub->add_option("--factor", c.factor, "reflection factor for property (iii)")
        ->check(CLI::IsMember({"c-minus-a", "eigen"}));
    sub->add_flag("!--no-timing", c.timing, "omit wall-clock fields from JSON");
    sub->callback([&check, sub] { check = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*roots) return cmd_roots(c);
    if (*exps) return cmd_exponents(c);
    if (*weyl) return cmd_weyl(c);
    if (*character) return cmd_character(c);
    if (*whittaker) return cmd_whittaker(c);
    if (*verify) return cmd_verify(c, check);
  } catch (const UsageError& e) {
    std::cerr << "heckecs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // includes SpecError
    std::cerr << "heckecs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "heckecs: error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
