#include "qplab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "qplab/invariants.hpp"
#include "qplab/io.hpp"
#include "qplab/parse.hpp"
#include "qplab/projection.hpp"

namespace qplab {

using nlohmann::json;

namespace {

// Bump when the meaning of cached entry results changes.
constexpr int kResultVersion = 3;

json gl_json(int a) {
  if (a == StrandTable::kInfinity) return "inf";
  if (a == StrandTable::kNone) return "none";
  return a;
}

template <class F>
json points_json(const std::vector<std::vector<typename F::Elem>>& pts, const F& K) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_to_string(p, K));
  return arr;
}

template <class F>
json compute_entry(const CorpusEntry& e, const F& K, uint64_t seed, int samples) {
  json out;
  auto built = build_entry(e, K, seed);
  const auto& X = built.X;
  json& c = out["computed"];
  json& cert = out["certificate"];
  json& asserts = out["assertions"];
  asserts = json::array();

  c["r"] = X.r();
  c["n"] = X.dim();
  c["c"] = X.codim();
  c["d"] = X.degree();
  c["hf2"] = X.ideal.hilbert().hf(2);
  c["dim_i2"] = quadric_count(X);
  c["cubic_gens"] = X.ideal.is_zero() ? 0 : minimal_generator_count(X.ideal, 3);
  cert["ideal_hash"] = X.ideal.cache_key(MonomialOrder::grevlex());
  cert["generators"] = ideal_lines(X.ideal);

  auto qp1 = quadratic_persistence(X, samples, derive_seed(seed, 1));
  auto qp2 = quadratic_persistence(X, samples, derive_seed(seed, 2));
  c["qp"] = qp1.value;
  c["qp_seeds_agree"] = qp1.value == qp2.value;
  {
    json q;
    q["value"] = qp1.value;
    q["witness"] = points_json(qp1.witness, K);
    q["floor_evidence"] = qp1.floor_evidence;
    q["samples_per_level"] = qp1.samples_per_level;
    q["flagged"] = qp1.flagged;
    json seeds = json::array();
    for (auto s : {derive_seed(seed, 1), derive_seed(seed, 2)}) seeds.push_back(std::to_string(s));
    q["seeds"] = seeds;
    q["second_seed_value"] = qp2.value;
    cert["qp"] = q;
  }

  auto strands = strand_table(X, derive_seed(seed, 3));
  c["b1"] = std::vector<int64_t>(strands.b1.begin() + std::min<size_t>(1, strands.b1.size()), strands.b1.end());
  c["b2"] = strands.b2;
  c["ell"] = strands.ell;
  c["gl_index"] = gl_json(strands.gl_index);
  c["reg"] = regularity_via_gin(X, derive_seed(seed, 4));

  auto q = sample_point(X, derive_seed(seed, 5));
  auto pei = pei_dimension_identity_check(X, q);
  c["pei_holds"] = pei.holds;
  c["pei_dims"] = {pei.dim_i2, pei.dim_projection_i2, pei.dim_k1_1};
  cert["pei_point"] = point_to_string(q, K);

  if (e.family == "cmr") c["secant_order"] = secant_order(X, coordinate_line(K, X.r()));

  std::optional<Variety<F>> container = built.container;
  if (built.extract_container) {
    try {
      container = extract_syzygy_variety(X, derive_seed(seed, 6));
      c["extract_ok"] = true;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::extraction_failure && err.kind() != ErrorKind::input_contract) throw;
      c["extract_ok"] = false;
      cert["extract_error"] = err.what();
    }
  } else if (built.container && e.container != "self" && e.container != "constructed") {
    // a named container: check that extraction finds exactly it
    try {
      auto Y = extract_syzygy_variety(X, derive_seed(seed, 6));
      c["extract_ok"] = true;
      c["extract_matches_container"] = Y.ideal == built.container->ideal;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::extraction_failure && err.kind() != ErrorKind::input_contract) throw;
      c["extract_ok"] = false;
      cert["extract_error"] = err.what();
    }
  }
  if (container) {
    c["contained_in_container"] = X.ideal.contains(container->ideal);
    c["container_minimal_degree"] = container->degree() == container->codim() + 1;
    cert["container"] = ideal_lines(container->ideal);
  }
  if (X.totally_real) {
    const Variety<F>* cont = nullptr;
    if (container && container->totally_real && X.ideal.contains(container->ideal) &&
        container->degree() == container->codim() + 1)
      cont = &*container;
    auto py = py_bounds(X, qp1.value, cont);
    c["py_lower"] = py.lower;
    c["py_upper"] = py.upper ? json(*py.upper) : json("unknown");
    cert["py_upper_source"] = py.upper_source;
  }

  auto v = classify(X, &strands, qp1.value);
  c["is_minimal_degree"] = v.is_minimal_degree;
  c["is_d_c2"] = v.is_d_c2;
  c["castelnuovo_divisor"] = v.castelnuovo_divisor;
  c["strand_divisor"] = v.strand_divisor;
  for (const auto& a : v.assertions)
    if (a.applies) asserts.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
  asserts.push_back({{"name", "qp agrees across seeds"},
                     {"holds", qp1.value == qp2.value},
                     {"detail", std::to_string(qp1.value) + " vs " + std::to_string(qp2.value)}});
  asserts.push_back({{"name", "dim I2 = dim I(X_q)2 + dim (K1)1"}, {"holds", pei.holds}, {"detail", pei.to_string()}});
  if (X.totally_real && c.contains("py_upper") && c["py_upper"].is_number())
    asserts.push_back({{"name", "py interval is ordered"},
                       {"holds", c["py_lower"].get<int>() <= c["py_upper"].get<int>()},
                       {"detail", "[" + std::to_string(c["py_lower"].get<int>()) + ", " + c["py_upper"].dump() + "]"}});
  return out;
}

json compute_for_field(const CorpusEntry& e, const FieldConfig& field, uint64_t seed, int samples) {
  return dispatch_field(field, [&](const auto& K) { return compute_entry(e, K, seed, samples); });
}

class EntryCache {
 public:
  explicit EntryCache(std::string dir) : dir_(std::move(dir)) {}

  std::string key(const CorpusEntry& e, const FieldConfig& f, uint64_t seed, int samples) const {
    return sha256_hex(e.signature() + "|" + f.name() + "|" + std::to_string(seed) + "|" + std::to_string(samples) +
                      "|v" + std::to_string(kResultVersion));
  }

  std::optional<json> load(const std::string& k) const {
    if (dir_.empty()) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir_) / "entries" / (k + ".json"));
    if (!in) return std::nullopt;
    try {
      return json::parse(in);
    } catch (const json::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& k, const json& value) const {
    if (dir_.empty()) return;
    std::error_code ec;
    auto dir = std::filesystem::path(dir_) / "entries";
    std::filesystem::create_directories(dir, ec);
    auto tmp = dir / (k + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())));
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << value.dump();
    }
    std::filesystem::rename(tmp, dir / (k + ".json"), ec);
  }

 private:
  std::string dir_;
};

struct EntryOutcome {
  json record;
  json timing;
  bool passed = false;
  bool cache_hit = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EntryOutcome run_entry(const CorpusEntry& e, const CampaignOptions& opt, const EntryCache& cache) {
  EntryOutcome out;
  json& rec = out.record;
  const uint64_t seed = derive_seed(opt.seed, e.seed);
  rec["id"] = e.id;
  rec["tags"] = e.tags;
  rec["field"] = opt.field.name();
  rec["seed"] = std::to_string(seed);
  rec["signature"] = e.signature();
  bool ok = true;

  auto timed_compute = [&](const FieldConfig& f, const char* label) -> json {
    auto t0 = std::chrono::steady_clock::now();
    auto k = cache.key(e, f, seed, opt.samples);
    json result;
    if (auto hit = cache.load(k)) {
      result = std::move(*hit);
      out.cache_hit = true;
    } else {
      result = compute_for_field(e, f, seed, opt.samples);
      cache.store(k, result);
    }
    out.timing[label] = seconds_since(t0);
    return result;
  };

  try {
    json primary = timed_compute(opt.field, "compute_seconds");
    rec["computed"] = primary["computed"];
    rec["certificate"] = primary["certificate"];
    rec["assertions"] = primary["assertions"];
    for (const auto& a : rec["assertions"]) ok = ok && a["holds"].get<bool>();

    json checks = json::array();
    for (const auto& x : e.expect) {
      json chk;
      chk["key"] = x.key;
      chk["expected"] = x.value;
      chk["source"] = x.source;
      if (!rec["computed"].contains(x.key)) {
        chk["computed"] = nullptr;
        chk["pass"] = false;
      } else {
        chk["computed"] = rec["computed"][x.key];
        chk["pass"] = rec["computed"][x.key] == x.value;
      }
      ok = ok && chk["pass"].get<bool>();
      checks.push_back(chk);
    }
    rec["expected"] = checks;

    if (opt.confirm) {
      if (auto cf = confirmation_field(opt.field)) {
        json second = timed_compute(*cf, "confirm_seconds");
        json diff = json::array();
        for (const auto& [k, v] : rec["computed"].items())
          if (!second["computed"].contains(k) || second["computed"][k] != v) diff.push_back(k);
        rec["confirmation"] = {{"field", cf->name()}, {"agrees", diff.empty()}, {"differing", diff}};
        ok = ok && diff.empty();
      }
    }
  } catch (const std::exception& ex) {
    rec["error"] = ex.what();
    ok = false;
  }
  rec["status"] = ok ? "pass" : "fail";
  out.passed = ok;
  return out;
}

bool selected(const CorpusEntry& e, const CampaignOptions& opt) {
  if (!opt.ids.empty() && std::find(opt.ids.begin(), opt.ids.end(), e.id) == opt.ids.end()) return false;
  for (const auto& t : opt.tags)
    if (t == "all" || e.has_tag(t)) return true;
  return false;
}

}  // namespace

std::optional<FieldConfig> confirmation_field(const FieldConfig& field) {
  if (field.kind == FieldConfig::Kind::rationals) return std::nullopt;
  if (field.characteristic == PrimeField::kConfirmationCharacteristic)
    return FieldConfig::prime(PrimeField::kDefaultCharacteristic);
  return FieldConfig::prime(PrimeField::kConfirmationCharacteristic);
}

json without_timing(const json& report) {
  json copy = report;
  copy.erase("timing");
  return copy;
}

CampaignResult run_campaign(const std::vector<CorpusEntry>& corpus, const CampaignOptions& opt) {
  if (opt.tags.empty()) throw Error(ErrorKind::usage, "select at least one theorem tag");
  for (const auto& t : opt.tags) {
    const auto& kt = known_tags();
    if (t != "all" && std::find(kt.begin(), kt.end(), t) == kt.end())
      throw Error(ErrorKind::usage, "unknown tag '" + t + "'");
  }
  if (opt.samples < 1) throw Error(ErrorKind::usage, "samples must be positive");
  std::vector<const CorpusEntry*> chosen;
  for (const auto& e : corpus)
    if (selected(e, opt)) chosen.push_back(&e);

  auto t0 = std::chrono::steady_clock::now();
  const auto before_memory = cache_counters().memory_hits.load();
  const auto before_disk = cache_counters().disk_hits.load();
  const auto before_computed = cache_counters().computed.load();

  std::vector<EntryOutcome> outcomes(chosen.size());
  EntryCache cache(opt.cache_dir);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < chosen.size(); i = next++) outcomes[i] = run_entry(*chosen[i], opt, cache);
  };
  const int nworkers = std::max(1, std::min<int>(opt.workers, static_cast<int>(chosen.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < nworkers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json report;
  report["campaign"] = {{"tags", opt.tags},
                        {"field", opt.field.name()},
                        {"seed", opt.seed},
                        {"samples_per_level", opt.samples},
                        {"confirmation_field", opt.confirm && confirmation_field(opt.field)
                                                   ? json(confirmation_field(opt.field)->name())
                                                   : json(nullptr)}};
  json entries = json::array();
  json timing_entries = json::object();
  size_t passed = 0, entry_hits = 0;
  std::map<std::string, std::pair<int, int>> per_tag;
  for (size_t i = 0; i < chosen.size(); ++i) {
    entries.push_back(outcomes[i].record);
    timing_entries[chosen[i]->id] = outcomes[i].timing;
    passed += outcomes[i].passed;
    entry_hits += outcomes[i].cache_hit;
    for (const auto& t : chosen[i]->tags) {
      auto& pt = per_tag[t];
      (outcomes[i].passed ? pt.first : pt.second)++;
    }
  }
  report["entries"] = entries;
  json tags = json::object();
  for (const auto& [t, pf] : per_tag) tags[t] = {{"passed", pf.first}, {"failed", pf.second}};
  report["summary"] = {{"entries", chosen.size()},
                       {"passed", passed},
                       {"failed", chosen.size() - passed},
                       {"by_tag", tags}};
  report["timing"] = {{"total_seconds", seconds_since(t0)},
                      {"workers", nworkers},
                      {"entries", timing_entries},
                      {"cache",
                       {{"entry_hits", entry_hits},
                        {"gb_memory_hits", cache_counters().memory_hits.load() - before_memory},
                        {"gb_disk_hits", cache_counters().disk_hits.load() - before_disk},
                        {"gb_computed", cache_counters().computed.load() - before_computed}}}};
  return {report, passed == chosen.size()};
}

namespace {

// Codimension and dimension of a minimal-degree family from its parameters alone.
std::pair<int, int> minimal_degree_shape(const CorpusEntry& e) {
  const auto& p = e.params;
  if (e.family == "rnc" && p.size() == 1) return {p[0] - 1, 1};
  if (e.family == "quadric" && p.size() == 1) return {1, p[0] - 1};
  if (e.family == "scroll" && !p.empty()) {
    int r = -1;
    for (int a : p) r += a + 1;
    return {r - static_cast<int>(p.size()), static_cast<int>(p.size())};
  }
  if (e.family == "veronese" && p == std::vector<int>{2, 2}) return {3, 2};
  throw Error(ErrorKind::usage, "entry " + e.id + " is not a minimal-degree family");
}

int64_t choose(int64_t n, int64_t k) {
  if (k < 0 || n < k) return 0;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

json evaluate_oracle(const std::string& name, const std::string& key, const CorpusEntry& e) {
  auto unsupported = [&]() -> json {
    throw Error(ErrorKind::usage, "oracle " + name + " cannot produce " + key + " for " + e.id);
  };
  if (name == "eagon_northcott") {
    // beta_{p,1} = p * C(c+1, p+1) for varieties of minimal degree
    auto [c, n] = minimal_degree_shape(e);
    if (key == "b1") {
      json arr = json::array();
      for (int p = 1; p <= c; ++p) arr.push_back(p * choose(c + 1, p + 1));
      return arr;
    }
    if (key == "ell") return c;
    if (key == "dim_i2") return choose(c + 1, 2);
    if (key == "d") return c + 1;
    if (key == "c") return c;
    if (key == "n") return n;
    return unsupported();
  }
  if (name == "veronese_count" && e.family == "veronese" && e.params.size() == 2) {
    const int n = e.params[0], dd = e.params[1];
    const int64_t N = choose(n + dd, n);  // number of coordinates
    const int64_t hf2 = choose(n + 2 * dd, n);
    if (key == "hf2") return hf2;
    if (key == "dim_i2") return choose(N + 1, 2) - hf2;
    if (key == "r") return N - 1;
    return unsupported();
  }
  if (name == "riemann_roch" && e.family == "genus3" && e.params.size() == 1) {
    // plane quartic, genus 3, embedded by degree 4k - |points|
    int npts = 0;
    if (auto colon = e.points.find(':'); colon != std::string::npos) {
      auto rest = e.points.substr(colon + 1);
      if (e.points.rfind("generic", 0) == 0)
        npts = std::stoi(rest);
      else
        npts = static_cast<int>(std::count(rest.begin(), rest.end(), ',')) + 1;
    }
    const int g = 3;
    const int d = 4 * e.params[0] - npts;
    const int r = d - g;
    if (key == "d") return d;
    if (key == "r") return r;
    // h^0(L^2) = 2d + 1 - g once L^2 is nonspecial and the curve is projectively normal
    if (key == "dim_i2") return choose(r + 2, 2) - (2 * d + 1 - g);
    return unsupported();
  }
  if (name == "maximal_regularity" && e.family == "cmr" && e.params.size() == 2) {
    const int r = e.params[0], d = e.params[1];
    if (key == "reg" || key == "secant_order") return d - r + 2;
    if (key == "c") return r - 1;
    return unsupported();
  }
  return unsupported();
}

namespace {

// Compact JSON with ", " between array items, matching the corpus style.
std::string toml_value(const json& v) {
  if (!v.is_array()) return v.dump();
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + toml_value(v[i]);
  return out + "]";
}

}  // namespace

std::string regen_oracles(const std::string& corpus_text, std::vector<std::string>* changes) {
  auto corpus = parse_corpus(corpus_text);
  std::vector<std::string> lines;
  {
    std::istringstream in(corpus_text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  for (const auto& e : corpus)
    for (const auto& x : e.expect) {
      if (x.source.rfind("oracle:", 0) != 0) continue;
      json v = evaluate_oracle(x.source.substr(7), x.key, e);
      std::string& line = lines.at(x.line - 1);
      std::string rewritten = "expect." + x.key + " = [" + toml_value(v) + ", \"" + x.source + "\"]";
      auto hash = line.find('#');
      std::string comment = hash == std::string::npos ? "" : "  " + line.substr(hash);
      // keep comments that are not inside the value
      if (!comment.empty() && std::count(line.begin(), line.begin() + hash, '"') % 2 == 1) comment.clear();
      if (v != x.value && changes) changes->push_back(e.id + "." + x.key + ": " + x.value.dump() + " -> " + v.dump());
      line = rewritten + comment;
    }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace qplab
