// Acceptance gate: one PASS/FAIL line per criterion. Every criterion is an
// exact integer statement except the warm-cache speedup (ratio >= 2) and the
// per-criterion runtime budgets.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qplab/corpus.hpp"
#include "qplab/harness.hpp"
#include "qplab/io.hpp"
#include "qplab/strands.hpp"

using namespace qplab;
using json = nlohmann::json;

namespace {

constexpr uint64_t kSeed = 7;
constexpr int kSamples = 3;
constexpr double kMinWarmSpeedup = 2.0;

struct Verdict {
  bool pass = true;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

class Report {
 public:
  explicit Report(const json& report) {
    for (const auto& e : report["entries"]) by_id_[e["id"].get<std::string>()] = e;
    for (const auto& [id, t] : report["timing"]["entries"].items()) {
      double s = 0;
      for (const auto& [k, v] : t.items()) s += v.get<double>();
      seconds_[id] = s;
    }
  }

  const json* entry(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &it->second;
  }
  // computed value, or null when the entry or key is missing
  json get(const std::string& id, const std::string& key) const {
    const json* e = entry(id);
    if (!e || !(*e)["computed"].contains(key)) return nullptr;
    return (*e)["computed"][key];
  }
  double seconds(const std::vector<std::string>& ids) const {
    double s = 0;
    for (const auto& id : ids)
      if (auto it = seconds_.find(id); it != seconds_.end()) s += it->second;
    return s;
  }
  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& [id, e] : by_id_) out.push_back(id);
    return out;
  }

 private:
  std::map<std::string, json> by_id_;
  std::map<std::string, double> seconds_;
};

void expect_eq(Verdict& v, const Report& r, const std::string& id, const std::string& key, const json& want) {
  json got = r.get(id, key);
  v.require(got == want, id + "." + key + " = " + got.dump() + ", expected " + want.dump());
}

void budget(Verdict& v, double seconds, double limit) {
  std::ostringstream s;
  s << "runtime " << seconds << " s exceeds " << limit << " s";
  v.require(seconds < limit, s.str());
}

void emit(int n, const std::string& title, const Verdict& v, int& failures) {
  std::printf("%s criterion %d: %s", v.pass ? "PASS" : "FAIL", n, title.c_str());
  if (!v.pass) {
    std::printf(" [");
    for (size_t i = 0; i < v.problems.size(); ++i) std::printf("%s%s", i ? "; " : "", v.problems[i].c_str());
    std::printf("]");
    ++failures;
  }
  std::printf("\n");
  std::fflush(stdout);
}

double seconds_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::string> kMinimalDegree = {"rnc_3",      "rnc_4",     "rnc_5",         "rnc_6",
                                                 "scroll_1_2", "scroll_2_2", "scroll_1_1_2", "veronese_surface"};

}  // namespace

int main(int argc, char** argv) {
  std::string corpus_path = argc > 1 ? argv[1] : QPLAB_DEFAULT_CORPUS;
  std::vector<CorpusEntry> corpus;
  try {
    corpus = parse_corpus(read_text_file(corpus_path));
  } catch (const std::exception& ex) {
    std::printf("FAIL corpus: %s\n", ex.what());
    return 1;
  }

  CampaignOptions opt;
  opt.tags = {"all"};
  opt.seed = kSeed;
  opt.samples = kSamples;
  opt.confirm = true;
  json full;
  try {
    full = run_campaign(corpus, opt).report;
  } catch (const std::exception& ex) {
    std::printf("FAIL campaign: %s\n", ex.what());
    return 1;
  }
  Report R(full);
  int failures = 0;

  {
    Verdict v;
    const std::string id = "cubic_veronese";
    expect_eq(v, R, id, "dim_i2", 27);
    expect_eq(v, R, id, "hf2", 28);
    expect_eq(v, R, id, "qp", 6);
    expect_eq(v, R, id, "qp_seeds_agree", true);
    budget(v, R.seconds({id}), 300);
    emit(1, "cubic Veronese surface: dim I2 = 27, HF(2) = 28, qp = 6 at two seeds", v, failures);
  }

  {
    Verdict v;
    std::vector<std::string> ids = kMinimalDegree;
    for (const auto& id : kMinimalDegree) {
      json c = R.get(id, "c"), d = R.get(id, "d"), qp = R.get(id, "qp");
      v.require(!c.is_null() && qp == c, id + ": qp " + qp.dump() + " vs c " + c.dump());
      v.require(!c.is_null() && d == c.get<int>() + 1, id + ": d " + d.dump() + " vs c + 1");
    }
    int others = 0;
    for (const auto& id : R.ids()) {
      if (id.rfind("cmr_", 0) != 0 && id.rfind("genus3_", 0) != 0) continue;
      ++others;
      ids.push_back(id);
      json c = R.get(id, "c"), qp = R.get(id, "qp");
      v.require(!c.is_null() && !qp.is_null() && qp.get<int>() < c.get<int>(), id + ": qp not below c");
    }
    v.require(others >= 10, "too few non-minimal-degree entries");
    budget(v, R.seconds(ids), 600);
    emit(2, "minimal degree sweep: qp = c and d = c + 1; cmr and genus-3 entries have qp < c", v, failures);
  }

  {
    Verdict v;
    const std::string id = "del_pezzo_quintic";
    expect_eq(v, R, id, "c", 3);
    expect_eq(v, R, id, "d", 5);
    expect_eq(v, R, id, "qp", 2);
    expect_eq(v, R, id, "py_lower", 4);
    expect_eq(v, R, id, "py_upper", 4);
    json n = R.get(id, "n");
    v.require(n == 2 && R.get(id, "py_lower") == n.get<int>() + 2, "py interval is not [n+2, n+2]");
    budget(v, R.seconds({id}), 120);
    emit(3, "quintic del Pezzo: qp = 2, py in [4, 4]", v, failures);
  }

  {
    Verdict v;
    std::vector<std::string> codim3_big, wide;
    for (const auto& id : R.ids()) {
      json c = R.get(id, "c"), d = R.get(id, "d"), qp = R.get(id, "qp"), ell = R.get(id, "ell"), b1 = R.get(id, "b1");
      if (c.is_null() || c.get<int>() < 3) continue;
      wide.push_back(id);
      if (c == 3 && d.get<int>() >= 6) {
        codim3_big.push_back(id);
        v.require(ell == qp, id + ": ell " + ell.dump() + " vs qp " + qp.dump());
      }
      bool beta21 = b1.is_array() && b1.size() >= 2 && b1[1].get<int64_t>() > 0;
      v.require(beta21 == (qp.get<int>() >= 2), id + ": beta_{2,1} > 0 disagrees with qp >= 2");
    }
    v.require(codim3_big.size() >= 4, "only " + std::to_string(codim3_big.size()) + " codim-3 entries with d >= 6");
    budget(v, R.seconds(wide), 900);
    emit(4,
         "ell = qp on " + std::to_string(codim3_big.size()) + " codim-3 entries with d >= 6; beta_{2,1} > 0 iff qp >= 2 on " +
             std::to_string(wide.size()) + " entries",
         v, failures);
  }

  {
    Verdict v;
    int checked = 0;
    for (const auto& id : R.ids()) {
      json dims = R.get(id, "pei_dims");
      if (!dims.is_array()) continue;
      ++checked;
      int64_t a = dims[0], b = dims[1], k = dims[2];
      v.require(a == R.get(id, "dim_i2").get<int64_t>(), id + ": PEI dim I2 differs from the invariant");
      v.require(a == b + k, id + ": " + std::to_string(a) + " != " + std::to_string(b) + " + " + std::to_string(k));
      expect_eq(v, R, id, "pei_holds", true);
    }
    v.require(checked >= 12, "only " + std::to_string(checked) + " entries carry PEI data");
    budget(v, R.seconds(R.ids()), 600);
    emit(5, "dim I2 = dim I(X_q)2 + dim (K1)1 on " + std::to_string(checked) + " entries", v, failures);
  }

  {
    Verdict v;
    const std::string on = "cmr_5_8_scroll", off = "cmr_5_8_free";
    expect_eq(v, R, on, "reg", 5);
    expect_eq(v, R, on, "secant_order", 5);
    expect_eq(v, R, on, "qp", 3);
    expect_eq(v, R, on, "py_lower", 3);
    expect_eq(v, R, on, "py_upper", 3);
    expect_eq(v, R, off, "qp", 2);
    expect_eq(v, R, off, "py_lower", 4);
    json r = R.get(on, "r"), d = R.get(on, "d");
    v.require(r == 5 && d == 8, "cmr entry is not a degree-8 curve in P5");
    budget(v, R.seconds({on, off}), 600);
    emit(6, "maximal regularity curve: reg = 5, 5-secant line, qp = 3 on S(1,3), qp = 2 off it", v, failures);
  }

  {
    Verdict v;
    expect_eq(v, R, "genus3_d6", "dim_i2", 0);
    expect_eq(v, R, "genus3_d6", "cubic_gens", 4);
    expect_eq(v, R, "genus3_d7", "dim_i2", 3);
    expect_eq(v, R, "genus3_d7", "qp", 2);
    expect_eq(v, R, "genus3_d7", "r", 4);
    expect_eq(v, R, "genus3_d8_canonical_square", "qp", 3);
    expect_eq(v, R, "genus3_d8_canonical_square", "contained_in_container", true);
    expect_eq(v, R, "genus3_d8_generic", "qp", 2);
    expect_eq(v, R, "genus3_d9", "qp", 3);
    expect_eq(v, R, "genus3_d9", "r", 6);
    expect_eq(v, R, "genus3_d10", "qp", 4);
    expect_eq(v, R, "genus3_d10", "d", 10);
    budget(v, R.seconds({"genus3_d6", "genus3_d7", "genus3_d8_canonical_square", "genus3_d8_generic", "genus3_d9",
                         "genus3_d10"}),
           1200);
    emit(7, "genus-3 quartic models of degree 6 to 10", v, failures);
  }

  {
    Verdict v;
    for (const auto& id : kMinimalDegree) {
      json c = R.get(id, "c"), b1 = R.get(id, "b1");
      if (c.is_null() || !b1.is_array()) {
        v.require(false, id + ": missing strand");
        continue;
      }
      const int cc = c;
      for (int p = 1; p <= cc; ++p) {
        int64_t want = p * choose(cc + 1, p + 1);
        int64_t got = static_cast<size_t>(p - 1) < b1.size() ? b1[p - 1].get<int64_t>() : -1;
        v.require(got == want, id + ": beta_{" + std::to_string(p) + ",1} = " + std::to_string(got) + ", expected " +
                                   std::to_string(want));
      }
      const json* e = R.entry(id);
      v.require(e && e->contains("confirmation") && (*e)["confirmation"]["agrees"] == true,
                id + ": characteristic 30011 disagrees");
    }
    budget(v, R.seconds(kMinimalDegree), 600);
    emit(8, "Eagon-Northcott strand on minimal-degree entries, equal at 32003 and 30011", v, failures);
  }

  {
    Verdict v;
    double secs = seconds_of([&] {
      for (const std::string id : {"cmr_5_8_scroll", "genus3_d8_canonical_square"}) {
        const CorpusEntry* ce = nullptr;
        for (const auto& e : corpus)
          if (e.id == id) ce = &e;
        if (!ce) {
          v.require(false, id + " missing from corpus");
          continue;
        }
        try {
          PrimeField K;
          auto built = build_entry(*ce, K, kSeed);
          const auto& X = built.X;
          auto Y = extract_syzygy_variety(X, derive_seed(kSeed, 6));
          v.require(Y.dim() == X.dim() + 1, id + ": dim Y = " + std::to_string(Y.dim()));
          v.require(Y.degree() == Y.codim() + 1, id + ": Y is not of minimal degree");
          v.require(X.ideal.contains(Y.ideal), id + ": I(Y) not inside I(X)");
          v.require(built.container.has_value() && Y.ideal == built.container->ideal,
                    id + ": extracted ideal differs from the known container");
        } catch (const std::exception& ex) {
          v.require(false, id + ": " + ex.what());
        }
      }
    });
    budget(v, secs, 300);
    emit(9, "syzygy-variety extraction recovers S(1,3) and the Veronese surface", v, failures);
  }

  {
    Verdict v;
    CampaignOptions sub = opt;
    sub.ids = {"cubic_veronese", "cmr_5_8_scroll", "cmr_5_8_free"};
    auto dir = std::filesystem::temp_directory_path() / ("qplab_acceptance_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    try {
      json a = without_timing(run_campaign(corpus, sub).report);
      json b = without_timing(run_campaign(corpus, sub).report);
      v.require(a == b, "repeated runs differ");
      sub.cache_dir = dir.string();
      json cold, warm;
      double t_cold = seconds_of([&] { cold = run_campaign(corpus, sub).report; });
      double t_warm = seconds_of([&] { warm = run_campaign(corpus, sub).report; });
      v.require(without_timing(cold) == a, "cold cached run differs from uncached run");
      v.require(without_timing(warm) == a, "warm cached run differs");
      v.require(warm["timing"]["cache"]["entry_hits"] == sub.ids.size(), "warm run missed the entry cache");
      std::ostringstream s;
      s << "warm " << t_warm << " s vs cold " << t_cold << " s";
      v.require(t_warm * kMinWarmSpeedup <= t_cold, s.str());
    } catch (const std::exception& ex) {
      v.require(false, ex.what());
    }
    std::filesystem::remove_all(dir);
    emit(10, "identical reports across reruns; warm cache at least 2x faster", v, failures);
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
