#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qplab/harness.hpp"
#include "qplab/invariants.hpp"
#include "qplab/io.hpp"
#include "qplab/parse.hpp"
#include "qplab/projection.hpp"

using namespace qplab;
using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!trim(item).empty()) out.emplace_back(trim(item));
  return out;
}

// CLI11 unwraps [..] in vector options; put the brackets back for parse_point.
std::string point_literal(std::string s) {
  auto t = std::string(trim(s));
  if (!t.empty() && t.front() != '[') t = "[" + t + "]";
  return t;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

template <class Fn>
auto with_variety_file(const std::string& path, Fn&& fn) {
  auto text = read_text_file(path);
  auto header = read_ring_header(text);
  return dispatch_field(header.field, [&](const auto& K) { return fn(parse_variety_text(text, K)); });
}

json gl_index_json(int a) {
  if (a == StrandTable::kInfinity) return "inf";
  if (a == StrandTable::kNone) return "none";
  return a;
}

std::string betti_table(const StrandTable& t) {
  std::ostringstream out;
  const size_t cols = std::max(t.b1.size(), t.b2.size());
  out << "       ";
  for (size_t i = 0; i < cols; ++i) out << std::setw(6) << i;
  out << "\n    1: ";
  for (size_t i = 0; i < cols; ++i) {
    if (i == 0)
      out << std::setw(6) << "-";
    else if (i < t.b1.size())
      out << std::setw(6) << t.b1[i];
    else
      out << std::setw(6) << ".";
  }
  out << "\n    2: ";
  for (size_t i = 0; i < cols; ++i) {
    if (i < t.b2.size())
      out << std::setw(6) << t.b2[i];
    else
      out << std::setw(6) << ".";
  }
  out << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qp_lab: quadratic persistence, Koszul strands and projections of projective varieties"};
  app.require_subcommand(1);

  // family
  auto* fam = app.add_subcommand("family", "build a variety from a named family and write a .variety file");
  std::string fam_name, fam_out = "-", fam_points, fam_field = "p32003", fam_container_out;
  std::vector<int> fam_params;
  bool fam_on_scroll = false;
  uint64_t fam_seed = 1;
  fam->add_option("name", fam_name, "rnc, scroll, veronese, quadric, pspace, del_pezzo, cmr, genus3")->required();
  fam->add_option("params", fam_params, "integer parameters");
  fam->add_flag("--on-scroll", fam_on_scroll, "cmr: place the curve on a surface scroll");
  fam->add_option("--points", fam_points, "genus3 base points: rational:0,1 or generic:<count>");
  fam->add_option("--field", fam_field, "p<prime> or QQ");
  fam->add_option("--seed", fam_seed, "seed for randomized constructions");
  fam->add_option("-o,--output", fam_out, "output file (default stdout)");
  fam->add_option("--container-out", fam_container_out, "del_pezzo: also write the containing scroll");

  // invariants
  auto* inv = app.add_subcommand("invariants", "qp, strands, regularity and py bounds of a .variety file as JSON");
  std::string inv_file, inv_container, inv_out = "-";
  int inv_samples = 3;
  uint64_t inv_seed = 7;
  inv->add_option("file", inv_file)->required()->check(CLI::ExistingFile);
  inv->add_option("--samples", inv_samples, "tuples sampled per level");
  inv->add_option("--seed", inv_seed);
  inv->add_option("--container", inv_container, "variety of minimal degree containing the input")
      ->check(CLI::ExistingFile);
  inv->add_option("-o,--output", inv_out);

  // project
  auto* proj = app.add_subcommand("project", "project from points on the variety");
  std::string proj_file, proj_out = "-";
  std::vector<std::string> proj_points;
  proj->add_option("file", proj_file)->required()->check(CLI::ExistingFile);
  proj->add_option("--points", proj_points, "points [a0:...:ar]")->required();
  proj->add_option("-o,--output", proj_out);

  // pei
  auto* pei = app.add_subcommand("pei", "partial elimination ideals at a point");
  std::string pei_file, pei_point;
  int pei_m = 2, pei_t = 3;
  pei->add_option("file", pei_file)->required()->check(CLI::ExistingFile);
  pei->add_option("--point", pei_point, "center [a0:...:ar]")->required();
  pei->add_option("--max-index", pei_m, "largest i for K_i");
  pei->add_option("--max-degree", pei_t, "largest degree t reported");

  // strands
  auto* str = app.add_subcommand("strands", "quadratic and cubic strand Betti numbers");
  std::string str_file;
  int str_bound = -1;
  uint64_t str_seed = 7;
  str->add_option("file", str_file)->required()->check(CLI::ExistingFile);
  str->add_option("--bound", str_bound, "largest i for beta_{i,2} (default c + 1)");
  str->add_option("--seed", str_seed);

  // verify
  auto* ver = app.add_subcommand("verify", "run theorem campaigns over the corpus");
  std::string ver_tags, ver_field = "p32003", ver_json, ver_corpus = QPLAB_DEFAULT_CORPUS, ver_ids, ver_cache;
  uint64_t ver_seed = 7;
  int ver_workers = 1, ver_samples = 3;
  bool ver_no_confirm = false, ver_regen = false;
  ver->add_option("--tags", ver_tags, "comma-separated: A,1.2,1.3,1.4,3.1,P3.3,PEI,CAST or all");
  ver->add_option("--field", ver_field);
  ver->add_option("--seed", ver_seed);
  ver->add_option("--json", ver_json, "write the report here");
  ver->add_option("--corpus", ver_corpus)->check(CLI::ExistingFile);
  ver->add_option("--ids", ver_ids, "comma-separated entry ids");
  ver->add_option("--workers", ver_workers);
  ver->add_option("--samples", ver_samples);
  ver->add_option("--cache-dir", ver_cache, "entry result cache (default $QPLAB_CACHE_DIR)");
  ver->add_flag("--no-confirm", ver_no_confirm, "skip the second-characteristic pass");
  ver->add_flag("--regen-oracles", ver_regen, "rewrite oracle expectations in the corpus file and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fam) {
      auto cfg = FieldConfig::parse(fam_field);
      dispatch_field(cfg, [&](const auto& K) {
        using F = std::decay_t<decltype(K)>;
        std::optional<Variety<F>> container;
        auto V = build_family(fam_name, fam_params, fam_on_scroll, fam_points, K, fam_seed, &container);
        std::ostringstream desc;
        desc << "family " << fam_name;
        for (int p : fam_params) desc << ' ' << p;
        if (fam_on_scroll) desc << " on-scroll";
        if (!fam_points.empty()) desc << " points=" << fam_points;
        desc << " seed=" << fam_seed;
        emit(format_variety(V, {desc.str()}), fam_out);
        if (!fam_container_out.empty()) {
          if (!container) throw Error(ErrorKind::usage, fam_name + " does not construct a container");
          emit(format_variety(*container, {"container of " + desc.str()}), fam_container_out);
        }
      });
      return 0;
    }
    if (*inv) {
      auto report = with_variety_file(inv_file, [&](const auto& V) {
        using F = std::decay_t<decltype(V.field())>;
        std::optional<Variety<F>> container;
        if (!inv_container.empty()) container = parse_variety_text(read_text_file(inv_container), V.field());
        auto cert = quadratic_persistence(V, inv_samples, inv_seed);
        auto strands = strand_table(V, derive_seed(inv_seed, 3));
        json j;
        j["field"] = V.field().name();
        j["r"] = V.r();
        j["n"] = V.dim();
        j["d"] = V.degree();
        j["c"] = V.codim();
        j["dimI2"] = quadric_count(V);
        j["qp"] = cert.value;
        json c;
        json witness = json::array();
        for (const auto& p : cert.witness) witness.push_back(point_to_string(p, V.field()));
        c["witness"] = witness;
        c["floor_evidence"] = cert.floor_evidence;
        c["samples_per_level"] = cert.samples_per_level;
        c["seed"] = inv_seed;
        c["flagged"] = cert.flagged;
        j["certificate"] = c;
        j["ell"] = strands.ell;
        j["gl_index"] = gl_index_json(strands.gl_index);
        j["reg"] = regularity_via_gin(V, derive_seed(inv_seed, 4));
        if (V.totally_real) {
          auto py = py_bounds(V, cert.value, container ? &*container : nullptr);
          j["py_lower"] = py.lower;
          j["py_upper"] = py.upper ? json(*py.upper) : json("unknown");
          j["py_upper_source"] = py.upper_source;
          if (V.r() == 9 && V.dim() == 2 && V.degree() == 9 && quadric_count(V) == 27)
            j["py_known_value"] = {{"value", 4}, {"note", "known value for the cubic Veronese surface, not computed"}};
        } else {
          j["py_lower"] = nullptr;
          j["py_upper"] = nullptr;
          j["py_note"] = "bounds need a totally real variety";
        }
        auto v = classify(V, &strands, cert.value);
        json verdicts = {{"is_minimal_degree", v.is_minimal_degree},
                         {"is_d_c2", v.is_d_c2},
                         {"castelnuovo_divisor", v.castelnuovo_divisor},
                         {"strand_divisor", v.strand_divisor}};
        json asserts = json::array();
        for (const auto& a : v.assertions)
          if (a.applies) asserts.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
        verdicts["assertions"] = asserts;
        j["verdicts"] = verdicts;
        return j;
      });
      emit(report.dump(2) + "\n", inv_out);
      return 0;
    }
    if (*proj) {
      with_variety_file(proj_file, [&](const auto& V) {
        using F = std::decay_t<decltype(V.field())>;
        std::vector<std::vector<typename F::Elem>> pts;
        for (const auto& s : proj_points) pts.push_back(parse_point(point_literal(s), V.field()));
        auto X = project_from_points(V, pts);
        std::string desc = "projection of " + V.name + " from";
        for (const auto& s : proj_points) desc += " " + point_literal(s);
        emit(format_variety(X, {desc}), proj_out);
        return 0;
      });
      return 0;
    }
    if (*pei) {
      with_variety_file(pei_file, [&](const auto& V) {
        auto q = parse_point(point_literal(pei_point), V.field());
        auto res = partial_elimination_ideals(V, q, pei_m, pei_t);
        std::cout << "center " << point_to_string(q, V.field()) << "\n";
        std::cout << std::setw(4) << "i" << std::setw(4) << "t" << std::setw(8) << "dim" << "\n";
        for (const auto& [it, dim] : res.dims_deg)
          std::cout << std::setw(4) << it.first << std::setw(4) << it.second << std::setw(8) << dim << "\n";
        auto id = pei_dimension_identity_check(V, q);
        std::cout << "dim I2 = dim I(X_q)2 + dim (K1)1: " << id.to_string() << (id.holds ? "  holds" : "  FAILS")
                  << "\n";
        return 0;
      });
      return 0;
    }
    if (*str) {
      with_variety_file(str_file, [&](const auto& V) {
        auto t = strand_table(V, str_seed, str_bound);
        std::cout << betti_table(t);
        std::cout << "ell = " << t.ell << "\n";
        std::cout << "a = " << t.gl_index_string() << " (beta_{i,2} computed for i <= " << t.bound << ")\n";
        if (t.bound_clipped) std::cerr << "warning: bound clipped to c + 1 = " << t.bound << "\n";
        std::cout << "reg = " << regularity_via_gin(V, derive_seed(str_seed, 4)) << "\n";
        return 0;
      });
      return 0;
    }
    if (*ver) {
      if (ver_regen) {
        std::vector<std::string> changes;
        auto text = regen_oracles(read_text_file(ver_corpus), &changes);
        write_text_file(ver_corpus, text);
        for (const auto& c : changes) std::cout << "updated " << c << "\n";
        std::cout << changes.size() << " oracle value(s) changed\n";
        return 0;
      }
      CampaignOptions opt;
      opt.tags = split_csv(ver_tags);
      opt.ids = split_csv(ver_ids);
      opt.field = FieldConfig::parse(ver_field);
      opt.seed = ver_seed;
      opt.samples = ver_samples;
      opt.workers = ver_workers;
      opt.confirm = !ver_no_confirm;
      if (ver_cache.empty())
        if (const char* env = std::getenv("QPLAB_CACHE_DIR")) ver_cache = env;
      opt.cache_dir = ver_cache;
      auto corpus = parse_corpus(read_text_file(ver_corpus));
      auto result = run_campaign(corpus, opt);
      for (const auto& e : result.report["entries"]) {
        std::cout << (e["status"] == "pass" ? "PASS " : "FAIL ") << e["id"].get<std::string>();
        if (e.contains("error")) std::cout << "  error: " << e["error"].get<std::string>();
        for (const auto& x : e.value("expected", json::array()))
          if (!x["pass"].get<bool>())
            std::cout << "  " << x["key"].get<std::string>() << "=" << x["computed"].dump() << " expected "
                      << x["expected"].dump();
        for (const auto& a : e.value("assertions", json::array()))
          if (!a["holds"].get<bool>()) std::cout << "  [" << a["name"].get<std::string>() << "]";
        if (e.contains("confirmation") && !e["confirmation"]["agrees"].get<bool>())
          std::cout << "  confirmation differs: " << e["confirmation"]["differing"].dump();
        std::cout << "\n";
      }
      const auto& s = result.report["summary"];
      std::cout << s["passed"] << "/" << s["entries"] << " entries passed in " << std::fixed << std::setprecision(2)
                << result.report["timing"]["total_seconds"].get<double>() << "s\n";
      if (!ver_json.empty()) write_text_file(ver_json, result.report.dump(2) + "\n");
      return result.passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
