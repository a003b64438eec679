#include "qplab/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qplab/parse.hpp"

namespace qplab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::parse, "corpus line " + std::to_string(line) + ": " + what);
}

// Minimal value parser for the TOML subset: integers, booleans, basic
// strings and (nested) arrays.
class ValueParser {
 public:
  ValueParser(std::string_view s, int line) : s_(s), line_(line) {}

  json parse() {
    json v = value();
    skip_ws();
    if (pos_ != s_.size()) fail(line_, "trailing characters after value");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  json value() {
    skip_ws();
    if (pos_ >= s_.size()) fail(line_, "missing value");
    char ch = s_[pos_];
    if (ch == '[') return array();
    if (ch == '"') return string();
    if (s_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (s_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    size_t end = pos_;
    if (end < s_.size() && (s_[end] == '-' || s_[end] == '+')) ++end;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    int64_t v = 0;
    const char* first = s_.data() + pos_ + (s_[pos_] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s_.data() + end, v);
    if (ec != std::errc() || ptr != s_.data() + end) fail(line_, "unsupported value");
    pos_ = end;
    return v;
  }

  json string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') fail(line_, "escapes are not supported in corpus strings");
      out += s_[pos_++];
    }
    if (pos_ >= s_.size()) fail(line_, "unterminated string");
    ++pos_;
    return out;
  }

  json array() {
    ++pos_;
    json arr = json::array();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return arr;
    }
    while (true) {
      arr.push_back(value());
      skip_ws();
      if (pos_ >= s_.size()) fail(line_, "unterminated array");
      if (s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return arr;
      }
      fail(line_, "expected ',' or ']'");
    }
  }

  std::string_view s_;
  size_t pos_ = 0;
  int line_;
};

// Strips a `#` comment that is not inside a string.
std::string_view strip_toml_comment(std::string_view line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return trim(line.substr(0, i));
  }
  return trim(line);
}

std::vector<int> int_array(const json& v, int line, const std::string& key) {
  if (!v.is_array()) fail(line, key + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) fail(line, key + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<int> csv_ints(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ','))
    if (!trim(item).empty()) out.push_back(std::stoi(std::string(trim(item))));
  return out;
}

}  // namespace

bool CorpusEntry::has_tag(const std::string& t) const { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

std::string CorpusEntry::signature() const {
  json j;
  j["id"] = id;
  j["family"] = family;
  j["params"] = params;
  j["on_scroll"] = on_scroll;
  j["points"] = points;
  j["container"] = container;
  j["seed"] = seed;
  return j.dump();
}

const std::vector<std::string>& known_tags() {
  static const std::vector<std::string> tags = {"A", "1.2", "1.3", "1.4", "3.1", "P3.3", "PEI", "CAST"};
  return tags;
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto line = strip_toml_comment(raw);
    if (line.empty()) continue;
    if (line == "[[entry]]") {
      out.emplace_back();
      continue;
    }
    if (line.front() == '[') fail(lineno, "only [[entry]] tables are supported");
    if (out.empty()) fail(lineno, "key outside of an [[entry]] table");
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(lineno, "expected key = value");
    std::string key(trim(line.substr(0, eq)));
    json v = ValueParser(line.substr(eq + 1), lineno).parse();
    auto& e = out.back();
    auto need_string = [&]() -> std::string {
      if (!v.is_string()) fail(lineno, key + " must be a string");
      return v.get<std::string>();
    };
    if (key == "id") {
      e.id = need_string();
    } else if (key == "family") {
      e.family = need_string();
    } else if (key == "params") {
      e.params = int_array(v, lineno, key);
    } else if (key == "on_scroll") {
      if (!v.is_boolean()) fail(lineno, "on_scroll must be a boolean");
      e.on_scroll = v.get<bool>();
    } else if (key == "points") {
      e.points = need_string();
    } else if (key == "container") {
      e.container = need_string();
    } else if (key == "seed") {
      if (!v.is_number_integer() || v.get<int64_t>() < 0) fail(lineno, "seed must be a nonnegative integer");
      e.seed = v.get<uint64_t>();
    } else if (key == "tags") {
      if (!v.is_array()) fail(lineno, "tags must be an array of strings");
      for (const auto& t : v) {
        if (!t.is_string()) fail(lineno, "tags must be an array of strings");
        auto tag = t.get<std::string>();
        const auto& kt = known_tags();
        if (std::find(kt.begin(), kt.end(), tag) == kt.end()) fail(lineno, "unknown tag '" + tag + "'");
        e.tags.push_back(tag);
      }
    } else if (key.rfind("expect.", 0) == 0) {
      if (!v.is_array() || v.size() != 2 || !v[1].is_string())
        fail(lineno, key + " must be [value, \"source\"]");
      auto source = v[1].get<std::string>();
      if (source != "published" && source != "trivial" && source.rfind("oracle:", 0) != 0)
        fail(lineno, "source must be published, trivial or oracle:<name>");
      e.expect.push_back({key.substr(7), v[0], source, lineno});
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  std::vector<std::string> ids;
  for (const auto& e : out) {
    if (e.id.empty() || e.family.empty()) throw Error(ErrorKind::parse, "every corpus entry needs id and family");
    if (std::find(ids.begin(), ids.end(), e.id) != ids.end())
      throw Error(ErrorKind::parse, "duplicate corpus id '" + e.id + "'");
    ids.push_back(e.id);
  }
  return out;
}

namespace {

template <class F>
std::vector<std::vector<typename F::Elem>> genus3_points(const std::string& spec, const F& K,
                                                         const Polynomial<F>& quartic, uint64_t seed,
                                                         bool* rational) {
  *rational = true;
  std::vector<std::vector<typename F::Elem>> pts;
  if (spec.empty()) return pts;
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "rational") {
    auto all = fermat_rational_points(K);
    for (int i : csv_ints(rest)) {
      if (i < 0 || i >= static_cast<int>(all.size())) throw Error(ErrorKind::domain, "no rational point " + rest);
      pts.push_back(all[i]);
    }
    return pts;
  }
  if (kind == "generic") {
    *rational = false;
    const int count = std::stoi(rest);
    if constexpr (is_prime_field_v<F>) {
      Ideal<F> C(K, 3, {quartic});
      Rng rng(derive_seed(seed, 0x9e));
      while (static_cast<int>(pts.size()) < count) {
        auto p = find_point_by_slicing(C, rng);
        bool fresh = true;
        for (const auto& q : pts) {
          // projectively equal points would not be distinct base points
          bool same = true;
          for (int a = 0; a < 3 && same; ++a)
            for (int b = 0; b < 3 && same; ++b)
              same = K.mul(p[a], q[b]) == K.mul(p[b], q[a]);
          fresh = fresh && !same;
        }
        if (fresh) pts.push_back(p);
      }
      return pts;
    } else {
      throw Error(ErrorKind::no_sampler, "generic points on the quartic need a prime field");
    }
  }
  throw Error(ErrorKind::parse, "unknown point specification '" + spec + "'");
}

}  // namespace

template <class F>
Variety<F> build_family(const std::string& family, const std::vector<int>& params, bool on_scroll,
                        const std::string& points, const F& K, uint64_t seed,
                        std::optional<Variety<F>>* container) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw Error(ErrorKind::usage, family + " takes " + std::to_string(n) + " parameter(s), got " +
                                        std::to_string(params.size()));
  };
  if (family == "rnc") {
    need(1);
    return rational_normal_curve(K, params[0]);
  }
  if (family == "scroll") {
    if (params.empty()) throw Error(ErrorKind::usage, "scroll needs at least one parameter");
    return scroll(K, params);
  }
  if (family == "veronese") {
    need(2);
    return veronese(K, params[0], params[1]);
  }
  if (family == "quadric") {
    need(1);
    return quadric(K, params[0]);
  }
  if (family == "pspace") {
    need(1);
    return projective_space(K, params[0]);
  }
  if (family == "del_pezzo") {
    need(0);
    auto [X, Y] = del_pezzo_quintic(K);
    if (container) *container = Y;
    return X;
  }
  if (family == "cmr") {
    need(2);
    return cmr_curve(K, params[0], params[1], on_scroll, seed);
  }
  if (family == "genus3") {
    need(1);
    auto f = fermat_quartic(K);
    bool rational = true;
    auto pts = genus3_points(points, K, f, seed, &rational);
    return plane_curve_reembed(f, params[0], pts, rational);
  }
  throw Error(ErrorKind::usage, "unknown family '" + family + "'");
}

template <class F>
BuiltEntry<F> build_entry(const CorpusEntry& e, const F& K, uint64_t seed) {
  std::optional<Variety<F>> constructed;
  BuiltEntry<F> out{build_family(e.family, e.params, e.on_scroll, e.points, K, seed, &constructed), std::nullopt,
                    false};
  out.X.name = e.id;
  const auto& c = e.container;
  if (c == "none") {
  } else if (c == "self") {
    out.container = out.X;
  } else if (c == "constructed") {
    if (!constructed) throw Error(ErrorKind::usage, e.family + " does not construct a container");
    out.container = constructed;
  } else if (c == "extract") {
    out.extract_container = true;
  } else {
    auto colon = c.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::parse, "bad container '" + c + "'");
    out.container = build_family<F>(c.substr(0, colon), csv_ints(c.substr(colon + 1)), false, "", K, seed);
  }
  return out;
}

#define QPLAB_INSTANTIATE(F)                                                                                      \
  template BuiltEntry<F> build_entry(const CorpusEntry&, const F&, uint64_t);                                     \
  template Variety<F> build_family(const std::string&, const std::vector<int>&, bool, const std::string&, const F&, \
                                   uint64_t, std::optional<Variety<F>>*);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
