#include "qplab/io.hpp"

#include <fstream>
#include <sstream>

#include "qplab/parse.hpp"

namespace qplab {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto body = strip_comment(line);
    if (!body.empty()) out.emplace_back(body);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

bool parse_bool(std::string_view v) {
  v = trim(v);
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error(ErrorKind::parse, "expected true or false, got '" + std::string(v) + "'");
}

RingHeader parse_header_line(std::string_view line) {
  if (!starts_with(line, "ring ")) throw Error(ErrorKind::parse, "expected 'ring r=<r> char=<p>'");
  RingHeader h;
  bool have_r = false, have_char = false;
  std::istringstream in{std::string(line.substr(5))};
  std::string tok;
  while (in >> tok) {
    if (starts_with(tok, "r=")) {
      h.r = std::stoi(tok.substr(2));
      have_r = true;
    } else if (starts_with(tok, "char=")) {
      h.field = FieldConfig::parse(tok.substr(5));
      have_char = true;
    } else {
      throw Error(ErrorKind::parse, "unknown ring attribute '" + tok + "'");
    }
  }
  if (!have_r || !have_char) throw Error(ErrorKind::parse, "ring line needs r= and char=");
  if (h.r < 0 || h.r + 1 > Monomial::kMaxVars)
    throw Error(ErrorKind::unsupported, "ambient dimension must be between 0 and 30");
  return h;
}

template <class F>
void check_field(const RingHeader& h, const F& field) {
  if (!(h.field == config_of(field)))
    throw Error(ErrorKind::field_mismatch, "file is over " + h.field.name() + ", requested " + field.name());
}

std::string char_string(const FieldConfig& f) {
  return f.kind == FieldConfig::Kind::rationals ? "0" : std::to_string(f.characteristic);
}

}  // namespace

RingHeader read_ring_header(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::parse, "empty file");
  return parse_header_line(lines.front());
}

template <class F>
Ideal<F> parse_ideal_text(const std::string& text, const F& field) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::parse, "empty file");
  auto h = parse_header_line(lines.front());
  check_field(h, field);
  std::vector<Polynomial<F>> gens;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto p = parse_polynomial(lines[i], field, h.r + 1);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return Ideal<F>(field, h.r + 1, std::move(gens));
}

template <class F>
std::string format_ideal(const Ideal<F>& I, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "ring r=" + std::to_string(I.nvars() - 1) + " char=" + char_string(config_of(I.field())) + "\n";
  for (const auto& g : I.generators()) out += g.to_string() + "\n";
  return out;
}

template <class F>
Variety<F> parse_variety_text(const std::string& text, const F& field) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::parse, "empty file");
  auto h = parse_header_line(lines.front());
  check_field(h, field);
  const int nv = h.r + 1;
  enum class Section { ideal, param, source } section = Section::ideal;
  std::vector<Polynomial<F>> gens, comps, source;
  int s = -1;
  bool totally_real = false, param_rational = true;
  std::string name = "variety";
  for (size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (starts_with(line, "param:")) {
      auto rest = trim(line.substr(6));
      if (!starts_with(rest, "s=")) throw Error(ErrorKind::parse, "expected 'param: s=<s>'");
      s = std::stoi(std::string(rest.substr(2)));
      if (s < 0 || s + 1 > Monomial::kMaxVars) throw Error(ErrorKind::unsupported, "source dimension out of range");
      section = Section::param;
    } else if (starts_with(line, "source_ideal:")) {
      if (s < 0) throw Error(ErrorKind::parse, "source_ideal before param");
      section = Section::source;
    } else if (starts_with(line, "totally_real:")) {
      totally_real = parse_bool(line.substr(13));
    } else if (starts_with(line, "param_rational:")) {
      param_rational = parse_bool(line.substr(15));
    } else if (starts_with(line, "name:")) {
      name = std::string(trim(line.substr(5)));
    } else if (section == Section::ideal) {
      auto p = parse_polynomial(line, field, nv);
      if (!p.is_zero()) gens.push_back(std::move(p));
    } else {
      auto p = parse_polynomial(line, field, s + 1);
      (section == Section::param ? comps : source).push_back(std::move(p));
    }
  }
  std::optional<RationalMap<F>> param;
  if (s >= 0) {
    if (static_cast<int>(comps.size()) != nv)
      throw Error(ErrorKind::parse, "param has " + std::to_string(comps.size()) + " components, expected " +
                                        std::to_string(nv));
    RationalMap<F> m;
    m.source_nvars = s + 1;
    m.components = std::move(comps);
    m.source_ideal = std::move(source);
    m.rational = param_rational;
    param = std::move(m);
  }
  return Variety<F>{Ideal<F>(field, nv, std::move(gens)), std::move(param), totally_real, std::move(name)};
}

template <class F>
std::string format_variety(const Variety<F>& V, const std::vector<std::string>& comments) {
  std::string out = format_ideal(V.ideal, comments);
  if (V.param) {
    out += "param: s=" + std::to_string(V.param->source_nvars - 1) + "\n";
    for (const auto& c : V.param->components) out += c.to_string() + "\n";
    if (!V.param->source_ideal.empty()) {
      out += "source_ideal:\n";
      for (const auto& g : V.param->source_ideal) out += g.to_string() + "\n";
    }
    out += std::string("param_rational: ") + (V.param->rational ? "true" : "false") + "\n";
  }
  out += std::string("totally_real: ") + (V.totally_real ? "true" : "false") + "\n";
  out += "name: " + V.name + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::usage, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::usage, "write to '" + path + "' failed");
}

#define QPLAB_INSTANTIATE(F)                                                          \
  template Ideal<F> parse_ideal_text(const std::string&, const F&);                   \
  template std::string format_ideal(const Ideal<F>&, const std::vector<std::string>&); \
  template Variety<F> parse_variety_text(const std::string&, const F&);               \
  template std::string format_variety(const Variety<F>&, const std::vector<std::string>&);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
