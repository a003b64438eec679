#include "qplab/parse.hpp"

#include <cctype>

namespace qplab {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

mpq_class parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::parse, "empty number");
  std::string s(text);
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_ok = start < s.size();
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash && i > start && i + 1 < s.size()) {
      seen_slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits_ok = false;
    }
  }
  if (!digits_ok) throw Error(ErrorKind::parse, "bad number '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::parse, "bad number '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  struct RawTerm {
    mpq_class coef;
    std::vector<int> exps;
  };

  std::vector<RawTerm> run() {
    std::vector<RawTerm> out;
    skip_ws();
    if (pos_ == text_.size()) throw error("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      RawTerm t = term();
      if (sign < 0) t.coef = -t.coef;
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  RawTerm term() {
    RawTerm t{mpq_class(1), std::vector<int>(nvars_, 0)};
    bool need_factor = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) {
        if (need_factor) throw error("dangling operator");
        break;
      }
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coef *= number();
      } else if (c == 'x') {
        ++pos_;
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw error("variable index expected after 'x'");
        int idx = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (idx >= nvars_) throw error("variable x" + std::to_string(idx) + " outside the ring");
        int e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          size_t s2 = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (s2 == pos_) throw error("exponent expected after '^'");
          e = std::stoi(std::string(text_.substr(s2, pos_ - s2)));
        }
        t.exps[idx] += e;
      } else {
        throw error(std::string("unexpected character '") + c + "'");
      }
      need_factor = false;
      skip_ws();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        need_factor = true;
        continue;
      }
      break;
    }
    return t;
  }

  mpq_class number() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      size_t s2 = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (s2 == pos_) throw error("denominator expected");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  Error error(const std::string& msg) const {
    return Error(ErrorKind::parse, msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                                       std::string(text_) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
  int nvars_;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const F& field, int nvars) {
  text = strip_comment(text);
  PolyParser parser(text, nvars);
  std::vector<Term<F>> terms;
  for (auto& raw : parser.run()) {
    auto c = field.from_rational(raw.coef);
    terms.push_back({Monomial::from_exponents(raw.exps), c});
  }
  return Polynomial<F>::from_terms(field, nvars, std::move(terms));
}

template <class F>
std::vector<typename F::Elem> parse_point(std::string_view text, const F& field) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error(ErrorKind::parse, "point literal must look like [a0:a1:...]");
  text = text.substr(1, text.size() - 2);
  std::vector<typename F::Elem> out;
  size_t start = 0;
  while (true) {
    size_t colon = text.find(':', start);
    auto piece = text.substr(start, colon == std::string_view::npos ? text.npos : colon - start);
    out.push_back(field.from_rational(parse_rational(piece)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  bool all_zero = true;
  for (const auto& c : out) all_zero = all_zero && field.is_zero(c);
  if (all_zero) throw Error(ErrorKind::domain, "the zero vector is not a projective point");
  return out;
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const PrimeField&, int);
template Polynomial<RationalField> parse_polynomial(std::string_view, const RationalField&, int);
template std::vector<PrimeField::Elem> parse_point(std::string_view, const PrimeField&);
template std::vector<RationalField::Elem> parse_point(std::string_view, const RationalField&);

}  // namespace qplab
