#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "qplab/groebner.hpp"
#include "qplab/linalg.hpp"
#include "qplab/parse.hpp"

namespace qplab {

CacheCounters& cache_counters() {
  static CacheCounters counters;
  return counters;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error(ErrorKind::unsupported, "SHA-256 digest failed");
  }
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

std::filesystem::path disk_cache_dir() {
  const char* dir = std::getenv("QPLAB_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir);
}

int weighted_degree_of(const Monomial& m, const std::vector<int>& w) { return m.weighted_degree(w); }

}  // namespace

template <class F>
Ideal<F>::Ideal(F field, int nvars, std::vector<Poly> gens, std::vector<int> weights)
    : field_(std::move(field)), nvars_(nvars), weights_(std::move(weights)), cache_(std::make_shared<Cache>()) {
  if (!weights_.empty() && static_cast<int>(weights_.size()) != nvars_)
    throw Error(ErrorKind::ring_mismatch, "weight vector length does not match the ring");
  if (!weights_.empty() && std::all_of(weights_.begin(), weights_.end(), [&](int w) { return w == weights_.front() && w > 0; }))
    weights_.clear();
  for (auto& g : gens) {
    if (!(g.field() == field_)) throw Error(ErrorKind::field_mismatch, "generator over " + g.field().name());
    if (g.nvars() != nvars_) throw Error(ErrorKind::ring_mismatch, "generator in the wrong ring");
    if (g.is_zero()) continue;
    int d = weighted_degree_of(g.terms().front().mono, weights_);
    for (const auto& t : g.terms())
      if (weighted_degree_of(t.mono, weights_) != d)
        throw Error(ErrorKind::domain, "ideal generators must be homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

template <class F>
std::string Ideal<F>::cache_key(const MonomialOrder& order, int bound) const {
  std::vector<std::string> lines;
  for (const auto& g : gens_) lines.push_back(g.monic().to_string());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::ostringstream s;
  s << "field=" << field_.name() << "\nnvars=" << nvars_ << "\norder=" << order.name() << "\nbound=" << bound
    << "\nweights=";
  for (int w : weights_) s << w << ',';
  s << '\n';
  for (const auto& l : lines) s << l << '\n';
  return sha256_hex(s.str());
}

template <class F>
std::shared_ptr<const std::vector<Polynomial<F>>> Ideal<F>::lookup(const std::string& key) const {
  std::shared_lock lock(cache_->mutex);
  auto it = cache_->gbs.find(key);
  return it == cache_->gbs.end() ? nullptr : it->second;
}

template <class F>
std::shared_ptr<const std::vector<Polynomial<F>>> Ideal<F>::store(const std::string& key,
                                                                  std::vector<Poly> gb) const {
  auto ptr = std::make_shared<const std::vector<Poly>>(std::move(gb));
  std::unique_lock lock(cache_->mutex);
  auto [it, inserted] = cache_->gbs.emplace(key, ptr);
  return it->second;  // first write wins
}

template <class F>
void Ideal<F>::seed_groebner_basis(const MonomialOrder& order, std::vector<Poly> gb) const {
  store(order.name() + "|-1", std::move(gb));
}

namespace {

template <class F>
std::optional<std::vector<Polynomial<F>>> read_disk_gb(const std::filesystem::path& file, const F& field,
                                                       int nvars) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line.rfind("gb ", 0) != 0) return std::nullopt;
  std::vector<Polynomial<F>> out;
  try {
    while (std::getline(in, line)) {
      if (strip_comment(line).empty()) continue;
      out.push_back(parse_polynomial(line, field, nvars));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

template <class F>
void write_disk_gb(const std::filesystem::path& dir, const std::string& key, const std::vector<Polynomial<F>>& gb) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto tmp = dir / (key + ".tmp" + std::to_string(reinterpret_cast<uintptr_t>(&gb)));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "gb " << gb.size() << '\n';
    for (const auto& g : gb) out << g.to_string() << '\n';
  }
  std::filesystem::rename(tmp, dir / (key + ".gb"), ec);
}

}  // namespace

template <class F>
const std::vector<Polynomial<F>>& Ideal<F>::groebner_basis(const MonomialOrder& order) const {
  const std::string key = order.name() + "|-1";
  if (auto hit = lookup(key)) {
    ++cache_counters().memory_hits;
    return *hit;
  }
  auto dir = disk_cache_dir();
  std::string digest;
  // the disk cache is only worth it for nontrivial inputs
  if (!dir.empty() && !gens_.empty()) {
    digest = cache_key(order);
    if (auto gb = read_disk_gb(dir / (digest + ".gb"), field_, nvars_)) {
      ++cache_counters().disk_hits;
      return *store(key, std::move(*gb));
    }
  }
  GbOptions opts;
  opts.order = order;
  opts.weights = weights_;
  auto gb = compute_groebner_basis(gens_, opts);
  ++cache_counters().computed;
  if (!digest.empty()) write_disk_gb(dir, digest, gb);
  return *store(key, std::move(gb));
}

template <class F>
std::vector<Polynomial<F>> Ideal<F>::truncated_groebner_basis(const MonomialOrder& order, int bound) const {
  auto full = lookup(order.name() + "|-1");
  std::shared_ptr<const std::vector<Poly>> src = full;
  if (!src) {
    const std::string key = order.name() + "|" + std::to_string(bound);
    src = lookup(key);
    if (!src) {
      GbOptions opts;
      opts.order = order;
      opts.weights = weights_;
      opts.degree_bound = bound;
      src = store(key, compute_groebner_basis(gens_, opts));
    } else {
      ++cache_counters().memory_hits;
    }
  } else {
    ++cache_counters().memory_hits;
  }
  std::vector<Poly> out;
  for (const auto& g : *src)
    if (weighted_degree_of(g.leading_term(order).mono, weights_) <= bound) out.push_back(g);
  return out;
}

template <class F>
const HilbertData& Ideal<F>::hilbert() const {
  {
    std::shared_lock lock(cache_->mutex);
    if (cache_->hilbert) return *cache_->hilbert;
  }
  if (!weights_.empty()) throw Error(ErrorKind::unsupported, "Hilbert data needs the standard grading");
  std::vector<Monomial> leads;
  for (const auto& g : groebner_basis()) leads.push_back(g.leading_term().mono);
  auto h = std::make_shared<const HilbertData>(hilbert_from_monomials(leads, nvars_));
  std::unique_lock lock(cache_->mutex);
  if (!cache_->hilbert) cache_->hilbert = h;
  return *cache_->hilbert;
}

template <class F>
bool Ideal<F>::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (f.nvars() != nvars_) throw Error(ErrorKind::ring_mismatch, "polynomial in the wrong ring");
  int deg = 0;
  for (const auto& t : f.terms()) deg = std::max(deg, weighted_degree_of(t.mono, weights_));
  auto gb = truncated_groebner_basis(MonomialOrder::grevlex(), deg);
  return reduce(f, gb, MonomialOrder::grevlex()).is_zero();
}

template <class F>
bool Ideal<F>::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

template <class F>
bool Ideal<F>::is_unit() const {
  for (const auto& g : gens_)
    if (g.degree() == 0) return true;
  for (const auto& g : groebner_basis())
    if (g.degree() == 0) return true;
  return false;
}

template <class F>
Ideal<F> elimination_ideal(const Ideal<F>& I, int k) {
  if (k < 0 || k > I.nvars()) throw Error(ErrorKind::domain, "elimination count out of range");
  if (k == 0) return I;
  const int rest = I.nvars() - k;
  std::vector<int> weights;
  if (!I.weights().empty()) weights.assign(I.weights().begin() + k, I.weights().end());
  std::vector<Polynomial<F>> kept;
  for (const auto& g : I.groebner_basis(MonomialOrder::block(k)))
    if (g.partial_degree(0, k) == 0) kept.push_back(g.relabeled(-k, rest));
  Ideal<F> out(I.field(), rest, kept, weights);
  if (rest > 0) out.seed_groebner_basis(MonomialOrder::grevlex(), kept);
  return out;
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& J, const Polynomial<F>& f) {
  if (f.is_zero()) throw Error(ErrorKind::domain, "quotient by the zero polynomial");
  if (f.nvars() != J.nvars()) throw Error(ErrorKind::ring_mismatch, "quotient by a polynomial in another ring");
  if (J.is_zero()) return J;
  const int n = J.nvars();
  const F& K = J.field();
  std::vector<int> weights(n + 1, 1);
  weights[0] = 0;
  for (int i = 0; i < n; ++i) weights[i + 1] = J.weights().empty() ? 1 : J.weights()[i];
  auto t = Polynomial<F>::variable(K, n + 1, 0);
  auto one = Polynomial<F>::constant(K, n + 1, K.one());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : J.generators()) gens.push_back(t * g.relabeled(1, n + 1));
  gens.push_back((one - t) * f.relabeled(1, n + 1));
  GbOptions opts;
  opts.order = MonomialOrder::block(1);
  opts.weights = weights;
  std::vector<Polynomial<F>> quotients;
  for (const auto& g : compute_groebner_basis(gens, opts)) {
    if (g.partial_degree(0, 1) != 0) continue;
    quotients.push_back(divide_exact(g.relabeled(-1, n), f));
  }
  return Ideal<F>(K, n, std::move(quotients), J.weights());
}

template <class F>
Ideal<F> saturate_by(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) throw Error(ErrorKind::domain, "saturation by the zero polynomial");
  Ideal<F> cur = I;
  while (true) {
    Ideal<F> next = ideal_quotient(cur, f);
    if (cur.contains(next)) return cur;
    cur = std::move(next);
  }
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::ring_mismatch, "ideals live in different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.field(), a.nvars(), std::move(gens), a.weights());
}

template <class F>
std::vector<Polynomial<F>> span_basis(const std::vector<Polynomial<F>>& polys, int nvars, const F& field) {
  std::vector<Monomial> monos;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) monos.push_back(t.mono);
  const auto order = MonomialOrder::grevlex();
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b, nvars) > 0; });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::unordered_map<Monomial, size_t, MonomialHash> index;
  for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  DenseMatrix<F> m(field, polys.size(), monos.size());
  for (size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) m.at(r, index[t.mono]) = t.coef;
  auto red = rref(std::move(m));
  std::vector<Polynomial<F>> out;
  for (size_t r = 0; r < red.pivots.size(); ++r) {
    std::vector<Term<F>> terms;
    for (size_t c = 0; c < monos.size(); ++c)
      if (!field.is_zero(red.reduced.at(r, c))) terms.push_back({monos[c], red.reduced.at(r, c)});
    out.push_back(Polynomial<F>::from_sorted_terms(field, nvars, std::move(terms)));
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> graded_piece_basis(const Ideal<F>& I, int t) {
  if (t < 0) throw Error(ErrorKind::domain, "negative degree");
  if (I.is_zero()) return {};
  const int n = I.nvars();
  std::vector<Polynomial<F>> products;
  for (const auto& g : I.truncated_groebner_basis(MonomialOrder::grevlex(), t)) {
    int e = t - g.degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(n, e)) products.push_back(g.times_monomial(m, I.field().one()));
  }
  return span_basis(products, n, I.field());
}

template <class F>
int64_t graded_piece_dim(const Ideal<F>& I, int t) {
  if (t < 0) throw Error(ErrorKind::domain, "negative degree");
  if (I.is_zero()) return 0;
  return static_cast<int64_t>(count_monomials(I.nvars(), t)) - I.hilbert().hf(t);
}

namespace {

template <class F>
std::vector<Polynomial<F>> shifted_products(const std::vector<Polynomial<F>>& basis, int nvars) {
  std::vector<Polynomial<F>> out;
  for (const auto& b : basis)
    for (int i = 0; i < nvars; ++i) out.push_back(b.times_monomial(Monomial::variable(i), b.field().one()));
  return out;
}

}  // namespace

template <class F>
int64_t minimal_generator_count(const Ideal<F>& I, int t) {
  if (t <= 0) return t == 0 && I.is_unit() ? 1 : 0;
  auto cur = graded_piece_basis(I, t);
  auto below = span_basis(shifted_products(graded_piece_basis(I, t - 1), I.nvars()), I.nvars(), I.field());
  return static_cast<int64_t>(cur.size()) - static_cast<int64_t>(below.size());
}

template <class F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& I) {
  std::vector<Polynomial<F>> gens = I.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.degree() < b.degree(); });
  std::vector<Polynomial<F>> out;
  size_t i = 0;
  while (i < gens.size()) {
    const int t = gens[i].degree();
    std::vector<Polynomial<F>> span;
    if (t > 0) span = shifted_products(graded_piece_basis(I, t - 1), I.nvars());
    size_t have = span_basis(span, I.nvars(), I.field()).size();
    for (; i < gens.size() && gens[i].degree() == t; ++i) {
      span.push_back(gens[i]);
      size_t now = span_basis(span, I.nvars(), I.field()).size();
      if (now > have) {
        out.push_back(gens[i]);
        have = now;
      } else {
        span.pop_back();
      }
    }
  }
  return out;
}

#define QPLAB_INSTANTIATE(F)                                                      \
  template class Ideal<F>;                                                        \
  template Ideal<F> elimination_ideal(const Ideal<F>&, int);                      \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Polynomial<F>&);        \
  template Ideal<F> saturate_by(const Ideal<F>&, const Polynomial<F>&);           \
  template Ideal<F> ideal_sum(const Ideal<F>&, const Ideal<F>&);                  \
  template std::vector<Polynomial<F>> span_basis(const std::vector<Polynomial<F>>&, int, const F&); \
  template std::vector<Polynomial<F>> graded_piece_basis(const Ideal<F>&, int);   \
  template int64_t graded_piece_dim(const Ideal<F>&, int);                        \
  template int64_t minimal_generator_count(const Ideal<F>&, int);                 \
  template std::vector<Polynomial<F>> minimal_generators(const Ideal<F>&);

QPLAB_INSTANTIATE(PrimeField)
QPLAB_INSTANTIATE(RationalField)

}  // namespace qplab
