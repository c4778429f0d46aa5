#include "vcopy/enveloping.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "vcopy/errors.hpp"
#include "vcopy/expr_parser.hpp"

namespace vcopy {

namespace {

using Terms = PbwElement::Terms;

thread_local unsigned tl_degree_cap = 12;

// Per-algebra memo of normal_form(word * X_g), keyed by word with g appended.
using RmulCache = std::unordered_map<Word, Terms>;
thread_local std::unordered_map<std::uint64_t, RmulCache> tl_cache;

void accumulate(Terms& acc, const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = acc.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

// Normal form of (normal word u) * X_g.
const Terms& rmul(const LieAlgebra& alg, RmulCache& cache, const Word& u, GenIndex g) {
  Word key = u;
  key.push_back(static_cast<char16_t>(g));
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (key.size() > tl_degree_cap)
    throw DegreeOverflow("normal ordering exceeded degree cap " + std::to_string(tl_degree_cap));

  Terms res;
  if (u.empty() || static_cast<GenIndex>(u.back()) <= g) {
    res.emplace(key, Rational(1));
  } else {
    // u = u' x with x > g:  u' x g = (u' g) x + u' [x, g]
    const GenIndex x = static_cast<GenIndex>(u.back());
    const Word prefix = u.substr(0, u.size() - 1);
    const Terms first = rmul(alg, cache, prefix, g);
    for (const auto& [w, c] : first) {
      const Terms& shifted = rmul(alg, cache, w, x);
      for (const auto& [w2, c2] : shifted) accumulate(res, w2, c * c2);
    }
    for (const auto& [k, c] : alg.structure(x, g)) {
      const Terms& lower = rmul(alg, cache, prefix, k);
      for (const auto& [w2, c2] : lower) accumulate(res, w2, c * c2);
    }
  }
  return cache.emplace(std::move(key), std::move(res)).first->second;
}

RmulCache& cache_for(const LieAlgebra& alg) { return tl_cache[alg.id()]; }

// Normal form of c * (normal word a) * (arbitrary word b), added into acc.
void mul_words_into(const LieAlgebra& alg, RmulCache& cache, Terms& acc, const Word& a,
                    const Word& b, const Rational& c) {
  if (b.empty()) {
    accumulate(acc, a, c);
    return;
  }
  Terms cur;
  cur.emplace(a, c);
  for (char16_t letter : b) {
    Terms next;
    for (const auto& [w, cw] : cur) {
      for (const auto& [w2, c2] : rmul(alg, cache, w, static_cast<GenIndex>(letter)))
        accumulate(next, w2, cw * c2);
    }
    cur.swap(next);
  }
  for (const auto& [w, cw] : cur) accumulate(acc, w, cw);
}

}  // namespace

bool is_normal_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

unsigned degree_cap() { return tl_degree_cap; }

DegreeCapGuard::DegreeCapGuard(unsigned cap) : saved_(tl_degree_cap) { tl_degree_cap = cap; }
DegreeCapGuard::~DegreeCapGuard() { tl_degree_cap = saved_; }

void clear_pbw_cache() { tl_cache.clear(); }

PbwElement::PbwElement(AlgebraPtr algebra) : alg_(std::move(algebra)) {
  if (!alg_) throw PreconditionError("PBW element without an algebra");
}

PbwElement PbwElement::scalar(AlgebraPtr algebra, const Rational& c) {
  PbwElement e(std::move(algebra));
  accumulate(e.terms_, Word(), c);
  return e;
}

PbwElement PbwElement::generator(AlgebraPtr algebra, GenIndex i) {
  if (i >= algebra->dim()) throw MalformedInput("generator index out of range");
  PbwElement e(std::move(algebra));
  e.terms_.emplace(Word(1, static_cast<char16_t>(i)), Rational(1));
  return e;
}

PbwElement PbwElement::generator(AlgebraPtr algebra, std::string_view name) {
  GenIndex i = algebra->index(name);
  return generator(std::move(algebra), i);
}

int PbwElement::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

int PbwElement::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

PbwElement PbwElement::top_part() const {
  if (terms_.empty()) return *this;
  return homogeneous_part(static_cast<unsigned>(degree()));
}

PbwElement PbwElement::homogeneous_part(unsigned d) const {
  PbwElement r(alg_);
  for (const auto& [w, c] : terms_)
    if (w.size() == d) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

std::vector<GenIndex> PbwElement::support() const {
  std::vector<GenIndex> out;
  for (const auto& [w, c] : terms_)
    for (char16_t g : w) out.push_back(static_cast<GenIndex>(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational PbwElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PbwElement::add_normal_term(const Word& w, const Rational& c) {
  if (!is_normal_word(w)) throw PreconditionError("word is not in PBW normal form");
  for (char16_t g : w)
    if (static_cast<std::size_t>(g) >= alg_->dim()) throw MalformedInput("generator index out of range");
  accumulate(terms_, w, c);
}

void PbwElement::check_same(const PbwElement& o) const {
  if (alg_->id() != o.alg_->id()) throw MalformedInput("elements of different enveloping algebras");
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

PbwElement PbwElement::operator+(const PbwElement& o) const {
  PbwElement r(*this);
  r += o;
  return r;
}

PbwElement PbwElement::operator-(const PbwElement& o) const {
  PbwElement r(*this);
  r -= o;
  return r;
}

PbwElement PbwElement::operator*(const PbwElement& o) const { return u_mul(*this, o); }

PbwElement PbwElement::scaled(const Rational& c) const {
  PbwElement r(alg_);
  if (vcopy::is_zero(c)) return r;
  for (const auto& [w, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, a * c);
  return r;
}

bool PbwElement::operator==(const PbwElement& o) const {
  return alg_->id() == o.alg_->id() && terms_ == o.terms_;
}

PbwElement PbwElement::rebased(AlgebraPtr other) const {
  if (other->dim() != alg_->dim()) throw MalformedInput("rebasing onto an algebra of different dimension");
  PbwElement r(std::move(other));
  r.terms_ = terms_;
  return r;
}

namespace {

template <class CoeffFmt, class LetterFmt>
std::string render(const Terms& terms, CoeffFmt coeff_fmt, LetterFmt letter_fmt, const char* times) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (w.empty() || !is_one(mag)) {
      os << coeff_fmt(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (wrote) os << times;
      os << letter_fmt(static_cast<GenIndex>(w[i]), static_cast<unsigned>(j - i));
      wrote = true;
      i = j;
    }
  }
  return os.str();
}

}  // namespace

std::string PbwElement::to_text() const {
  // Words are stored normal-ordered, so equal letters are adjacent and powers are exact.
  return render(
      terms_, [](const Rational& c) { return vcopy::to_string(c); },
      [&](GenIndex g, unsigned e) {
        return alg_->name(g) + (e > 1 ? "^" + std::to_string(e) : std::string());
      },
      "*");
}

std::string PbwElement::to_latex() const {
  return render(
      terms_, [](const Rational& c) { return vcopy::to_latex(c); },
      [&](GenIndex g, unsigned e) {
        return alg_->latex_name(g) + (e > 1 ? "^{" + std::to_string(e) + "}" : std::string());
      },
      " ");
}

PbwElement pbw_normalize(const AlgebraPtr& algebra, const Word& word, const Rational& coeff) {
  for (char16_t g : word)
    if (static_cast<std::size_t>(g) >= algebra->dim()) throw MalformedInput("generator index out of range");
  PbwElement r(algebra);
  if (is_zero(coeff)) return r;
  mul_words_into(*algebra, cache_for(*algebra), r.terms_, Word(), word, coeff);
  return r;
}

PbwElement u_mul(const PbwElement& a, const PbwElement& b) {
  if (a.algebra()->id() != b.algebra()->id())
    throw MalformedInput("elements of different enveloping algebras");
  const LieAlgebra& alg = a.lie();
  RmulCache& cache = cache_for(alg);
  Terms acc;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) mul_words_into(alg, cache, acc, wa, wb, ca * cb);
  PbwElement r(a.algebra());
  for (const auto& [w, c] : acc) r.add_normal_term(w, c);
  return r;
}

PbwElement u_commutator(const PbwElement& a, const PbwElement& b) { return u_mul(a, b) - u_mul(b, a); }

namespace {

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, e] : m.factors()) h = (h ^ (v * 131u + e)) * 1099511628211ull;
    return h;
  }
};

struct MonoEq {
  bool operator()(const Monomial& a, const Monomial& b) const { return a == b; }
};

class Symmetrizer {
 public:
  Symmetrizer(const AlgebraPtr& alg, const std::function<PbwElement(VarIndex)>& image)
      : alg_(alg), image_(image) {}

  const PbwElement& sym(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    PbwElement res(alg_);
    if (m.is_one()) {
      res = PbwElement::unit(alg_);
    } else {
      const unsigned p = m.degree();
      for (const auto& [v, e] : m.factors()) {
        const PbwElement& rest = sym(m / Monomial::var(v));
        Rational weight(e, p);
        weight.canonicalize();
        res += u_mul(letter(v), rest).scaled(weight);
      }
    }
    return memo_.emplace(m, std::move(res)).first->second;
  }

 private:
  const PbwElement& letter(VarIndex v) {
    auto it = letters_.find(v);
    if (it == letters_.end()) it = letters_.emplace(v, image_(v)).first;
    return it->second;
  }

  AlgebraPtr alg_;
  const std::function<PbwElement(VarIndex)>& image_;
  std::unordered_map<Monomial, PbwElement, MonoHash, MonoEq> memo_;
  std::map<VarIndex, PbwElement> letters_;
};

}  // namespace

PbwElement symmetrized_product(const AlgebraPtr& algebra, const Monomial& m,
                               const std::function<PbwElement(VarIndex)>& image) {
  Symmetrizer s(algebra, image);
  return s.sym(m);
}

PbwElement symmetrized_substitution(const AlgebraPtr& algebra, const CommPoly& p,
                                    const std::function<PbwElement(VarIndex)>& image) {
  Symmetrizer s(algebra, image);
  PbwElement out(algebra);
  for (const auto& [m, c] : p.terms()) out += s.sym(m).scaled(c);
  return out;
}

PbwElement symmetrize(const AlgebraPtr& algebra, const CommPoly& p) {
  if (p.nvars() != algebra->dim())
    throw MalformedInput("polynomial variable universe does not match the algebra");
  std::function<PbwElement(VarIndex)> gen = [&](VarIndex v) {
    return PbwElement::generator(algebra, static_cast<GenIndex>(v));
  };
  return symmetrized_substitution(algebra, p, gen);
}

namespace {

Monomial word_monomial(const Word& w) {
  std::vector<std::pair<VarIndex, unsigned>> pairs;
  for (char16_t g : w) pairs.emplace_back(static_cast<VarIndex>(g), 1u);
  return Monomial::from_pairs(std::move(pairs));
}

}  // namespace

CommPoly commutative_image(const PbwElement& a) {
  CommPoly p(a.lie().dim());
  for (const auto& [w, c] : a.terms()) p.add_term(word_monomial(w), c);
  return p;
}

CommPoly principal_symbol(const PbwElement& a) { return commutative_image(a.top_part()); }

CommPoly desymmetrize(const PbwElement& a) {
  CommPoly out(a.lie().dim());
  PbwElement rest = a;
  while (!rest.is_zero()) {
    CommPoly top = principal_symbol(rest);
    out += top;
    rest -= symmetrize(a.algebra(), top);
  }
  return out;
}

PbwElement parse_pbw(const AlgebraPtr& algebra, std::string_view expr) {
  return parse_expression<PbwElement>(
      expr, [&](std::string_view name) { return PbwElement::generator(algebra, name); },
      [&](const Rational& c) { return PbwElement::scalar(algebra, c); });
}

}  // namespace vcopy
