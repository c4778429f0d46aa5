#include "vcopy/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "vcopy/errors.hpp"

namespace vcopy {

ExteriorElement ExteriorElement::one(std::size_t n) {
  ExteriorElement e(n);
  e.terms_.emplace(Key{}, Rational(1));
  return e;
}

ExteriorElement ExteriorElement::basis(std::size_t n, GenIndex i) {
  if (i >= n) throw MalformedInput("form index out of range");
  ExteriorElement e(n);
  e.terms_.emplace(Key{i}, Rational(1));
  return e;
}

int ExteriorElement::grade() const {
  if (terms_.empty()) return -1;
  const std::size_t g = terms_.begin()->first.size();
  for (const auto& [k, c] : terms_)
    if (k.size() != g) throw PreconditionError("inhomogeneous exterior form");
  return static_cast<int>(g);
}

Rational ExteriorElement::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add(Key k, const Rational& c) {
  if (vcopy::is_zero(c)) return;
  for (GenIndex i : k)
    if (i >= n_) throw MalformedInput("form index out of range");
  // Insertion sort, counting transpositions for the sign.
  bool odd = false;
  for (std::size_t i = 1; i < k.size(); ++i) {
    for (std::size_t j = i; j > 0 && k[j - 1] >= k[j]; --j) {
      if (k[j - 1] == k[j]) return;
      std::swap(k[j - 1], k[j]);
      odd = !odd;
    }
  }
  Rational v = odd ? Rational(-c) : c;
  auto [it, inserted] = terms_.emplace(std::move(k), v);
  if (!inserted) {
    it->second += v;
    if (vcopy::is_zero(it->second)) terms_.erase(it);
  }
}

void ExteriorElement::check(const ExteriorElement& o) const {
  if (n_ != o.n_) throw MalformedInput("forms over different dual spaces");
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  ExteriorElement r(*this);
  r += o;
  return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
  return *this + o.scaled(Rational(-1));
}

ExteriorElement ExteriorElement::scaled(const Rational& c) const {
  ExteriorElement r(n_);
  if (vcopy::is_zero(c)) return r;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k, a * c);
  return r;
}

ExteriorElement ExteriorElement::wedge(const ExteriorElement& o) const {
  check(o);
  ExteriorElement r(n_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      r.add(std::move(k), ca * cb);
    }
  }
  return r;
}

namespace {

template <class CoeffFmt, class LetterFmt>
std::string render(const ExteriorElement::Terms& terms, CoeffFmt coeff_fmt, LetterFmt letter_fmt,
                   const char* wedge_sym, const char* one) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (!is_one(mag)) os << coeff_fmt(mag) << (k.empty() ? "" : " ");
    if (k.empty() && is_one(mag)) os << one;
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? wedge_sym : "") << letter_fmt(k[i]);
  }
  return os.str();
}

}  // namespace

std::string ExteriorElement::to_text(const std::vector<std::string>& names) const {
  return render(
      terms_, [](const Rational& c) { return vcopy::to_string(c); },
      [&](GenIndex i) { return "w_" + (i < names.size() ? names[i] : std::to_string(i)); }, "^",
      "1");
}

std::string ExteriorElement::to_latex(const std::vector<std::string>& latex_names) const {
  return render(
      terms_, [](const Rational& c) { return vcopy::to_latex(c); },
      [&](GenIndex i) {
        return "\\omega_{" + (i < latex_names.size() ? latex_names[i] : std::to_string(i)) + "}";
      },
      " \\wedge ", "1");
}

std::vector<ExteriorElement> mc_differential(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<ExteriorElement> d(n, ExteriorElement(n));
  for (const auto& [key, comb] : algebra.brackets())
    for (const auto& [k, c] : comb) d[k].add({key.first, key.second}, -c);
  return d;
}

ExteriorElement exterior_derivative(const std::vector<ExteriorElement>& d_basis,
                                    const ExteriorElement& form) {
  const std::size_t n = form.dim();
  if (d_basis.size() != n) throw MalformedInput("differential does not match the form's dual space");
  ExteriorElement out(n);
  for (const auto& [k, c] : form.terms()) {
    for (std::size_t pos = 0; pos < k.size(); ++pos) {
      ExteriorElement left = ExteriorElement::one(n);
      for (std::size_t i = 0; i < pos; ++i) left = left.wedge(ExteriorElement::basis(n, k[i]));
      ExteriorElement right = ExteriorElement::one(n);
      for (std::size_t i = pos + 1; i < k.size(); ++i) right = right.wedge(ExteriorElement::basis(n, k[i]));
      ExteriorElement term = left.wedge(d_basis[k[pos]]).wedge(right);
      out += term.scaled(pos % 2 == 0 ? c : Rational(-c));
    }
  }
  return out;
}

std::size_t wedge_rank(const ExteriorElement& omega) {
  if (omega.is_zero()) return 0;
  if (omega.grade() != 2) throw MalformedInput("wedge rank requires a 2-form");
  const std::size_t n = omega.dim();
  Matrix m(n, std::vector<Rational>(n));
  for (const auto& [k, c] : omega.terms()) {
    m[k[0]][k[1]] = c;
    m[k[1]][k[0]] = -c;
  }
  return rank(std::move(m)) / 2;
}

std::size_t wedge_rank_by_powers(const ExteriorElement& omega) {
  if (omega.is_zero()) return 0;
  if (omega.grade() != 2) throw MalformedInput("wedge rank requires a 2-form");
  std::size_t j = 0;
  ExteriorElement power = ExteriorElement::one(omega.dim());
  for (;;) {
    ExteriorElement next = power.wedge(omega);
    if (next.is_zero()) return j;
    power = std::move(next);
    ++j;
  }
}

std::size_t j0_estimate(const LieAlgebra& algebra, unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw MalformedInput("trials must be positive");
  const auto d = mc_differential(algebra);
  PointSampler sampler(seed);
  std::size_t best = 0;
  for (unsigned t = 0; t < trials; ++t) {
    ExteriorElement omega(algebra.dim());
    for (std::size_t k = 0; k < d.size(); ++k) omega += d[k].scaled(sampler.value());
    best = std::max(best, wedge_rank(omega));
  }
  return best;
}

}  // namespace vcopy
