#include "vcopy/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "vcopy/errors.hpp"

namespace vcopy {

Monomial Monomial::var(VarIndex v, unsigned exp) {
  Monomial m;
  if (exp > 0) {
    m.f_.emplace_back(v, static_cast<std::uint16_t>(exp));
    m.deg_ = exp;
  }
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<VarIndex, unsigned>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Monomial m;
  for (const auto& [v, e] : pairs) {
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second = static_cast<std::uint16_t>(m.f_.back().second + e);
    else
      m.f_.emplace_back(v, static_cast<std::uint16_t>(e));
    m.deg_ += e;
  }
  return m;
}

unsigned Monomial::exponent(VarIndex v) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), v,
                             [](const auto& p, VarIndex x) { return p.first < x; });
  return (it != f_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      r.f_.emplace_back(a->first, static_cast<std::uint16_t>(a->second + b->second));
      ++a;
      ++b;
    }
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (const auto& [v, e] : o.f_)
    if (exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (const auto& [v, e] : f_) {
    unsigned rest = e - o.exponent(v);
    if (rest > 0) r.f_.emplace_back(v, static_cast<std::uint16_t>(rest));
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Lex with x_0 largest: at the first variable where exponents differ,
  // the monomial with the smaller exponent is smaller.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) return false;
    if (i == fa.size() || fb[j].first < fa[i].first) return true;
    if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

CommPoly CommPoly::constant(std::size_t nvars, const Rational& c) {
  CommPoly p(nvars);
  p.add_term(Monomial(), c);
  return p;
}

CommPoly CommPoly::variable(std::size_t nvars, VarIndex v) {
  if (v >= nvars) throw MalformedInput("variable index out of range");
  CommPoly p(nvars);
  p.add_term(Monomial::var(v), Rational(1));
  return p;
}

CommPoly CommPoly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  if (!m.is_one() && m.max_var() >= nvars) throw MalformedInput("variable index out of range");
  CommPoly p(nvars);
  p.add_term(m, c);
  return p;
}

int CommPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool CommPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational CommPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& CommPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

std::vector<VarIndex> CommPoly::support() const {
  std::vector<VarIndex> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void CommPoly::add_term(const Monomial& m, const Rational& c) {
  if (vcopy::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (vcopy::is_zero(it->second)) terms_.erase(it);
  }
}

void CommPoly::check_universe(const CommPoly& o) const {
  if (nvars_ != o.nvars_) throw MalformedInput("polynomials over different variable universes");
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  check_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  check_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly r(*this);
  r += o;
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
  CommPoly r(*this);
  r -= o;
  return r;
}

CommPoly CommPoly::operator-() const { return scaled(Rational(-1)); }

CommPoly CommPoly::operator*(const CommPoly& o) const {
  check_universe(o);
  CommPoly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

CommPoly CommPoly::scaled(const Rational& c) const {
  CommPoly r(nvars_);
  if (vcopy::is_zero(c)) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * c);
  return r;
}

CommPoly CommPoly::times_monomial(const Monomial& mono, const Rational& c) const {
  CommPoly r(nvars_);
  if (vcopy::is_zero(c)) return r;
  // Multiplication by a monomial preserves grlex order.
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, a * c);
  return r;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly result = constant(nvars_, Rational(1));
  CommPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CommPoly CommPoly::partial(VarIndex i) const {
  if (i >= nvars_) throw MalformedInput("variable index out of range");
  CommPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    r.add_term(m / Monomial::var(i), c * e);
  }
  return r;
}

Rational CommPoly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw MalformedInput("evaluation point has wrong length");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

CommPoly CommPoly::homogeneous_part(unsigned d) const {
  CommPoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

CommPoly CommPoly::widened(std::size_t nvars) const {
  if (nvars < nvars_) throw MalformedInput("cannot shrink variable universe");
  CommPoly r(nvars);
  r.terms_ = terms_;
  return r;
}

CommPoly CommPoly::exact_div(const CommPoly& d) const {
  check_universe(d);
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& [lm, lc] = d.leading_term();
  CommPoly rem(*this);
  CommPoly q(nvars_);
  while (!rem.is_zero()) {
    const auto [m, c] = rem.leading_term();
    if (!m.divisible_by(lm)) throw ConsistencyError("polynomial division is not exact");
    Monomial qm = m / lm;
    Rational qc = c / lc;
    q.add_term(qm, qc);
    rem -= d.times_monomial(qm, qc);
  }
  return q;
}

std::vector<CommPoly> CommPoly::collect(VarIndex v) const {
  std::vector<CommPoly> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(v);
    if (out.size() <= e) out.resize(e + 1, CommPoly(nvars_));
    out[e].add_term(m / Monomial::var(v, e), c);
  }
  return out;
}

namespace {

template <class CoeffFmt, class VarFmt>
std::string render(const CommPoly::Terms& terms, CoeffFmt coeff_fmt, VarFmt var_fmt,
                   const char* times) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.is_one() || !is_one(mag)) {
      os << coeff_fmt(mag);
      wrote = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (wrote) os << times;
      os << var_fmt(v, e);
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace

std::string CommPoly::to_text(const std::vector<std::string>& names) const {
  return render(
      terms_, [](const Rational& c) { return vcopy::to_string(c); },
      [&](VarIndex v, unsigned e) {
        std::string s = "x_" + (v < names.size() ? names[v] : std::to_string(v));
        if (e > 1) s += "^" + std::to_string(e);
        return s;
      },
      "*");
}

std::string CommPoly::to_latex(const std::vector<std::string>& latex_names) const {
  return render(
      terms_, [](const Rational& c) { return vcopy::to_latex(c); },
      [&](VarIndex v, unsigned e) {
        std::string s = "x_{" + (v < latex_names.size() ? latex_names[v] : std::to_string(v)) + "}";
        if (e > 1) s += "^{" + std::to_string(e) + "}";
        return s;
      },
      " ");
}

}  // namespace vcopy
