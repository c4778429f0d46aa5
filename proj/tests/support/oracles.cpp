#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

PbwElement bubble_normalize(const AlgebraPtr& alg, const Word& w, const Rational& c) {
  std::map<Word, Rational> pending{{w, c}};
  PbwElement done(alg);
  while (!pending.empty()) {
    auto it = pending.begin();
    Word cur = it->first;
    Rational coef = it->second;
    pending.erase(it);
    if (coef == 0) continue;
    std::size_t p = 0;
    while (p + 1 < cur.size() && cur[p] <= cur[p + 1]) ++p;
    if (p + 1 >= cur.size()) {
      done.add_normal_term(cur, coef);
      continue;
    }
    Word swapped = cur;
    std::swap(swapped[p], swapped[p + 1]);
    pending[swapped] += coef;
    const auto b = static_cast<vcopy::GenIndex>(cur[p]);
    const auto a = static_cast<vcopy::GenIndex>(cur[p + 1]);
    for (const auto& [k, ck] : alg->structure(b, a)) {
      Word lower = cur.substr(0, p);
      lower.push_back(static_cast<char16_t>(k));
      lower += cur.substr(p + 2);
      pending[lower] += coef * ck;
    }
  }
  return done;
}

PbwElement enumerate_symmetrize(const AlgebraPtr& alg, const CommPoly& p) {
  PbwElement out(alg);
  for (const auto& [m, c] : p.terms()) {
    Word letters;
    for (const auto& [v, e] : m.factors()) letters.append(e, static_cast<char16_t>(v));
    std::sort(letters.begin(), letters.end());
    PbwElement sum(alg);
    long count = 0;
    do {
      sum += bubble_normalize(alg, letters, Rational(1));
      ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    out += sum.scaled(c / Rational(count));
  }
  return out;
}

CommPoly cofactor_det(const vcopy::PolyMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t vars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  CommPoly det(vars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    vcopy::PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CommPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    CommPoly term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

Word word(const AlgebraPtr& alg, const std::vector<std::string>& names) {
  Word w;
  for (const auto& n : names) w.push_back(static_cast<char16_t>(alg->index(n)));
  return w;
}

Rational Random::rational(int bound) {
  int num = integer(-bound, bound);
  int den = integer(1, 3);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational Random::nonzero_rational(int bound) {
  Rational r;
  do r = rational(bound);
  while (r == 0);
  return r;
}

std::vector<Rational> Random::vector(std::size_t n, int bound) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound));
  return v;
}

PbwElement Random::pbw(const AlgebraPtr& alg, int terms, int max_len) {
  PbwElement out(alg);
  const int dim = static_cast<int>(alg->dim());
  for (int t = 0; t < terms; ++t) {
    Word w;
    const int len = integer(0, max_len);
    for (int i = 0; i < len; ++i) w.push_back(static_cast<char16_t>(integer(0, dim - 1)));
    out += vcopy::pbw_normalize(alg, w, nonzero_rational());
  }
  return out;
}

CommPoly Random::poly(std::size_t nvars, int terms, int max_deg) {
  CommPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::pair<vcopy::VarIndex, unsigned>> pairs;
    const int deg = integer(0, max_deg);
    for (int i = 0; i < deg; ++i)
      pairs.emplace_back(static_cast<vcopy::VarIndex>(integer(0, static_cast<int>(nvars) - 1)), 1u);
    p.add_term(vcopy::Monomial::from_pairs(pairs), nonzero_rational());
  }
  return p;
}

vcopy::ExteriorElement Random::two_form(std::size_t n, int terms) {
  vcopy::ExteriorElement w(n);
  for (int t = 0; t < terms; ++t) {
    auto a = static_cast<vcopy::GenIndex>(integer(0, static_cast<int>(n) - 1));
    auto b = static_cast<vcopy::GenIndex>(integer(0, static_cast<int>(n) - 1));
    if (a != b) w.add({a, b}, nonzero_rational());
  }
  return w;
}

}  // namespace oracle
