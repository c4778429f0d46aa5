#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcopy/lie_algebra.hpp"
#include "vcopy/polynomial.hpp"
#include "vcopy/rational.hpp"

namespace vcopy {

/// Generator word X_{w[0]} X_{w[1]} ...; char16_t gives cheap short-string storage.
using Word = std::u16string;

/// Shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

bool is_normal_word(const Word& w);

/// Element of U(g) in PBW normal form (every stored word nondecreasing).
class PbwElement {
 public:
  using Terms = std::map<Word, Rational, WordLess>;

  explicit PbwElement(AlgebraPtr algebra);

  static PbwElement zero(AlgebraPtr algebra) { return PbwElement(std::move(algebra)); }
  static PbwElement scalar(AlgebraPtr algebra, const Rational& c);
  static PbwElement unit(AlgebraPtr algebra) { return scalar(std::move(algebra), Rational(1)); }
  static PbwElement generator(AlgebraPtr algebra, GenIndex i);
  static PbwElement generator(AlgebraPtr algebra, std::string_view name);

  const AlgebraPtr& algebra() const { return alg_; }
  const LieAlgebra& lie() const { return *alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Length of the longest word; -1 for zero.
  int degree() const;
  /// Length of the shortest word; -1 for zero.
  int min_degree() const;
  bool is_homogeneous() const { return degree() == min_degree(); }
  /// Terms of maximal word length.
  PbwElement top_part() const;
  PbwElement homogeneous_part(unsigned d) const;
  /// Generators occurring in some word.
  std::vector<GenIndex> support() const;
  Rational coefficient(const Word& w) const;

  /// Adds c * w where w must already be normal-ordered (checked).
  void add_normal_term(const Word& w, const Rational& c);

  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  PbwElement operator+(const PbwElement& o) const;
  PbwElement operator-(const PbwElement& o) const;
  PbwElement operator-() const { return scaled(Rational(-1)); }
  PbwElement operator*(const PbwElement& o) const;
  PbwElement scaled(const Rational& c) const;

  /// Equal terms over the same algebra object.
  bool operator==(const PbwElement& o) const;
  bool operator!=(const PbwElement& o) const { return !(*this == o); }

  /// The same terms reinterpreted over another algebra with the same dimension.
  PbwElement rebased(AlgebraPtr other) const;

  /// "2*G1*F2 - T^2" style rendering, terms by increasing degree then word order.
  std::string to_text() const;
  std::string to_latex() const;

 private:
  friend PbwElement pbw_normalize(const AlgebraPtr&, const Word&, const Rational&);
  void check_same(const PbwElement& o) const;
  AlgebraPtr alg_;
  Terms terms_;
};

/// Normal-orders c * X_{w[0]}...X_{w[n-1]}.
PbwElement pbw_normalize(const AlgebraPtr& algebra, const Word& word, const Rational& coeff);
PbwElement u_mul(const PbwElement& a, const PbwElement& b);
PbwElement u_commutator(const PbwElement& a, const PbwElement& b);

/// Symmetrization S(g) -> U(g). p must live in a universe of exactly dim variables.
PbwElement symmetrize(const AlgebraPtr& algebra, const CommPoly& p);

/// Average over all orderings of the product of image(v)^e over the multiset
/// {(v, e)}, computed through the first-letter recursion with memoization.
PbwElement symmetrized_product(const AlgebraPtr& algebra, const Monomial& m,
                               const std::function<PbwElement(VarIndex)>& image);

/// Substitutes image(x_v) into symmetrized monomials: sum_m c_m Sym(image(m)).
PbwElement symmetrized_substitution(const AlgebraPtr& algebra, const CommPoly& p,
                                    const std::function<PbwElement(VarIndex)>& image);

/// Inverse of symmetrize: the unique p with symmetrize(p) == a.
CommPoly desymmetrize(const PbwElement& a);

/// Word -> monomial on every term (no reordering corrections).
CommPoly commutative_image(const PbwElement& a);
/// Commutative image of the top-degree part (the graded principal symbol).
CommPoly principal_symbol(const PbwElement& a);

/// Parses "T^2 + R*L - A*M" etc. using generator names; products in written order.
PbwElement parse_pbw(const AlgebraPtr& algebra, std::string_view expr);

/// Maximum word length during normal ordering (default 12). Exceeding it throws
/// DegreeOverflow.
unsigned degree_cap();

/// Scoped override of the normal-ordering degree cap on the current thread.
class DegreeCapGuard {
 public:
  explicit DegreeCapGuard(unsigned cap);
  ~DegreeCapGuard();
  DegreeCapGuard(const DegreeCapGuard&) = delete;
  DegreeCapGuard& operator=(const DegreeCapGuard&) = delete;

 private:
  unsigned saved_;
};

/// Drops memoized rewrites held by the current thread.
void clear_pbw_cache();

}  // namespace vcopy
