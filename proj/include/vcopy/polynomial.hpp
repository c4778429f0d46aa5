#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vcopy/rational.hpp"

namespace vcopy {

using VarIndex = std::uint16_t;

/// Sparse exponent vector: (variable, exponent) pairs, sorted by variable, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarIndex v, unsigned exp = 1);
  /// Build from arbitrary (var, exp) pairs; merges repeats and drops zero exponents.
  static Monomial from_pairs(std::vector<std::pair<VarIndex, unsigned>> pairs);

  const std::vector<std::pair<VarIndex, std::uint16_t>>& factors() const { return f_; }
  unsigned degree() const { return deg_; }
  unsigned exponent(VarIndex v) const;
  bool is_one() const { return f_.empty(); }
  VarIndex max_var() const { return f_.empty() ? 0 : f_.back().first; }

  Monomial operator*(const Monomial& o) const;
  /// True when o divides *this.
  bool divisible_by(const Monomial& o) const;
  /// Quotient; caller must ensure divisibility.
  Monomial operator/(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return f_ == o.f_; }

 private:
  std::vector<std::pair<VarIndex, std::uint16_t>> f_;
  unsigned deg_ = 0;
};

/// Graded lexicographic order (x_0 > x_1 > ...), ascending.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q in a fixed universe of `nvars` variables.
class CommPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  explicit CommPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static CommPoly constant(std::size_t nvars, const Rational& c);
  static CommPoly variable(std::size_t nvars, VarIndex v);
  static CommPoly monomial(std::size_t nvars, const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest monomial in grlex order. Throws PreconditionError on zero.
  const std::pair<const Monomial, Rational>& leading_term() const;
  /// Variables that occur with nonzero exponent.
  std::vector<VarIndex> support() const;

  void add_term(const Monomial& m, const Rational& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator-() const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly scaled(const Rational& c) const;
  CommPoly times_monomial(const Monomial& m, const Rational& c) const;
  CommPoly pow(unsigned e) const;

  bool operator==(const CommPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  /// Formal partial derivative d/dx_i.
  CommPoly partial(VarIndex i) const;
  /// Exact evaluation; throws MalformedInput if point.size() != nvars.
  Rational eval(const std::vector<Rational>& point) const;
  /// Sum of terms of the given total degree.
  CommPoly homogeneous_part(unsigned d) const;
  /// Same polynomial viewed in a larger variable universe.
  CommPoly widened(std::size_t nvars) const;
  /// Exact quotient; throws ConsistencyError when d does not divide *this.
  CommPoly exact_div(const CommPoly& d) const;
  /// Coefficient polynomials of var v: result[e] collects terms with x_v^e (x_v removed).
  std::vector<CommPoly> collect(VarIndex v) const;

  /// Text form, terms in descending grlex order: "3/2*x_a^2*x_b - x_c".
  std::string to_text(const std::vector<std::string>& names) const;
  std::string to_latex(const std::vector<std::string>& latex_names) const;

 private:
  void check_universe(const CommPoly& o) const;
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace vcopy
