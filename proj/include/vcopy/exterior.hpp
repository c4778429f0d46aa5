#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vcopy/lie_algebra.hpp"
#include "vcopy/linalg.hpp"
#include "vcopy/rational.hpp"

namespace vcopy {

/// Element of the exterior algebra on the dual basis w_0..w_{n-1}.
/// Keys are strictly increasing index lists.
class ExteriorElement {
 public:
  using Key = std::vector<GenIndex>;
  using Terms = std::map<Key, Rational>;

  explicit ExteriorElement(std::size_t n = 0) : n_(n) {}
  static ExteriorElement one(std::size_t n);
  static ExteriorElement basis(std::size_t n, GenIndex i);

  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Common grade of all terms; -1 for zero; throws PreconditionError if inhomogeneous.
  int grade() const;
  Rational coefficient(const Key& k) const;

  /// Adds c * w_{k[0]} ^ ... ^ w_{k[m-1]} for an arbitrary index list (sorted with sign).
  void add(Key k, const Rational& c);

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement scaled(const Rational& c) const;
  ExteriorElement wedge(const ExteriorElement& o) const;

  bool operator==(const ExteriorElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_text(const std::vector<std::string>& names) const;
  std::string to_latex(const std::vector<std::string>& latex_names) const;

 private:
  void check(const ExteriorElement& o) const;
  std::size_t n_;
  Terms terms_;
};

/// Maurer-Cartan differentials d w_k = - sum_{i<j} C_ij^k w_i ^ w_j, k = 0..dim-1.
std::vector<ExteriorElement> mc_differential(const LieAlgebra& algebra);

/// d extended to all of the exterior algebra as a graded antiderivation.
ExteriorElement exterior_derivative(const std::vector<ExteriorElement>& d_basis,
                                    const ExteriorElement& form);

/// Largest j with the j-th wedge power nonzero, via half the rank of the
/// alternating coefficient matrix. Throws MalformedInput unless grade 2.
std::size_t wedge_rank(const ExteriorElement& omega);

/// Same quantity from explicit wedge powers (slow; used as a cross-check).
std::size_t wedge_rank_by_powers(const ExteriorElement& omega);

/// Max of wedge_rank(sum_i a_i d w_i) over `trials` random integer vectors a.
std::size_t j0_estimate(const LieAlgebra& algebra, unsigned trials = 5,
                        std::uint64_t seed = PointSampler::default_seed);

}  // namespace vcopy
