#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcopy/lie_algebra.hpp"
#include "vcopy/linalg.hpp"
#include "vcopy/polynomial.hpp"

namespace vcopy {

/// X^_i F = sum_{j,k} C_ij^k x_k dF/dx_j. F must live in exactly dim variables.
CommPoly analytic_apply(const LieAlgebra& algebra, GenIndex i, const CommPoly& F);

struct InvarianceCheck {
  bool invariant = true;
  std::vector<std::pair<GenIndex, CommPoly>> residuals;  // only nonzero X^_i F
};

InvarianceCheck is_invariant(const LieAlgebra& algebra, const CommPoly& F);

enum class CountMethod { bb, bb1 };
std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& s);

struct InvariantReport {
  std::size_t count = 0;
  std::size_t generic_rank = 0;  // rank of A(g), i.e. 2 j0 for bb1
  std::vector<Rational> witness_point;
  CountMethod method = CountMethod::bb;
};

/// The matrix A(g)_{ij} = C_ij^k x_k evaluated at a point.
Matrix structure_matrix_at(const LieAlgebra& algebra, const std::vector<Rational>& point);

/// N(g) = dim - max rank of A(g) over random integer points (bb), or
/// dim - 2 j0 over random combinations of the Maurer-Cartan forms (bb1).
InvariantReport invariant_count(const LieAlgebra& algebra, unsigned trials = 3,
                                CountMethod method = CountMethod::bb,
                                std::uint64_t seed = PointSampler::default_seed);

/// Rank of the Jacobian (dF_a/dx_b) at a point.
std::size_t jacobian_rank_at(const std::vector<CommPoly>& Fs, const std::vector<Rational>& point);

/// True iff the Jacobian reaches full row rank at one of `trials` random points.
bool functionally_independent(const std::vector<CommPoly>& Fs, unsigned trials = 3,
                              std::uint64_t seed = PointSampler::default_seed);

}  // namespace vcopy
