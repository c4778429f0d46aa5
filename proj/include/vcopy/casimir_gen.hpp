#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vcopy/enveloping.hpp"
#include "vcopy/polynomial.hpp"
#include "vcopy/virtual_copy.hpp"

namespace vcopy {

using PolyMatrix = std::vector<std::vector<CommPoly>>;

/// Name of the rotation generator J_ij (1-based, i < j): "J12", or "J1_10" once N >= 10.
std::string rotation_name(int i, int j, int N);

/// N x N antisymmetric matrix whose (i, j) entry, i < j, is the principal symbol of J'_ij.
PolyMatrix build_so_matrix(const AlgebraPtr& algebra, const VirtualCopySpec& spec, int N);

/// det(T Id - M) with T as an extra variable appended to M's universe (index nvars).
/// Computed by fraction-free Bareiss elimination. Throws MalformedInput if M is not square.
CommPoly characteristic_polynomial(const PolyMatrix& M);

/// C_{2l} = coefficient of T^{N-2l} in det(T Id - M), for l = 1 .. N/2.
/// For antisymmetric M the odd coefficients are checked to vanish.
std::map<unsigned, CommPoly> char_poly_coefficients(const PolyMatrix& M);

struct CasimirOptions {
  unsigned symmetrize_max_degree = 8;
  unsigned commutator_check_max_degree = 6;
};

struct CasimirSet {
  int N = 0;
  std::map<unsigned, CommPoly> coefficients;     // l -> C_{2l}
  std::map<unsigned, PbwElement> symmetrized;    // l -> Sym(C_{2l}) when within the degree bound
  std::map<unsigned, bool> commutator_checked;   // l -> checked in U(g)
};

/// Coefficients of the characteristic polynomial of the dressed rotation matrix,
/// each checked with is_invariant and symmetrized into U(g). Any failed check
/// raises ConsistencyError.
CasimirSet casimir_set(const AlgebraPtr& algebra, const VirtualCopySpec& spec, int N,
                       const CasimirOptions& options = {});

}  // namespace vcopy
