#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "vcopy/enveloping.hpp"
#include "vcopy/lie_algebra.hpp"
#include "vcopy/linalg.hpp"

namespace vcopy {

/// Data of the ansatz X'_i = X_i f + P_i for every Levi generator X_i.
/// Levi indices missing from P carry P_i = 0.
struct VirtualCopySpec {
  PbwElement f;
  std::map<GenIndex, PbwElement> P;
  unsigned k = 1;

  /// P_i, or zero when absent.
  PbwElement p_of(GenIndex i) const;
};

/// Builds a spec, inferring k = top degree of f + 1, then runs check_spec.
VirtualCopySpec make_spec(const AlgebraPtr& algebra, PbwElement f, std::map<GenIndex, PbwElement> P);

/// Convenience: f and the P_i given as expressions in generator names.
VirtualCopySpec make_spec(const AlgebraPtr& algebra, const std::string& f,
                          const std::map<std::string, std::string>& P);

/// Structural checks; throws MalformedSpec. Degrees refer to the top (filtration)
/// degree because normal ordering of literal products may add lower terms.
void check_spec(const LieAlgebra& algebra, const VirtualCopySpec& spec);

/// X'_i = X_i f + P_i for every Levi index i.
std::map<GenIndex, PbwElement> build_operators(const AlgebraPtr& algebra, const VirtualCopySpec& spec);

using PairResiduals = std::map<std::pair<GenIndex, GenIndex>, PbwElement>;

struct CopyVerificationReport {
  PairResiduals bed1_residuals;       // [X'_i, Y_j], Y_j radical
  PairResiduals bed2_residuals;       // [X'_i, X_j] - C_ij^k X'_k, X_j Levi
  std::map<GenIndex, PbwElement> f_radical_residuals;  // [f, Y_j]
  std::map<GenIndex, PbwElement> f_g_residuals;        // [f, X_j], all j
  PairResiduals p_transform_residuals;  // [P_i, X_j] - C_ij^k P_k
  PairResiduals factor_residuals;       // [X'_i, X'_j] - f C_ij^k X'_k
  bool f_is_radical_invariant = true;
  bool f_is_g_invariant = true;
  bool p_transform_ok = true;
  bool factor_identity_ok = true;
  bool passed = true;
};

/// Evaluates every constraint and collects all nonzero residuals.
CopyVerificationReport verify(const AlgebraPtr& algebra, const VirtualCopySpec& spec);

/// Lifts a Casimir C of the Levi part (an element supported on Levi generators)
/// to C' = Sym(p)(X'_1, ...), where p is the symmetric tensor with Sym(p) = C.
/// Throws PreconditionError when the spec does not verify or C is not central in U(s).
PbwElement lift_casimir(const AlgebraPtr& algebra, const VirtualCopySpec& spec, const PbwElement& C);
/// Same, reusing an existing verification report.
PbwElement lift_casimir(const AlgebraPtr& algebra, const VirtualCopySpec& spec, const PbwElement& C,
                        const CopyVerificationReport& report);

struct FeasibilityVerdict {
  bool possible = true;
  std::string reason;  // "count" or "abelian-radical" when impossible
  std::size_t count_algebra = 0;
  std::size_t count_levi = 0;
};

/// Necessary conditions for a virtual copy of the Levi part. Throws NotApplicable
/// for an empty radical or empty Levi part.
FeasibilityVerdict feasibility(const LieAlgebra& algebra, unsigned trials = 3,
                               std::uint64_t seed = PointSampler::default_seed);

}  // namespace vcopy
