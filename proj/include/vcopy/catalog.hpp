#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcopy/enveloping.hpp"
#include "vcopy/lie_algebra.hpp"
#include "vcopy/rational.hpp"
#include "vcopy/virtual_copy.hpp"

namespace vcopy {

struct FamilyId {
  std::string name;
  int N = 0;                      // ignored by families without a size parameter
  std::optional<Rational> alpha;  // boson_example only (default 1)
};

struct CatalogEntry {
  FamilyId id;
  AlgebraPtr algebra;
  std::optional<VirtualCopySpec> spec;
  /// Size of the rotation matrix when the Levi part is so(N) with J_ij generators.
  std::optional<int> so_rank;
};

/// so, su11, heisenberg, weyl_quesne, Ha, IHa, QHa, IHa_L, IHa_M, IHa_A, IHa_AM,
/// IHa_AL, IHa_LM, boson_example, boson_example_contracted.
const std::vector<std::string>& family_names();
bool family_takes_size(const std::string& name);

/// Throws MalformedInput for an unknown family or an unsupported size.
CatalogEntry build(const FamilyId& id);

/// Quadratic Casimir of the Levi part (sum J_ij^2 for so(N), the su(1,1) form for
/// the boson families, sum E_ij E_ji for gl(n)); nullopt when there is no Levi part.
std::optional<PbwElement> quadratic_levi_casimir(const CatalogEntry& entry);

/// Central generators of the algebra (those with no nonzero bracket).
std::vector<GenIndex> central_generators(const LieAlgebra& algebra);

}  // namespace vcopy
