#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcopy/enveloping.hpp"
#include "vcopy/lie_algebra.hpp"
#include "vcopy/virtual_copy.hpp"

namespace vcopy {

/// Integer weights n_i of the scaling Y_i -> eps^{n_i} Y_i. Levi generators always weigh 0.
class ContractionWeights {
 public:
  ContractionWeights() = default;
  /// Nonzero weights requested for Levi generators are dropped and listed in forced_levi().
  ContractionWeights(const LieAlgebra& algebra, const std::map<GenIndex, int>& weights);
  static ContractionWeights from_names(const LieAlgebra& algebra, const std::map<std::string, int>& weights);

  int weight(GenIndex i) const;
  const std::map<GenIndex, int>& weights() const { return n_; }
  const std::vector<GenIndex>& forced_levi() const { return forced_; }
  int word_weight(const Word& w) const;

 private:
  std::map<GenIndex, int> n_;
  std::vector<GenIndex> forced_;
};

/// Keeps C_ij^k when n_i + n_j - n_k = 0, drops it when positive; a negative
/// exponent on a nonzero constant raises LimitDoesNotExist.
LieAlgebra contract_algebra(const LieAlgebra& algebra, const ContractionWeights& w);

struct LeadingPart {
  int M = 0;
  PbwElement part;
};

/// Maximal word weight M and the sum of the terms attaining it.
/// Throws UndefinedLeadingPart for p = 0.
LeadingPart weighted_leading_part(const PbwElement& p, const ContractionWeights& w);

struct ContractionOutcome {
  AlgebraPtr algebra_prime;
  int M0 = 0;
  std::map<GenIndex, int> Mi;  // only for nonzero P_i
  std::map<GenIndex, int> Ni;  // max(M0, M_i)
  PbwElement f0;               // over algebra_prime
  std::map<GenIndex, PbwElement> P0;         // leading parts of nonzero P_i, over algebra_prime
  std::map<GenIndex, PbwElement> operators;  // X''_i over algebra_prime
  bool copy_compatible = false;
  /// Verification of the spec (f0, P_{i,0}) in algebra_prime. For an incompatible
  /// weighting this is the naive spec, whose operators X_i f0 + P_{i,0} are not the limits.
  std::optional<CopyVerificationReport> contracted_report;
  std::optional<VirtualCopySpec> contracted_spec;
};

/// Contracts the algebra and the copy. The three limit cases per Levi generator:
/// M0 > M_i gives X_i f0, M0 < M_i gives P_{i,0}, equality gives X_i f0 + P_{i,0}.
ContractionOutcome contract_copy(const AlgebraPtr& algebra, const VirtualCopySpec& spec,
                                 const ContractionWeights& w, bool run_verify = true);

}  // namespace vcopy
