#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vcopy/rational.hpp"

namespace vcopy {

using GenIndex = std::uint16_t;

/// Sparse generator combination: index -> nonzero coefficient.
using LinComb = std::map<GenIndex, Rational>;

/// Dense coefficient vector over the basis (length = dim).
using Vector = std::vector<Rational>;

/// One structure-constant entry [X_i, X_j] = sum_k c_k X_k as given by the user.
struct BracketSpec {
  GenIndex i;
  GenIndex j;
  LinComb terms;
};

/// A finite-dimensional Lie algebra over Q given by sparse structure constants,
/// with a declared Levi/radical split. Immutable after construction.
class LieAlgebra {
 public:
  /// Throws MalformedInput on duplicate names, out-of-range indices, i == j
  /// brackets with nonzero terms, or conflicting duplicate entries.
  LieAlgebra(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
             const std::vector<GenIndex>& levi, std::vector<std::string> latex_names = {});

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GenIndex i) const { return names_.at(i); }
  const std::string& latex_name(GenIndex i) const { return latex_.at(i); }
  const std::vector<std::string>& latex_names() const { return latex_; }

  std::optional<GenIndex> find(std::string_view name) const;
  /// Like find() but throws MalformedInput for unknown names.
  GenIndex index(std::string_view name) const;

  bool is_levi(GenIndex i) const { return levi_mask_.at(i); }
  const std::vector<GenIndex>& levi() const { return levi_; }
  const std::vector<GenIndex>& radical() const { return radical_; }

  /// [X_i, X_j] as a sparse list of (k, c). Empty when the generators commute.
  const std::vector<std::pair<GenIndex, Rational>>& structure(GenIndex i, GenIndex j) const {
    return table_[static_cast<std::size_t>(i) * names_.size() + j];
  }

  /// Canonical (i < j) nonzero brackets, deterministic order.
  const std::map<std::pair<GenIndex, GenIndex>, LinComb>& brackets() const { return canonical_; }

  /// Identifier shared by copies of the same algebra object; keys internal caches.
  std::uint64_t id() const { return id_; }

  /// The declared Levi part as a standalone algebra (induced brackets).
  LieAlgebra levi_subalgebra() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> latex_;
  std::map<std::string, GenIndex, std::less<>> by_name_;
  std::map<std::pair<GenIndex, GenIndex>, LinComb> canonical_;
  std::vector<std::vector<std::pair<GenIndex, Rational>>> table_;
  std::vector<GenIndex> levi_;
  std::vector<GenIndex> radical_;
  std::vector<bool> levi_mask_;
  std::uint64_t id_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct JacobiViolation {
  GenIndex i, j, k;
  LinComb residual;  // sum_cyc [[X_i,X_j],X_k]
};

struct ClosureViolation {
  enum class Kind { levi_not_subalgebra, radical_not_ideal };
  Kind kind;
  GenIndex i, j;
  LinComb offending;  // components of [X_i,X_j] outside the required span
};

struct ValidationReport {
  std::vector<JacobiViolation> jacobi;
  std::vector<ClosureViolation> closure;
  bool ok() const { return jacobi.empty() && closure.empty(); }
};

/// Exhaustive Jacobi check over all triples plus Levi/radical closure checks.
ValidationReport validate(const LieAlgebra& algebra);

/// Bilinear bracket of two coefficient vectors; throws MalformedInput on size mismatch.
Vector bracket(const LieAlgebra& algebra, const Vector& a, const Vector& b);

/// Bracket of sparse combinations.
LinComb bracket(const LieAlgebra& algebra, const LinComb& a, const LinComb& b);

/// Default LaTeX for a generator name: trailing index digits become a subscript.
std::string default_latex_name(std::string_view name);

}  // namespace vcopy
