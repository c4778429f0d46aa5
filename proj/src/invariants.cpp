#include "vcopy/invariants.hpp"

#include <algorithm>

#include "vcopy/errors.hpp"
#include "vcopy/exterior.hpp"

namespace vcopy {

CommPoly analytic_apply(const LieAlgebra& algebra, GenIndex i, const CommPoly& F) {
  const std::size_t n = algebra.dim();
  if (i >= n) throw MalformedInput("generator index out of range");
  if (F.nvars() != n) throw MalformedInput("polynomial variable universe does not match the algebra");
  CommPoly out(n);
  for (VarIndex j : F.support()) {
    const auto& s = algebra.structure(i, static_cast<GenIndex>(j));
    if (s.empty()) continue;
    CommPoly dF = F.partial(j);
    for (const auto& [k, c] : s) out += dF.times_monomial(Monomial::var(k), c);
  }
  return out;
}

InvarianceCheck is_invariant(const LieAlgebra& algebra, const CommPoly& F) {
  InvarianceCheck r;
  for (GenIndex i = 0; i < algebra.dim(); ++i) {
    CommPoly res = analytic_apply(algebra, i, F);
    if (!res.is_zero()) {
      r.invariant = false;
      r.residuals.emplace_back(i, std::move(res));
    }
  }
  return r;
}

std::string to_string(CountMethod m) { return m == CountMethod::bb ? "bb" : "bb1"; }

CountMethod parse_count_method(const std::string& s) {
  if (s == "bb") return CountMethod::bb;
  if (s == "bb1") return CountMethod::bb1;
  throw MalformedInput("unknown count method '" + s + "'");
}

Matrix structure_matrix_at(const LieAlgebra& algebra, const std::vector<Rational>& point) {
  const std::size_t n = algebra.dim();
  if (point.size() != n) throw MalformedInput("point has wrong length");
  Matrix a(n, std::vector<Rational>(n));
  for (const auto& [key, comb] : algebra.brackets()) {
    Rational v(0);
    for (const auto& [k, c] : comb) v += c * point[k];
    a[key.first][key.second] = v;
    a[key.second][key.first] = -v;
  }
  return a;
}

InvariantReport invariant_count(const LieAlgebra& algebra, unsigned trials, CountMethod method,
                                std::uint64_t seed) {
  if (trials == 0) throw MalformedInput("trials must be positive");
  const std::size_t n = algebra.dim();
  PointSampler sampler(seed);
  InvariantReport report;
  report.method = method;
  const auto d = method == CountMethod::bb1 ? mc_differential(algebra) : std::vector<ExteriorElement>{};
  bool have = false;
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Rational> pt = sampler.point(n);
    std::size_t r;
    if (method == CountMethod::bb) {
      r = rank(structure_matrix_at(algebra, pt));
    } else {
      ExteriorElement omega(n);
      for (std::size_t k = 0; k < n; ++k) omega += d[k].scaled(pt[k]);
      r = 2 * wedge_rank(omega);
    }
    if (!have || r > report.generic_rank) {
      report.generic_rank = r;
      report.witness_point = pt;
      have = true;
    }
  }
  report.count = n - report.generic_rank;
  return report;
}

std::size_t jacobian_rank_at(const std::vector<CommPoly>& Fs, const std::vector<Rational>& point) {
  if (Fs.empty()) return 0;
  const std::size_t n = Fs.front().nvars();
  Matrix jac;
  for (const auto& F : Fs) {
    if (F.nvars() != n) throw MalformedInput("polynomials over different variable universes");
    std::vector<Rational> row(n);
    for (VarIndex v : F.support()) row[v] = F.partial(v).eval(point);
    jac.push_back(std::move(row));
  }
  return rank(std::move(jac));
}

bool functionally_independent(const std::vector<CommPoly>& Fs, unsigned trials, std::uint64_t seed) {
  if (Fs.empty()) throw MalformedInput("empty list of functions");
  if (trials == 0) throw MalformedInput("trials must be positive");
  PointSampler sampler(seed);
  const std::size_t n = Fs.front().nvars();
  for (unsigned t = 0; t < trials; ++t)
    if (jacobian_rank_at(Fs, sampler.point(n)) == Fs.size()) return true;
  return false;
}

}  // namespace vcopy
