#include "vcopy/virtual_copy.hpp"

#include "vcopy/errors.hpp"
#include "vcopy/invariants.hpp"

namespace vcopy {

namespace {

void require_radical_support(const LieAlgebra& alg, const PbwElement& e, const std::string& what) {
  for (GenIndex g : e.support())
    if (alg.is_levi(g)) throw MalformedSpec(what + " involves the Levi generator " + alg.name(g));
}

// sum_k C_ij^k value(k)
template <class F>
PbwElement dressed_bracket(const AlgebraPtr& alg, GenIndex i, GenIndex j, F value) {
  PbwElement out(alg);
  for (const auto& [k, c] : alg->structure(i, j)) out += value(k).scaled(c);
  return out;
}

}  // namespace

PbwElement VirtualCopySpec::p_of(GenIndex i) const {
  auto it = P.find(i);
  return it == P.end() ? PbwElement::zero(f.algebra()) : it->second;
}

void check_spec(const LieAlgebra& algebra, const VirtualCopySpec& spec) {
  if (spec.f.lie().id() != algebra.id()) throw MalformedSpec("f belongs to a different algebra");
  if (spec.f.is_zero()) throw MalformedSpec("f must be nonzero");
  if (spec.k < 1) throw MalformedSpec("k must be positive");
  require_radical_support(algebra, spec.f, "f");
  if (spec.f.degree() != static_cast<int>(spec.k) - 1)
    throw MalformedSpec("f has degree " + std::to_string(spec.f.degree()) + ", expected k-1 = " +
                        std::to_string(spec.k - 1));
  for (const auto& [i, p] : spec.P) {
    if (i >= algebra.dim() || !algebra.is_levi(i))
      throw MalformedSpec("P given for a non-Levi generator");
    if (p.lie().id() != algebra.id()) throw MalformedSpec("P_i belongs to a different algebra");
    if (p.is_zero()) continue;
    require_radical_support(algebra, p, "P_" + algebra.name(i));
    if (p.degree() != static_cast<int>(spec.k))
      throw MalformedSpec("P_" + algebra.name(i) + " has degree " + std::to_string(p.degree()) +
                          ", expected k = " + std::to_string(spec.k));
  }
}

VirtualCopySpec make_spec(const AlgebraPtr& algebra, PbwElement f, std::map<GenIndex, PbwElement> P) {
  if (f.is_zero()) throw MalformedSpec("f must be nonzero");
  VirtualCopySpec spec{std::move(f), std::move(P), 1};
  spec.k = static_cast<unsigned>(spec.f.degree()) + 1;
  check_spec(*algebra, spec);
  return spec;
}

VirtualCopySpec make_spec(const AlgebraPtr& algebra, const std::string& f,
                          const std::map<std::string, std::string>& P) {
  std::map<GenIndex, PbwElement> p;
  for (const auto& [name, expr] : P) p.emplace(algebra->index(name), parse_pbw(algebra, expr));
  return make_spec(algebra, parse_pbw(algebra, f), std::move(p));
}

std::map<GenIndex, PbwElement> build_operators(const AlgebraPtr& algebra, const VirtualCopySpec& spec) {
  check_spec(*algebra, spec);
  std::map<GenIndex, PbwElement> ops;
  for (GenIndex i : algebra->levi())
    ops.emplace(i, PbwElement::generator(algebra, i) * spec.f + spec.p_of(i));
  return ops;
}

CopyVerificationReport verify(const AlgebraPtr& algebra, const VirtualCopySpec& spec) {
  const auto ops = build_operators(algebra, spec);
  const LieAlgebra& alg = *algebra;
  CopyVerificationReport r;
  auto gen = [&](GenIndex g) { return PbwElement::generator(algebra, g); };

  for (GenIndex i : alg.levi()) {
    const PbwElement& xi = ops.at(i);
    for (GenIndex j : alg.radical()) {
      PbwElement res = u_commutator(xi, gen(j));
      if (!res.is_zero()) r.bed1_residuals.emplace(std::pair{i, j}, std::move(res));
    }
    const PbwElement pi = spec.p_of(i);
    for (GenIndex j : alg.levi()) {
      PbwElement res = u_commutator(xi, gen(j)) -
                       dressed_bracket(algebra, i, j, [&](GenIndex k) { return ops.at(k); });
      if (!res.is_zero()) r.bed2_residuals.emplace(std::pair{i, j}, std::move(res));
      PbwElement pres = u_commutator(pi, gen(j)) -
                        dressed_bracket(algebra, i, j, [&](GenIndex k) { return spec.p_of(k); });
      if (!pres.is_zero()) r.p_transform_residuals.emplace(std::pair{i, j}, std::move(pres));
    }
    for (GenIndex j : alg.levi()) {
      if (j <= i) continue;
      PbwElement res = u_commutator(xi, ops.at(j)) -
                       spec.f * dressed_bracket(algebra, i, j, [&](GenIndex k) { return ops.at(k); });
      if (!res.is_zero()) r.factor_residuals.emplace(std::pair{i, j}, std::move(res));
    }
  }
  for (GenIndex j = 0; j < alg.dim(); ++j) {
    PbwElement res = u_commutator(spec.f, gen(j));
    if (res.is_zero()) continue;
    if (!alg.is_levi(j)) r.f_radical_residuals.emplace(j, res);
    r.f_g_residuals.emplace(j, std::move(res));
  }
  r.f_is_radical_invariant = r.f_radical_residuals.empty();
  r.f_is_g_invariant = r.f_g_residuals.empty();
  r.p_transform_ok = r.p_transform_residuals.empty();
  r.factor_identity_ok = r.factor_residuals.empty();
  r.passed = r.bed1_residuals.empty() && r.bed2_residuals.empty() && r.f_is_radical_invariant &&
             r.f_is_g_invariant && r.p_transform_ok && r.factor_identity_ok;
  return r;
}

PbwElement lift_casimir(const AlgebraPtr& algebra, const VirtualCopySpec& spec, const PbwElement& C) {
  return lift_casimir(algebra, spec, C, verify(algebra, spec));
}

PbwElement lift_casimir(const AlgebraPtr& algebra, const VirtualCopySpec& spec, const PbwElement& C,
                        const CopyVerificationReport& report) {
  if (!report.passed) throw PreconditionError("virtual-copy spec does not verify");
  if (C.lie().id() != algebra->id()) throw MalformedInput("Casimir belongs to a different algebra");
  for (GenIndex g : C.support())
    if (!algebra->is_levi(g)) throw PreconditionError("Casimir involves radical generator " + algebra->name(g));
  for (GenIndex j : algebra->levi())
    if (!u_commutator(C, PbwElement::generator(algebra, j)).is_zero())
      throw PreconditionError("element is not a Casimir of the Levi part (fails against " +
                              algebra->name(j) + ")");
  const auto ops = build_operators(algebra, spec);
  const CommPoly p = desymmetrize(C);
  std::function<PbwElement(VarIndex)> image = [&](VarIndex v) { return ops.at(static_cast<GenIndex>(v)); };
  return symmetrized_substitution(algebra, p, image);
}

FeasibilityVerdict feasibility(const LieAlgebra& algebra, unsigned trials, std::uint64_t seed) {
  if (algebra.radical().empty()) throw NotApplicable("radical is empty");
  if (algebra.levi().empty()) throw NotApplicable("Levi part is empty");
  FeasibilityVerdict v;
  v.count_algebra = invariant_count(algebra, trials, CountMethod::bb, seed).count;
  v.count_levi = invariant_count(algebra.levi_subalgebra(), trials, CountMethod::bb, seed).count;
  if (v.count_algebra <= v.count_levi) {
    v.possible = false;
    v.reason = "count";
    return v;
  }
  bool radical_abelian = true;
  bool action_trivial = true;
  for (const auto& [key, comb] : algebra.brackets()) {
    const bool la = algebra.is_levi(key.first), lb = algebra.is_levi(key.second);
    if (!la && !lb) radical_abelian = false;
    if (la != lb) action_trivial = false;
  }
  if (radical_abelian && !action_trivial) {
    v.possible = false;
    v.reason = "abelian-radical";
  }
  return v;
}

}  // namespace vcopy
