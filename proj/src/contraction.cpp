#include "vcopy/contraction.hpp"

#include <algorithm>
#include <memory>

#include "vcopy/errors.hpp"

namespace vcopy {

ContractionWeights::ContractionWeights(const LieAlgebra& algebra, const std::map<GenIndex, int>& weights) {
  for (const auto& [i, n] : weights) {
    if (i >= algebra.dim()) throw MalformedInput("weight index out of range");
    if (n == 0) continue;
    if (algebra.is_levi(i)) {
      forced_.push_back(i);
      continue;
    }
    n_.emplace(i, n);
  }
}

ContractionWeights ContractionWeights::from_names(const LieAlgebra& algebra,
                                                  const std::map<std::string, int>& weights) {
  std::map<GenIndex, int> byindex;
  for (const auto& [name, n] : weights) byindex.emplace(algebra.index(name), n);
  return ContractionWeights(algebra, byindex);
}

int ContractionWeights::weight(GenIndex i) const {
  auto it = n_.find(i);
  return it == n_.end() ? 0 : it->second;
}

int ContractionWeights::word_weight(const Word& w) const {
  int s = 0;
  for (char16_t g : w) s += weight(static_cast<GenIndex>(g));
  return s;
}

LieAlgebra contract_algebra(const LieAlgebra& algebra, const ContractionWeights& w) {
  std::vector<BracketSpec> kept;
  for (const auto& [key, comb] : algebra.brackets()) {
    BracketSpec b{key.first, key.second, {}};
    for (const auto& [k, c] : comb) {
      const int e = w.weight(key.first) + w.weight(key.second) - w.weight(k);
      if (e < 0)
        throw LimitDoesNotExist("[" + algebra.name(key.first) + ", " + algebra.name(key.second) +
                                "] has component " + algebra.name(k) + " scaling with exponent " +
                                std::to_string(e));
      if (e == 0) b.terms.emplace(k, c);
    }
    if (!b.terms.empty()) kept.push_back(std::move(b));
  }
  LieAlgebra out(algebra.names(), kept, algebra.levi(), algebra.latex_names());
  if (!validate(out).ok()) throw ConsistencyError("contracted algebra violates the Lie axioms");
  return out;
}

LeadingPart weighted_leading_part(const PbwElement& p, const ContractionWeights& w) {
  if (p.is_zero()) throw UndefinedLeadingPart("leading part of zero is undefined");
  int best = 0;
  bool first = true;
  for (const auto& [word, c] : p.terms()) {
    const int m = w.word_weight(word);
    if (first || m > best) best = m;
    first = false;
  }
  LeadingPart lp{best, PbwElement(p.algebra())};
  for (const auto& [word, c] : p.terms())
    if (w.word_weight(word) == best) lp.part.add_normal_term(word, c);
  return lp;
}

ContractionOutcome contract_copy(const AlgebraPtr& algebra, const VirtualCopySpec& spec,
                                 const ContractionWeights& w, bool run_verify) {
  check_spec(*algebra, spec);
  ContractionOutcome out{std::make_shared<const LieAlgebra>(contract_algebra(*algebra, w)),
                         0, {}, {}, PbwElement(algebra), {}, {}, false, std::nullopt, std::nullopt};
  const AlgebraPtr& prime = out.algebra_prime;
  LeadingPart lf = weighted_leading_part(spec.f, w);
  out.M0 = lf.M;
  out.f0 = lf.part.rebased(prime);
  out.copy_compatible = true;
  for (GenIndex i : algebra->levi()) {
    const PbwElement xi = PbwElement::generator(prime, i);
    const PbwElement pi = spec.p_of(i);
    if (pi.is_zero()) {
      out.Ni.emplace(i, out.M0);
      out.operators.emplace(i, xi * out.f0);
      continue;
    }
    LeadingPart lp = weighted_leading_part(pi, w);
    PbwElement p0 = lp.part.rebased(prime);
    out.Mi.emplace(i, lp.M);
    out.Ni.emplace(i, std::max(out.M0, lp.M));
    if (out.M0 > lp.M)
      out.operators.emplace(i, xi * out.f0);
    else if (out.M0 < lp.M)
      out.operators.emplace(i, p0);
    else
      out.operators.emplace(i, xi * out.f0 + p0);
    if (lp.M != out.M0) out.copy_compatible = false;
    out.P0.emplace(i, std::move(p0));
  }
  VirtualCopySpec contracted{out.f0, out.P0, spec.k};
  try {
    check_spec(*prime, contracted);
    out.contracted_spec = contracted;
  } catch (const MalformedSpec&) {
    // Leading parts of lower filtration degree: no spec of the same shape exists.
  }
  if (run_verify && out.contracted_spec) out.contracted_report = verify(prime, *out.contracted_spec);
  return out;
}

}  // namespace vcopy
