#include "vcopy/lie_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>

#include "vcopy/errors.hpp"

namespace vcopy {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

void add_to(LinComb& acc, GenIndex k, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = acc.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) acc.erase(it);
  }
}

LinComb negated(const LinComb& a) {
  LinComb out;
  for (const auto& [k, c] : a) out.emplace(k, -c);
  return out;
}

}  // namespace

std::string default_latex_name(std::string_view name) {
  std::size_t cut = name.size();
  while (cut > 0 && (std::isdigit(static_cast<unsigned char>(name[cut - 1])) || name[cut - 1] == '_')) --cut;
  if (cut == 0 || cut == name.size()) return std::string(name);
  std::string sub(name.substr(cut));
  std::replace(sub.begin(), sub.end(), '_', ',');
  return std::string(name.substr(0, cut)) + "_{" + sub + "}";
}

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<BracketSpec>& brackets,
                       const std::vector<GenIndex>& levi, std::vector<std::string> latex_names)
    : names_(std::move(names)), id_(next_algebra_id.fetch_add(1)) {
  const std::size_t n = names_.size();
  if (n == 0) throw MalformedInput("algebra has no generators");
  if (n > 4096) throw MalformedInput("algebra dimension too large");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nm = names_[i];
    if (nm.empty()) throw MalformedInput("empty generator name");
    for (char ch : nm) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw MalformedInput("invalid character in generator name '" + nm + "'");
    }
    if (std::isdigit(static_cast<unsigned char>(nm[0])))
      throw MalformedInput("generator name '" + nm + "' starts with a digit");
    if (!by_name_.emplace(nm, static_cast<GenIndex>(i)).second)
      throw MalformedInput("duplicate generator name '" + nm + "'");
  }
  if (latex_names.empty()) {
    for (const auto& nm : names_) latex_.push_back(default_latex_name(nm));
  } else {
    if (latex_names.size() != n) throw MalformedInput("latex name count does not match dimension");
    latex_ = std::move(latex_names);
  }

  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw MalformedInput("bracket index out of range");
    LinComb terms;
    for (const auto& [k, c] : b.terms) {
      if (k >= n) throw MalformedInput("bracket term index out of range");
      add_to(terms, k, c);
    }
    if (b.i == b.j) {
      if (!terms.empty())
        throw MalformedInput("nonzero self-bracket for '" + names_[b.i] + "'");
      continue;
    }
    auto key = std::minmax(b.i, b.j);
    LinComb canon = b.i < b.j ? terms : negated(terms);
    auto it = canonical_.find({key.first, key.second});
    if (it != canonical_.end()) {
      if (it->second != canon)
        throw MalformedInput("conflicting entries for [" + names_[b.i] + ", " + names_[b.j] + "]");
      continue;
    }
    if (!canon.empty()) canonical_.emplace(std::pair{key.first, key.second}, std::move(canon));
  }

  table_.assign(n * n, {});
  for (const auto& [key, comb] : canonical_) {
    auto& fwd = table_[key.first * n + key.second];
    auto& rev = table_[key.second * n + key.first];
    for (const auto& [k, c] : comb) {
      fwd.emplace_back(k, c);
      rev.emplace_back(k, -c);
    }
  }

  levi_mask_.assign(n, false);
  for (GenIndex l : levi) {
    if (l >= n) throw MalformedInput("Levi index out of range");
    if (levi_mask_[l]) throw MalformedInput("duplicate Levi index");
    levi_mask_[l] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (levi_mask_[i])
      levi_.push_back(static_cast<GenIndex>(i));
    else
      radical_.push_back(static_cast<GenIndex>(i));
  }
}

std::optional<GenIndex> LieAlgebra::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GenIndex LieAlgebra::index(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw MalformedInput("unknown generator '" + std::string(name) + "'");
  return *idx;
}

LieAlgebra LieAlgebra::levi_subalgebra() const {
  if (levi_.empty()) throw PreconditionError("algebra has an empty Levi part");
  std::map<GenIndex, GenIndex> remap;
  std::vector<std::string> names;
  std::vector<std::string> latex;
  for (GenIndex l : levi_) {
    remap.emplace(l, static_cast<GenIndex>(names.size()));
    names.push_back(names_[l]);
    latex.push_back(latex_[l]);
  }
  std::vector<BracketSpec> br;
  for (const auto& [key, comb] : canonical_) {
    if (!levi_mask_[key.first] || !levi_mask_[key.second]) continue;
    BracketSpec spec{remap.at(key.first), remap.at(key.second), {}};
    for (const auto& [k, c] : comb) {
      auto it = remap.find(k);
      if (it == remap.end()) throw PreconditionError("declared Levi part is not a subalgebra");
      spec.terms.emplace(it->second, c);
    }
    br.push_back(std::move(spec));
  }
  std::vector<GenIndex> all(names.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<GenIndex>(i);
  return LieAlgebra(std::move(names), br, all, std::move(latex));
}

LinComb bracket(const LieAlgebra& algebra, const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      for (const auto& [k, c] : algebra.structure(i, j)) add_to(out, k, ci * cj * c);
    }
  }
  return out;
}

Vector bracket(const LieAlgebra& algebra, const Vector& a, const Vector& b) {
  const std::size_t n = algebra.dim();
  if (a.size() != n || b.size() != n)
    throw MalformedInput("vector length does not match algebra dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      for (const auto& [k, c] : algebra.structure(static_cast<GenIndex>(i), static_cast<GenIndex>(j)))
        out[k] += a[i] * b[j] * c;
    }
  }
  return out;
}

ValidationReport validate(const LieAlgebra& algebra) {
  ValidationReport report;
  const std::size_t n = algebra.dim();
  // [[Xi,Xj],Xk] as LinComb, cyclic sum.
  auto double_bracket = [&](GenIndex i, GenIndex j, GenIndex k, LinComb& acc) {
    for (const auto& [m, c] : algebra.structure(i, j))
      for (const auto& [r, d] : algebra.structure(m, k)) add_to(acc, r, c * d);
  };
  for (GenIndex i = 0; i < n; ++i) {
    for (GenIndex j = i + 1; j < n; ++j) {
      for (GenIndex k = j + 1; k < n; ++k) {
        LinComb res;
        double_bracket(i, j, k, res);
        double_bracket(j, k, i, res);
        double_bracket(k, i, j, res);
        if (!res.empty()) report.jacobi.push_back({i, j, k, std::move(res)});
      }
    }
  }
  for (GenIndex i = 0; i < n; ++i) {
    for (GenIndex j = i + 1; j < n; ++j) {
      const bool li = algebra.is_levi(i), lj = algebra.is_levi(j);
      LinComb bad;
      if (li && lj) {
        for (const auto& [k, c] : algebra.structure(i, j))
          if (!algebra.is_levi(k)) bad.emplace(k, c);
        if (!bad.empty())
          report.closure.push_back({ClosureViolation::Kind::levi_not_subalgebra, i, j, std::move(bad)});
      } else {
        for (const auto& [k, c] : algebra.structure(i, j))
          if (algebra.is_levi(k)) bad.emplace(k, c);
        if (!bad.empty())
          report.closure.push_back({ClosureViolation::Kind::radical_not_ideal, i, j, std::move(bad)});
      }
    }
  }
  return report;
}

}  // namespace vcopy
