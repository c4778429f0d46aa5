#include "vcopy/casimir_gen.hpp"

#include "vcopy/errors.hpp"
#include "vcopy/invariants.hpp"

namespace vcopy {

std::string rotation_name(int i, int j, int N) {
  if (N < 10) return "J" + std::to_string(i) + std::to_string(j);
  return "J" + std::to_string(i) + "_" + std::to_string(j);
}

PolyMatrix build_so_matrix(const AlgebraPtr& algebra, const VirtualCopySpec& spec, int N) {
  if (N < 1) throw MalformedInput("matrix size must be positive");
  const std::size_t n = algebra->dim();
  PolyMatrix m(N, std::vector<CommPoly>(N, CommPoly(n)));
  if (N == 1) return m;
  const auto ops = build_operators(algebra, spec);
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      const std::string name = rotation_name(i, j, N);
      auto idx = algebra->find(name);
      if (!idx) throw MalformedInput("missing rotation generator " + name);
      auto it = ops.find(*idx);
      if (it == ops.end()) throw MalformedInput(name + " is not a Levi generator");
      CommPoly entry = principal_symbol(it->second);
      m[i - 1][j - 1] = entry;
      m[j - 1][i - 1] = -entry;
    }
  }
  return m;
}

CommPoly characteristic_polynomial(const PolyMatrix& M) {
  const std::size_t N = M.size();
  if (N == 0) throw MalformedInput("empty matrix");
  const std::size_t n = M[0][0].nvars();
  for (const auto& row : M) {
    if (row.size() != N) throw MalformedInput("matrix is not square");
    for (const auto& e : row)
      if (e.nvars() != n) throw MalformedInput("matrix entries over different variable universes");
  }
  const VarIndex t = static_cast<VarIndex>(n);
  PolyMatrix a(N, std::vector<CommPoly>(N, CommPoly(n + 1)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) a[i][j] = -M[i][j].widened(n + 1);
    a[i][i] += CommPoly::variable(n + 1, t);
  }
  bool negate = false;
  CommPoly prev = CommPoly::constant(n + 1, Rational(1));
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < N && a[p][k].is_zero()) ++p;
      if (p == N) return CommPoly(n + 1);
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        CommPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num.exact_div(prev);
      }
      a[i][k] = CommPoly(n + 1);
    }
    prev = a[k][k];
  }
  return negate ? -a[N - 1][N - 1] : a[N - 1][N - 1];
}

std::map<unsigned, CommPoly> char_poly_coefficients(const PolyMatrix& M) {
  const CommPoly chi = characteristic_polynomial(M);
  const std::size_t N = M.size();
  const std::size_t n = M[0][0].nvars();
  bool antisymmetric = true;
  for (std::size_t i = 0; i < N && antisymmetric; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (M[i][j] != -M[j][i]) {
        antisymmetric = false;
        break;
      }
  std::vector<CommPoly> by_power = chi.collect(static_cast<VarIndex>(n));
  auto coeff = [&](std::size_t power) {
    CommPoly c = power < by_power.size() ? by_power[power] : CommPoly(n + 1);
    CommPoly out(n);
    for (const auto& [m, v] : c.terms()) out.add_term(m, v);
    return out;
  };
  std::map<unsigned, CommPoly> result;
  for (std::size_t m = 1; m <= N; ++m) {
    CommPoly c = coeff(N - m);
    if (m % 2 == 1) {
      if (antisymmetric && !c.is_zero())
        throw ConsistencyError("odd characteristic coefficient of an antisymmetric matrix is nonzero");
      continue;
    }
    result.emplace(static_cast<unsigned>(m / 2), std::move(c));
  }
  return result;
}

CasimirSet casimir_set(const AlgebraPtr& algebra, const VirtualCopySpec& spec, int N,
                       const CasimirOptions& options) {
  CasimirSet out;
  out.N = N;
  out.coefficients = char_poly_coefficients(build_so_matrix(algebra, spec, N));
  for (const auto& [l, c] : out.coefficients) {
    if (c.is_zero()) throw ConsistencyError("characteristic coefficient C_" + std::to_string(2 * l) + " vanishes");
    if (!is_invariant(*algebra, c).invariant)
      throw ConsistencyError("C_" + std::to_string(2 * l) + " is not invariant; check the spec transcription");
    const unsigned deg = static_cast<unsigned>(c.degree());
    out.commutator_checked[l] = false;
    if (deg > options.symmetrize_max_degree) continue;
    DegreeCapGuard cap(std::max(degree_cap(), deg + 1));
    PbwElement s = symmetrize(algebra, c);
    if (deg <= options.commutator_check_max_degree) {
      for (GenIndex g = 0; g < algebra->dim(); ++g)
        if (!u_commutator(PbwElement::generator(algebra, g), s).is_zero())
          throw ConsistencyError("Sym(C_" + std::to_string(2 * l) + ") does not commute with " +
                                 algebra->name(g));
      out.commutator_checked[l] = true;
    }
    out.symmetrized.emplace(l, std::move(s));
  }
  return out;
}

}  // namespace vcopy
