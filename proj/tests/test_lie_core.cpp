#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "vcopy/catalog.hpp"
#include "vcopy/errors.hpp"
#include "vcopy/lie_algebra.hpp"

using namespace vcopy;

namespace {

LinComb single(GenIndex k, long c) { return LinComb{{k, Rational(c)}}; }

Vector unit(const LieAlgebra& a, const std::string& name) {
  Vector v(a.dim());
  v[a.index(name)] = 1;
  return v;
}

// Rebuilds an algebra with one structure constant replaced.
LieAlgebra perturbed(const LieAlgebra& a, GenIndex i, GenIndex j, GenIndex k, const Rational& c) {
  std::vector<BracketSpec> specs;
  for (const auto& [key, comb] : a.brackets()) specs.push_back({key.first, key.second, comb});
  for (auto& s : specs)
    if (s.i == i && s.j == j) s.terms[k] = c;
  return LieAlgebra(a.names(), specs, a.levi());
}

}  // namespace

TEST_CASE("catalog Ha(3) passes validation") {
  auto e = build({"Ha", 3, std::nullopt});
  CHECK(validate(*e.algebra).ok());
}

TEST_CASE("abelian algebra validates") {
  LieAlgebra a({"a", "b", "c", "d"}, {}, {});
  auto r = validate(a);
  CHECK(r.ok());
  CHECK(r.jacobi.empty());
  CHECK(a.radical().size() == 4);
}

TEST_CASE("perturbing [J12,J13] in Ha(3) breaks Jacobi on mixed triples") {
  auto e = build({"Ha", 3, std::nullopt});
  const LieAlgebra& a = *e.algebra;
  const GenIndex J12 = a.index("J12"), J13 = a.index("J13"), J23 = a.index("J23");
  REQUIRE(a.brackets().at({J12, J13}).at(J23) == -1);
  LieAlgebra bad = perturbed(a, J12, J13, J23, Rational(-2));
  auto r = validate(bad);
  REQUIRE_FALSE(r.ok());
  auto find = [&](const std::string& x, const std::string& y, const std::string& z) -> const JacobiViolation* {
    for (const auto& v : r.jacobi)
      if (v.i == bad.index(x) && v.j == bad.index(y) && v.k == bad.index(z)) return &v;
    return nullptr;
  };
  // In any algebra spanned by three elements closing among themselves the
  // cyclic sum on that triple vanishes identically, so the rotations alone are clean.
  CHECK(find("J12", "J13", "J23") == nullptr);
  // Extra term -[J23, V_k] in the cyclic sum: -[J23,G2] = G3, -[J23,G3] = -G2.
  const JacobiViolation* g2 = find("J12", "J13", "G2");
  REQUIRE(g2 != nullptr);
  CHECK(g2->residual == single(bad.index("G3"), 1));
  const JacobiViolation* g3 = find("J12", "J13", "G3");
  REQUIRE(g3 != nullptr);
  CHECK(g3->residual == single(bad.index("G2"), -1));
  CHECK(find("J12", "J13", "G1") == nullptr);
}

TEST_CASE("bad Jacobi triple from a three-dimensional example") {
  // [a,b] = a, [a,c] = b: cyclic sum on (a,b,c) is b.
  LieAlgebra a({"a", "b", "c"}, {{0, 1, single(0, 1)}, {0, 2, single(1, 1)}}, {});
  auto r = validate(a);
  REQUIRE(r.jacobi.size() == 1);
  CHECK(r.jacobi[0].residual == single(1, 1));
}

TEST_CASE("closure violations are reported") {
  // Levi {s}, radical {r}: [s, r] = s puts a Levi element inside the radical ideal.
  LieAlgebra a({"s", "r"}, {{0, 1, single(0, 1)}}, {0});
  auto r = validate(a);
  CHECK(r.jacobi.empty());
  REQUIRE(r.closure.size() == 1);
  CHECK(r.closure[0].kind == ClosureViolation::Kind::radical_not_ideal);

  // Levi {x, y} with [x, y] = z outside the Levi set.
  LieAlgebra b({"x", "y", "z"}, {{0, 1, single(2, 1)}}, {0, 1});
  auto rb = validate(b);
  REQUIRE(rb.closure.size() == 1);
  CHECK(rb.closure[0].kind == ClosureViolation::Kind::levi_not_subalgebra);
}

TEST_CASE("malformed structure data is rejected") {
  CHECK_THROWS_AS(LieAlgebra({"a", "a"}, {}, {}), MalformedInput);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 5, single(1, 1)}}, {}), MalformedInput);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, single(7, 1)}}, {}), MalformedInput);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {}, {3}), MalformedInput);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, single(1, 1)}, {1, 0, single(1, 1)}}, {}), MalformedInput);
  CHECK_THROWS_AS(LieAlgebra({}, {}, {}), MalformedInput);
  CHECK_THROWS_AS(LieAlgebra({"1x"}, {}, {}), MalformedInput);
  // The reversed entry with the opposite sign is consistent.
  LieAlgebra ok({"a", "b"}, {{0, 1, single(1, 1)}, {1, 0, single(1, -1)}}, {});
  CHECK(ok.structure(1, 0).front().second == -1);
}

TEST_CASE("bracket on catalog examples") {
  auto ha = build({"Ha", 4, std::nullopt});
  const LieAlgebra& a = *ha.algebra;
  CHECK(bracket(a, unit(a, "G1"), unit(a, "F1")) == unit(a, "R"));
  Vector minus_r(a.dim());
  minus_r[a.index("R")] = -1;
  CHECK(bracket(a, unit(a, "F1"), unit(a, "G1")) == minus_r);

  auto iha = build({"IHa", 3, std::nullopt});
  const LieAlgebra& b = *iha.algebra;
  Vector two_t(b.dim());
  two_t[b.index("T")] = 2;
  CHECK(bracket(b, unit(b, "E"), unit(b, "R")) == two_t);

  oracle::Random rnd(7);
  Vector v = rnd.vector(b.dim());
  CHECK(bracket(b, v, v) == Vector(b.dim()));

  CHECK_THROWS_AS(bracket(b, Vector(3), v), MalformedInput);
}

TEST_CASE("sparse bracket agrees with dense bracket") {
  auto e = build({"QHa", 3, std::nullopt});
  const LieAlgebra& a = *e.algebra;
  oracle::Random rnd(11);
  for (int t = 0; t < 20; ++t) {
    Vector x = rnd.vector(a.dim()), y = rnd.vector(a.dim());
    LinComb sx, sy;
    for (GenIndex i = 0; i < a.dim(); ++i) {
      if (x[i] != 0) sx[i] = x[i];
      if (y[i] != 0) sy[i] = y[i];
    }
    Vector dense = bracket(a, x, y);
    LinComb sparse = bracket(a, sx, sy);
    for (GenIndex k = 0; k < a.dim(); ++k) {
      auto it = sparse.find(k);
      CHECK(dense[k] == (it == sparse.end() ? Rational(0) : it->second));
    }
  }
}

TEST_CASE("Levi subalgebra extraction") {
  auto e = build({"IHa", 4, std::nullopt});
  LieAlgebra s = e.algebra->levi_subalgebra();
  CHECK(s.dim() == 6);
  CHECK(validate(s).ok());
  CHECK(s.radical().empty());
  CHECK(s.name(0) == "J12");
  LieAlgebra abelian({"a"}, {}, {});
  CHECK_THROWS_AS(abelian.levi_subalgebra(), PreconditionError);
}

TEST_CASE("default LaTeX names") {
  CHECK(default_latex_name("J12") == "J_{12}");
  CHECK(default_latex_name("G3") == "G_{3}");
  CHECK(default_latex_name("J1_10") == "J_{1,10}");
  CHECK(default_latex_name("R") == "R");
}
