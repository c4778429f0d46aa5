#include <doctest.h>

#include "oracles.hpp"
#include "vcopy/catalog.hpp"
#include "vcopy/errors.hpp"
#include "vcopy/exterior.hpp"

using namespace vcopy;

namespace {

AlgebraPtr family(const std::string& name, int N = 0) { return build({name, N, std::nullopt}).algebra; }

ExteriorElement two(std::size_t n, GenIndex a, GenIndex b, const Rational& c = Rational(1)) {
  ExteriorElement e(n);
  e.add({a, b}, c);
  return e;
}

}  // namespace

TEST_CASE("wedge signs and grades") {
  ExteriorElement a = ExteriorElement::basis(4, 0), b = ExteriorElement::basis(4, 1);
  CHECK(a.wedge(b) == b.wedge(a).scaled(Rational(-1)));
  CHECK(a.wedge(a).is_zero());
  CHECK(a.wedge(b).grade() == 2);
  CHECK(ExteriorElement(4).grade() == -1);
  CHECK(ExteriorElement::one(4).grade() == 0);
  CHECK_THROWS_AS((a + a.wedge(b)).grade(), PreconditionError);
  ExteriorElement e(4);
  e.add({2, 0, 1}, Rational(1));
  CHECK(e.coefficient({0, 1, 2}) == Rational(1));
  CHECK(a.wedge(b).to_text({"x", "y", "z", "t"}) == "w_x^w_y");
}

TEST_CASE("abelian algebra has zero differential") {
  LieAlgebra ab({"a", "b", "c"}, {}, {});
  for (const auto& d : mc_differential(ab)) CHECK(d.is_zero());
}

TEST_CASE("Maurer-Cartan forms of IHa") {
  for (int N : {3, 4}) {
    AlgebraPtr a = family("IHa", N);
    auto d = mc_differential(*a);
    const std::size_t n = a->dim();
    CHECK(d[a->index("E")].is_zero());
    ExteriorElement expected(n);
    for (int k = 1; k <= N; ++k)
      expected.add({a->index("G" + std::to_string(k)), a->index("F" + std::to_string(k))}, Rational(-1));
    CHECK(d[a->index("R")] == expected);
    CHECK(wedge_rank(d[a->index("R")]) == static_cast<std::size_t>(N));
    CHECK(wedge_rank(d[a->index("T")]) == static_cast<std::size_t>(2 * N + 1));
  }
  AlgebraPtr q = family("QHa", 3);
  CHECK(wedge_rank(mc_differential(*q)[q->index("T")]) == 7u);
}

TEST_CASE("wedge rank examples") {
  CHECK(wedge_rank(two(4, 0, 1)) == 1);
  CHECK(wedge_rank(two(4, 0, 1) + two(4, 2, 3)) == 2);
  CHECK(wedge_rank(two(4, 0, 1) + two(4, 0, 2)) == 1);
  CHECK(wedge_rank(ExteriorElement(4)) == 0);
  CHECK_THROWS_AS(wedge_rank(ExteriorElement::basis(4, 0)), MalformedInput);
  CHECK_THROWS_AS(wedge_rank(two(4, 0, 1).wedge(two(4, 2, 3))), MalformedInput);
}

TEST_CASE("j0 of catalog algebras") {
  CHECK(j0_estimate(*family("so", 3)) == 1);
  CHECK(j0_estimate(*family("IHa", 3)) == 8);
  CHECK(j0_estimate(*family("QHa", 3)) == 8);
  CHECK(j0_estimate(*family("heisenberg", 2)) == 2);
}

TEST_CASE("d squared vanishes on catalog algebras") {
  oracle::Random rnd(7);
  for (const auto& name : family_names()) {
    AlgebraPtr a = build({name, family_takes_size(name) ? 3 : 0, std::nullopt}).algebra;
    auto d = mc_differential(*a);
    for (GenIndex k = 0; k < a->dim(); ++k) CHECK(exterior_derivative(d, d[k]).is_zero());
    ExteriorElement w = rnd.two_form(a->dim(), 4);
    CHECK(exterior_derivative(d, exterior_derivative(d, w)).is_zero());
  }
}

TEST_CASE("wedge rank agrees with explicit wedge powers") {
  oracle::Random rnd(11);
  for (int t = 0; t < 30; ++t) {
    ExteriorElement w = rnd.two_form(6, rnd.integer(0, 6));
    CHECK(wedge_rank(w) == wedge_rank_by_powers(w));
  }
}
