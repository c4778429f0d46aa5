#include <doctest.h>

#include "vcopy/catalog.hpp"
#include "vcopy/errors.hpp"
#include "vcopy/io.hpp"

using namespace vcopy;

namespace {

std::size_t expected_dim(const std::string& name, int N) {
  const std::size_t n = static_cast<std::size_t>(N);
  const std::size_t so = n * (n - 1) / 2;
  if (name == "so") return so;
  if (name == "su11") return 3;
  if (name == "heisenberg") return 2 * n + 1;
  if (name == "weyl_quesne") return n * n + 2 * n + 1;
  if (name == "Ha") return n * (n + 3) / 2 + 1;
  if (name == "IHa") return so + 4 * n + 3;
  if (name == "QHa") return (n * n + 7 * n + 12) / 2;
  if (name.rfind("IHa_", 0) == 0) return so + 4 * n + 3 + (name.size() - 4);
  return 10;  // boson families
}

}  // namespace

TEST_CASE("catalog dimensions and validity") {
  for (const auto& name : family_names())
    for (int N : {3, 4, 5}) {
      if (!family_takes_size(name) && N > 3) continue;
      const int size = family_takes_size(name) ? N : 0;
      CatalogEntry e = build({name, size, std::nullopt});
      CAPTURE(name);
      CAPTURE(N);
      CHECK(e.algebra->dim() == expected_dim(name, N));
      CHECK(validate(*e.algebra).ok());
    }
  CHECK(build({"Ha", 3, std::nullopt}).algebra->dim() == 10);
  CHECK(build({"QHa", 3, std::nullopt}).algebra->dim() == 21);
}

TEST_CASE("basis order puts the Levi part first") {
  AlgebraPtr q = build({"QHa", 3, std::nullopt}).algebra;
  const std::vector<std::string> expected = {"J12", "J13", "J23", "G1", "G2", "G3", "F1", "F2", "F3", "Q1", "Q2",
                                             "Q3",  "P1",  "P2",  "P3", "R",  "E",  "T",  "L",  "A",  "M"};
  CHECK(q->names() == expected);
  CHECK(q->levi() == std::vector<GenIndex>{0, 1, 2});
  CHECK(q->latex_name(q->index("J12")) == "J_{12}");
  CHECK(build({"so", 10, std::nullopt}).algebra->find("J1_10"));
}

TEST_CASE("specs shipped with the catalog") {
  CatalogEntry ha = build({"Ha", 3, std::nullopt});
  REQUIRE(ha.spec);
  CHECK(ha.spec->f == parse_pbw(ha.algebra, "R"));
  CHECK(ha.spec->k == 2);
  CatalogEntry q = build({"QHa", 3, std::nullopt});
  CHECK(q.spec->f == parse_pbw(q.algebra, "T^2 + R*L - A*M"));
  CHECK(q.spec->k == 3);
  CatalogEntry w = build({"weyl_quesne", 2, std::nullopt});
  CHECK(w.spec->f == parse_pbw(w.algebra, "I"));
  CHECK(w.spec->p_of(w.algebra->index("E12")) == parse_pbw(w.algebra, "-bd1*b2"));
  CHECK_FALSE(build({"boson_example", 0, Rational(2)}).spec);
  CHECK_FALSE(build({"so", 3, std::nullopt}).spec);
  CHECK_FALSE(build({"heisenberg", 3, std::nullopt}).spec);
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(build({"nope", 3, std::nullopt}), MalformedInput);
  CHECK_THROWS_AS(build({"IHa_X", 3, std::nullopt}), MalformedInput);
  CHECK_THROWS_AS(build({"Ha", 2, std::nullopt}), MalformedInput);
  CHECK_THROWS_AS(build({"so", 1, std::nullopt}), MalformedInput);
  CHECK_THROWS_AS(build({"heisenberg", 41, std::nullopt}), MalformedInput);
}

TEST_CASE("quadratic Levi Casimirs and central generators") {
  CatalogEntry e = build({"IHa_AM", 3, std::nullopt});
  PbwElement c = *quadratic_levi_casimir(e);
  for (GenIndex i : e.algebra->levi()) CHECK(u_commutator(c, PbwElement::generator(e.algebra, i)).is_zero());
  std::vector<std::string> central;
  for (GenIndex i : central_generators(*e.algebra)) central.push_back(e.algebra->name(i));
  CHECK(central == std::vector<std::string>{"T", "A", "M"});
  CHECK_FALSE(quadratic_levi_casimir(build({"heisenberg", 2, std::nullopt})));
  CatalogEntry w = build({"weyl_quesne", 2, std::nullopt});
  PbwElement cw = *quadratic_levi_casimir(w);
  for (GenIndex i : w.algebra->levi()) CHECK(u_commutator(cw, PbwElement::generator(w.algebra, i)).is_zero());
}

TEST_CASE("catalog algebras round-trip through JSON") {
  for (const auto& name : family_names()) {
    CatalogEntry e = build({name, family_takes_size(name) ? 3 : 0, std::nullopt});
    AlgebraPtr back = algebra_from_json(algebra_to_json(*e.algebra));
    CAPTURE(name);
    CHECK(back->names() == e.algebra->names());
    CHECK(back->brackets() == e.algebra->brackets());
    CHECK(back->levi() == e.algebra->levi());
    CHECK(back->latex_names() == e.algebra->latex_names());
    if (e.spec) {
      VirtualCopySpec s = spec_from_json(back, spec_to_json(*e.algebra, *e.spec));
      CHECK(s.f == e.spec->f.rebased(back));
      CHECK(s.k == e.spec->k);
    }
  }
}
