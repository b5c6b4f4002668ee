#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cumulant/errors.hpp"
#include "support.hpp"

using namespace cumulant;
using namespace cumulant::testing;

namespace {

SElement element(const Vector& v) { return SymmetricCoalgebra::embed(v); }

SElement wedge(const SymmetricCoalgebra& s, const SElement& u, const SElement& v) { return s.wedge(u, v).value; }

TaylorFamily restrict_to(const TaylorFamily& family, int arity) {
  TaylorFamily out{family.source, family.target, family.degree, {}};
  if (auto it = family.arities.find(arity); it != family.arities.end()) out.arities[arity] = it->second;
  return out;
}

}  // namespace

TEST_CASE("coderivation extension of a linear map") {
  const Algebra e = e2();
  const SpacePtr& space = e.space();
  const SymmetricCoalgebra s(space, 3);
  // d(a) = g, d(b) = 2g: degree 1
  const LinearMap d = LinearMap::build(space, space, 1, {{0, basis_vector(2)}, {1, vec({{2, 2}})}});
  const TabulatedMap dd = extend_coderivation(TaylorFamily::from_linear_map(d), 3);
  for (const Monomial& m : s.monomials(2)) {
    const SElement x(Monomial{{m.factors[0]}}, Scalar(1));
    const SElement y(Monomial{{m.factors[1]}}, Scalar(1));
    const SElement expected =
        wedge(s, element(d.column(m.factors[0])), y) +
        Scalar(koszul_factor(1, space->degree(m.factors[0]))) * wedge(s, x, element(d.column(m.factors[1])));
    CHECK(dd.at(m) == expected);
  }
  CHECK(dd.at(mono({0, 1})) == SElement(mono({1, 2}), 1) - SElement(mono({0, 2}), 2));
}

TEST_CASE("arity-two coderivation on a weight-three monomial") {
  std::mt19937 rng(3);
  const Algebra p = p8();
  TaylorFamily family = restrict_to(random_family(p.space(), p.space(), 0, 2, rng), 2);
  const SymmetricCoalgebra s(p.space(), 3);
  const TabulatedMap dd = extend_coderivation(family, 3);
  const Monomial m = mono({0, 1, 2});
  auto single = [](int i) { return SElement(Monomial{{i}}, Scalar(1)); };
  const SElement expected = wedge(s, element(family.value(mono({0, 1}))), single(2)) +
                            wedge(s, element(family.value(mono({0, 2}))), single(1)) +
                            wedge(s, element(family.value(mono({1, 2}))), single(0));
  CHECK(dd.at(m) == expected);
  CHECK(extend_coderivation(TaylorFamily{p.space(), p.space(), 0, {}}, 3).table().empty());
}

TEST_CASE("coalgebra map extension") {
  std::mt19937 rng(5);
  const Algebra e = e2();
  const SymmetricCoalgebra s(e.space(), 3);
  const TaylorFamily family = random_family(e.space(), e.space(), 0, 2, rng);
  const TabulatedMap g = extend_coalgebra_map(family, 3);
  for (const Monomial& m : s.monomials(2)) {
    const SElement expected =
        wedge(s, element(family.value(Monomial{{m.factors[0]}})), element(family.value(Monomial{{m.factors[1]}}))) +
        element(family.value(m));
    CHECK(g.at(m) == expected);
  }
  const TaylorFamily id = TaylorFamily::from_linear_map(LinearMap::identity(e.space()));
  CHECK(compare_maps("identity", extend_coalgebra_map(id, 4), TabulatedMap::identity({e.space(), 4})).passed);
  CHECK_THROWS_AS(extend_coalgebra_map(TaylorFamily{e.space(), e.space(), 1, {}}, 3), MismatchError);
}

TEST_CASE("taylor extraction inverts both extensions") {
  std::mt19937 rng(17);
  std::vector<Algebra> algebras{e2(), p8()};
  for (int k = 0; k < 4; ++k) algebras.push_back(random_algebra(rng));
  for (const Algebra& a : algebras) {
    const int cap = a.dimension() > 3 ? 3 : 4;
    const TaylorFamily g = random_family(a.space(), a.space(), 0, cap, rng);
    const TabulatedMap gg = extend_coalgebra_map(g, cap);
    for (int n = 1; n <= cap; ++n) {
      CHECK(taylor_extract(gg, n) == (g.arities.count(n) ? g.arities.at(n) : TaylorTable{}));
    }
    CHECK(taylor_family(gg) == g);
    CHECK(check_comorphism(gg).passed);

    for (int degree : {-1, 1}) {
      const TaylorFamily d = random_family(a.space(), a.space(), degree, cap, rng);
      const TabulatedMap dd = extend_coderivation(d, cap);
      CHECK(taylor_family(dd) == d);
      CHECK(check_coderivation(dd).passed);
    }
  }
  const SymmetricCoalgebra s(p8().space(), 3);
  const TabulatedMap id = TabulatedMap::identity(s);
  CHECK(taylor_extract(id, 1).size() == 8);
  CHECK(taylor_extract(id, 2).empty());
}

TEST_CASE("brackets") {
  std::mt19937 rng(23);
  const Algebra e = e2();
  const int cap = 4;
  const SymmetricCoalgebra s(e.space(), cap);
  const TaylorFamily odd = random_family(e.space(), e.space(), 1, 3, rng);
  const TabulatedMap d = extend_coderivation(odd, cap);
  CHECK(compare_maps("odd square", bracket(d, d), Scalar(2) * compose(d, d)).passed);
  CHECK(bracket(d, TabulatedMap::zero(e.space(), e.space(), 0, cap)).table().empty());

  for (int trial = 0; trial < 5; ++trial) {
    const Algebra a = trial == 0 ? e : random_algebra(rng);
    const LinearMap d1 = random_linear_map(a.space(), a.space(), 1, rng);
    const LinearMap d2 = random_linear_map(a.space(), a.space(), trial % 2 ? 1 : -1, rng);
    const TabulatedMap lhs = bracket(extend_coderivation(TaylorFamily::from_linear_map(d1), cap),
                                     extend_coderivation(TaylorFamily::from_linear_map(d2), cap));
    const TabulatedMap rhs = extend_coderivation(TaylorFamily::from_linear_map(commutator(d1, d2)), cap);
    CHECK(compare_maps("bracket", lhs, rhs).passed);
  }

  // brackets of coderivations are coderivations
  const TabulatedMap d2 = extend_coderivation(random_family(e.space(), e.space(), -1, 3, rng), cap);
  CHECK(check_coderivation(bracket(d, d2)).passed);
}

TEST_CASE("law checkers reject corrupted maps") {
  const Algebra p = p8();
  const SymmetricCoalgebra s(p.space(), 3);
  TabulatedMap::Table table = TabulatedMap::identity(s).table();
  table[mono({0, 0})].add(mono({1}), Scalar(1));
  const TabulatedMap junk(p.space(), p.space(), 0, 3, table);
  const CheckReport comor = check_comorphism(junk);
  CHECK_FALSE(comor.passed);
  CHECK(comor.witness == std::vector<std::string>{"x1", "x1", "x1"});

  TabulatedMap::Table bad;
  bad[mono({0, 0})] = SElement(mono({0, 0}), Scalar(1));
  const CheckReport coder = check_coderivation(TabulatedMap(p.space(), p.space(), 0, 3, bad));
  CHECK_FALSE(coder.passed);
  CHECK(coder.witness == std::vector<std::string>{"x1", "x1"});
}

TEST_CASE("triangular inverse") {
  std::mt19937 rng(29);
  const Algebra e = e2();
  const SymmetricCoalgebra s(e.space(), 4);
  TaylorFamily g = random_family(e.space(), e.space(), 0, 3, rng);
  for (int i = 0; i < 3; ++i) g.set(Monomial{{i}}, basis_vector(i));
  const TabulatedMap gg = extend_coalgebra_map(g, 4);
  CHECK(check_unitriangular(gg).passed);
  const TabulatedMap inv = triangular_inverse(gg);
  CHECK(compare_maps("left", compose(inv, gg), TabulatedMap::identity(s)).passed);
  CHECK(compare_maps("right", compose(gg, inv), TabulatedMap::identity(s)).passed);
  CHECK(check_comorphism(inv).passed);

  TaylorFamily scaled = g;
  scaled.set(mono({2}), vec({{2, 2}}));
  const TabulatedMap not_triangular = extend_coalgebra_map(scaled, 4);
  CHECK_FALSE(check_unitriangular(not_triangular).passed);
  try {
    triangular_inverse(not_triangular);
    FAIL("expected a validation error");
  } catch (const ValidationError& err) {
    CHECK(err.witness() == "g");
  }
}

TEST_CASE("tabulated maps refuse weights above the cap") {
  const SymmetricCoalgebra s(e2().space(), 2);
  const TabulatedMap id = TabulatedMap::identity(s);
  CHECK_THROWS_AS(id.apply(SElement(mono({0, 1, 2}), 1)), MismatchError);
}
