#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cumulant/closed_form.hpp"
#include "cumulant/errors.hpp"
#include "cumulant/probability.hpp"
#include "support.hpp"

using namespace cumulant;
using namespace cumulant::testing;

namespace {

constexpr const char* kG2 = "f(xy)-f(x)f(y)";
constexpr const char* kG3 = "f(xyz)-f(xy)f(z)-f(yz)f(x)-f(zx)f(y)+2f(x)f(y)f(z)";
constexpr const char* kH2 = "f(xy)-f(x)y-xf(y)";
constexpr const char* kH3 = "f(xyz)-f(xy)z-f(xz)y-f(yz)x+xyf(z)+xzf(y)+yzf(x)";

/// τ̃⁻¹ as the coalgebra extension of (-1)^{n-1}(n-1)! τ_n.
TabulatedMap mobius_inverse(const Algebra& algebra, int cap) {
  TaylorFamily family{algebra.space(), algebra.space(), 0, {}};
  const SymmetricCoalgebra s(algebra.space(), cap);
  for (const Monomial& m : s.monomials()) {
    const int n = m.weight();
    Scalar c(static_cast<long>(factorial(n - 1)));
    if (n % 2 == 0) c = -c;
    family.set(m, c * tau(algebra, m));
  }
  return extend_coalgebra_map(family, cap);
}

/// τ̃ through the lifting series instead of set partitions.
TabulatedMap series_forward(const Algebra& algebra, int cap) {
  const SymmetricCoalgebra s(algebra.space(), cap);
  return TabulatedMap::tabulate(s, algebra.space(), 0,
                                [&](const Monomial& m) { return tau_tilde_series(algebra, s, m); });
}

std::vector<Algebra> test_algebras(std::mt19937& rng, int random_count) {
  std::vector<Algebra> out{e2(), p8()};
  for (int k = 0; k < random_count; ++k) out.push_back(random_algebra(rng));
  return out;
}

int cap_for(const Algebra& a) { return a.dimension() > 3 ? 4 : 5; }

}  // namespace

TEST_CASE("tau examples") {
  const Algebra e = e2();
  CHECK(tau(e, mono({0})) == basis_vector(0));
  CHECK(tau(e, mono({0, 1})) == basis_vector(2));
  const SymmetricCoalgebra s(e.space(), 3);
  for (const Monomial& m : s.monomials(3)) CHECK(tau(e, m).is_zero());
}

TEST_CASE("tau tilde low weights") {
  const Algebra p = p8();
  const SymmetricCoalgebra s(p.space(), 3);
  CHECK(tau_tilde(p, s, mono({3})) == SElement(mono({3}), 1));
  SElement expected;
  expected.add(mono({0, 1}), 1);
  expected.add(mono({2}), 1);
  CHECK(tau_tilde(p, s, mono({0, 1})) == expected);

  // x1∧x2∧x3 → x6 + x3∧x3 + x4∧x2 + x5∧x1 + x1∧x2∧x3
  SElement three;
  three.add(mono({5}), 1);
  three.add(mono({2, 2}), 1);
  three.add(mono({1, 3}), 1);
  three.add(mono({0, 4}), 1);
  three.add(mono({0, 1, 2}), 1);
  CHECK(tau_tilde(p, s, mono({0, 1, 2})) == three);

  const Algebra e = e2();
  const CumulantContext ctx(e, 3);
  SElement inv;
  inv.add(mono({0, 1}), 1);
  inv.add(mono({2}), -1);
  CHECK(ctx.apply_inverse(SElement(mono({0, 1}), 1)) == inv);
}

TEST_CASE("tau tilde is a unitriangular comorphism and both routes agree") {
  std::mt19937 rng(31);
  for (const Algebra& a : test_algebras(rng, 5)) {
    const int cap = cap_for(a);
    const CumulantContext ctx(a, cap);
    CHECK(check_comorphism(ctx.forward()).passed);
    CHECK(check_unitriangular(ctx.forward()).passed);
    CHECK(compare_maps("series", series_forward(a, cap), ctx.forward()).passed);
    CHECK(compare_maps("mobius", mobius_inverse(a, cap), ctx.inverse()).passed);
    const TabulatedMap id = TabulatedMap::identity(ctx.coalgebra());
    CHECK(compare_maps("left", compose(ctx.inverse(), ctx.forward()), id).passed);
    CHECK(compare_maps("right", compose(ctx.forward(), ctx.inverse()), id).passed);
    for (const Monomial& m : ctx.coalgebra().monomials()) {
      CHECK(SymmetricCoalgebra::linear_part(ctx.forward().at(m)) == tau(a, m));
    }
  }
}

TEST_CASE("conjugation") {
  std::mt19937 rng(37);
  const Algebra e = e2();
  const CumulantContext ctx(e, 4);
  const TabulatedMap id = TabulatedMap::identity(ctx.coalgebra());
  CHECK(compare_maps("push id", conjugate(id, ctx, Direction::kPush), id).passed);
  CHECK(compare_maps("pull id", conjugate(id, ctx, Direction::kPull), id).passed);
  const TabulatedMap g = extend_coalgebra_map(random_family(e.space(), e.space(), 0, 3, rng), 4);
  CHECK(compare_maps("round trip", conjugate(conjugate(g, ctx, Direction::kPush), ctx, Direction::kPull), g).passed);
}

TEST_CASE("pull intertwines tau, push in general does not") {
  const Algebra p = p8();
  const Algebra point = io::parse_algebra(load("point.json"));
  const LinearMap f = io::parse_linear_map(load("p8_bernoulli.json"), p.space(), point.space());
  const CumulantContext src(p, 4), tgt(point, 4);
  const TabulatedMap big_f = extend_coalgebra_map(TaylorFamily::from_linear_map(f), 4);
  CHECK(check_intertwines_tau(conjugate(big_f, src, tgt, Direction::kPull), src, tgt, f).passed);
  CHECK_FALSE(check_intertwines_tau(conjugate(big_f, src, tgt, Direction::kPush), src, tgt, f).passed);
}

TEST_CASE("homomorphism defects match the closed forms") {
  std::mt19937 rng(41);
  const ClosedForm g2 = ClosedForm::parse(kG2), g3 = ClosedForm::parse(kG3);
  const Algebra p = p8(), e = e2();
  const Algebra point = io::parse_algebra(load("point.json"));

  struct Case {
    Algebra source, target;
    LinearMap f;
  };
  std::vector<Case> cases{
      {p, point, io::parse_linear_map(load("p8_bernoulli.json"), p.space(), point.space())},
      {p, p, random_linear_map(p.space(), p.space(), 0, rng)},
      {e, e, io::parse_linear_map(load("e2_automorphism.json"), e.space(), e.space())},
      {e, e, random_linear_map(e.space(), e.space(), 0, rng)},
  };
  for (int k = 0; k < 3; ++k) {
    const Algebra r = random_algebra(rng);
    cases.push_back({r, r, random_linear_map(r.space(), r.space(), 0, rng)});
  }
  for (const auto& c : cases) {
    const CumulantContext src(c.source, 3), tgt(c.target, 3);
    CHECK(homomorphism_defect(c.f, src, tgt, 1) == TaylorFamily::from_linear_map(c.f).arities[1]);
    CHECK(compare_closed_form(g2, homomorphism_defect(c.f, src, tgt, 2), c.source, c.target, c.f, 3).agrees());
    CHECK(compare_closed_form(g3, homomorphism_defect(c.f, src, tgt, 3), c.source, c.target, c.f, 3).agrees());
  }
}

TEST_CASE("derivation defects match the closed forms and a brute-force conjugation") {
  std::mt19937 rng(43);
  const ClosedForm h2 = ClosedForm::parse(kH2), h3 = ClosedForm::parse(kH3);
  std::vector<Algebra> algebras{p8(), e2()};
  for (int k = 0; k < 4; ++k) algebras.push_back(random_algebra(rng));
  for (const Algebra& a : algebras) {
    const CumulantContext ctx(a, 3);
    for (int degree : {-1, 0, 1}) {
      const LinearMap d = random_linear_map(a.space(), a.space(), degree, rng);
      const TaylorTable t2 = derivation_defect(d, ctx, 2);
      const TaylorTable t3 = derivation_defect(d, ctx, 3);
      CHECK(compare_closed_form(h2, t2, a, a, d, 3).agrees());
      CHECK(compare_closed_form(h3, t3, a, a, d, 3).agrees());

      const TabulatedMap big_d = extend_coderivation(TaylorFamily::from_linear_map(d), 3);
      const TabulatedMap inverse = mobius_inverse(a, 3);
      const TabulatedMap forward = series_forward(a, 3);
      TaylorTable brute;
      for (const Monomial& m : ctx.coalgebra().monomials(3)) {
        const Vector v = SymmetricCoalgebra::linear_part(inverse.apply(big_d.apply(forward.at(m))));
        if (!v.is_zero()) brute[m] = v;
      }
      CHECK(brute == t3);
    }
  }
}

TEST_CASE("quoted third derivation coefficient is flagged") {
  // the letter x appears twice in one term of the quoted line
  CHECK_THROWS_AS(ClosedForm::parse("f(xyz)-f(xy)z+xyf(z)-f(yz)x+yxf(x)-f(zx)y+zxf(y)"), SchemaError);
  const Algebra p = p8();
  const CumulantContext ctx(p, 3);
  const LinearMap d = io::parse_linear_map(load("p8_derivation.json"), p.space(), p.space());
  std::mt19937 rng(47);
  const LinearMap generic = random_linear_map(p.space(), p.space(), 0, rng);
  const ClosedForm patched = ClosedForm::parse("f(xyz)-f(xy)z+xyf(z)-f(yz)x+yzf(x)-f(zx)y+zxf(y)");
  CHECK(compare_closed_form(patched, derivation_defect(generic, ctx, 3), p, p, generic, 3).agrees());
  CHECK(compare_closed_form(patched, derivation_defect(d, ctx, 3), p, p, d, 3).agrees());
}

TEST_CASE("vanishing criteria and perturbations") {
  const Algebra p = p8(), e = e2();
  const int cap = 5;
  const CumulantContext pc(p, cap), ec(e, 4);

  SUBCASE("algebra homomorphisms") {
    std::map<int, Vector> columns;
    for (int k = 1; k <= 8; ++k) columns[k - 1] = Scalar(1 << k) * basis_vector(k - 1);
    const LinearMap scale = LinearMap::build(p.space(), p.space(), 0, columns);
    CHECK(vanishes_above_arity_one(homomorphism_defects(scale, pc, pc)));
    const LinearMap autom = io::parse_linear_map(load("e2_automorphism.json"), e.space(), e.space());
    CHECK(vanishes_above_arity_one(homomorphism_defects(autom, ec, ec)));

    columns[0] = Scalar(3) * basis_vector(0);
    const LinearMap perturbed = LinearMap::build(p.space(), p.space(), 0, columns);
    CHECK_FALSE(homomorphism_defect(perturbed, pc, pc, 2).empty());
  }
  SUBCASE("derivations") {
    const LinearMap d = io::parse_linear_map(load("p8_derivation.json"), p.space(), p.space());
    CHECK(vanishes_above_arity_one(derivation_defects(d, pc)));
    std::map<int, Vector> columns = d.columns();
    columns[0] = Scalar(2) * basis_vector(1);
    const LinearMap perturbed = LinearMap::build(p.space(), p.space(), 0, columns);
    CHECK_FALSE(derivation_defect(perturbed, pc, 2).empty());

    // every degree-1 map of E2 is a derivation since g kills everything
    const LinearMap odd = LinearMap::build(e.space(), e.space(), 1, {{0, basis_vector(2)}});
    CHECK(vanishes_above_arity_one(derivation_defects(odd, ec)));
    const LinearMap lower = LinearMap::build(e.space(), e.space(), -1, {{2, basis_vector(0)}});
    CHECK_FALSE(derivation_defect(lower, ec, 2).empty());
  }
}

TEST_CASE("conjugation preserves brackets and square-zero coderivations") {
  std::mt19937 rng(53);
  for (const Algebra& a : test_algebras(rng, 4)) {
    const int cap = cap_for(a);
    const CumulantContext ctx(a, cap);
    const TabulatedMap d1 = extend_coderivation(random_family(a.space(), a.space(), 1, 2, rng), cap);
    const TabulatedMap d2 = extend_coderivation(random_family(a.space(), a.space(), -1, 2, rng), cap);
    for (Direction dir : {Direction::kPush, Direction::kPull}) {
      const TabulatedMap lhs = bracket(conjugate(d1, ctx, dir), conjugate(d2, ctx, dir));
      CHECK(compare_maps("bracket", lhs, conjugate(bracket(d1, d2), ctx, dir)).passed);
      CHECK(check_coderivation(conjugate(d1, ctx, dir)).passed);
    }
  }

  // a square-zero differential of E2: d(g) = a
  const Algebra e = e2();
  const CumulantContext ctx(e, 5);
  const LinearMap d = LinearMap::build(e.space(), e.space(), -1, {{2, basis_vector(0)}});
  const TabulatedMap big_d = extend_coderivation(TaylorFamily::from_linear_map(d), 5);
  const TabulatedMap zero = TabulatedMap::zero(e.space(), e.space(), -2, 5);
  CHECK(compare_maps("D²", compose(big_d, big_d), zero).passed);
  const TabulatedMap pushed = conjugate(big_d, ctx, Direction::kPush);
  CHECK(compare_maps("push²", compose(pushed, pushed), zero).passed);
}

TEST_CASE("chain maps give dg coalgebra maps") {
  SUBCASE("K2 with i∘I") {
    const RetractData r = k2_retract();
    const CumulantContext ctx(r.algebra, 5);
    const LinearMap f = compose(r.inclusion, r.projection);
    const TabulatedMap hat_f = conjugate(extend_coalgebra_map(TaylorFamily::from_linear_map(f), 5), ctx,
                                         Direction::kPull);
    const TabulatedMap d = conjugate(extend_coderivation(TaylorFamily::from_linear_map(r.differential), 5), ctx,
                                     Direction::kPull);
    CHECK(check_comorphism(hat_f).passed);
    CHECK(compare_maps("dg", compose(hat_f, d), compose(d, hat_f)).passed);
    CHECK_FALSE(vanishes_above_arity_one(taylor_family(hat_f)));
  }
  SUBCASE("E2 with a unipotent chain map") {
    const Algebra e = e2();
    const CumulantContext ctx(e, 5);
    const LinearMap d = LinearMap::build(e.space(), e.space(), -1, {{2, basis_vector(0)}});
    const LinearMap f =
        LinearMap::build(e.space(), e.space(), 0, {{0, basis_vector(0)}, {1, vec({{0, 1}, {1, 1}})}, {2, basis_vector(2)}});
    REQUIRE(first_difference(compose(f, d), compose(d, f)) == std::nullopt);
    const TabulatedMap hat_f = conjugate(extend_coalgebra_map(TaylorFamily::from_linear_map(f), 5), ctx,
                                         Direction::kPull);
    const TabulatedMap dt = conjugate(extend_coderivation(TaylorFamily::from_linear_map(d), 5), ctx,
                                      Direction::kPull);
    CHECK(compare_maps("dg", compose(hat_f, dt), compose(dt, hat_f)).passed);
  }
}
