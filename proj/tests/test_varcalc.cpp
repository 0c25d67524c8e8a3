// Variational calculus: Euler operators, linearization, adjoints and
// the decomposition helpers.
#include "doctest.h"
#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "hamop/varcalc.hpp"
#include "testutil.hpp"

using namespace hamop;
using testutil::Rng;

TEST_CASE("variational derivative of classic densities") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, {1}));
  Expr uxx = Expr::atom(sp, Atom::even_jet(0, {2}));
  Rat half(1, 2);

  // delta/du of u^2/2 is u.
  CHECK(variational_derivative((u * u).mul_scalar(half), "u") == u);
  // delta/du of u_x^2/2 is -u_xx.
  CHECK(variational_derivative((ux * ux).mul_scalar(half), "u") == -uxx);
  // KdV density u^3/3 + u*u_xx gives u^2 + 2 u_xx... compute both ways.
  Expr dens = (u * u * u) / Expr::constant(sp, 3) + u * uxx;
  CHECK(variational_derivative(dens, "u") == u * u + uxx + uxx);
}

TEST_CASE("variational derivative by an odd variable") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, {0}));
  Expr px = Expr::atom(sp, Atom::odd_jet(0, {1}));
  // delta/dp of u * p_x: partial is in position 0 of the monomial, then
  // one minus sign from the total derivative ladder: -(u_x).
  Expr ux = Expr::atom(sp, Atom::even_jet(0, {1}));
  CHECK(variational_derivative(u * px, "p") == -ux);
  CHECK(variational_derivative(u * p, "p") == u);
}

TEST_CASE("euler_df groups components in declaration order") {
  SpaceP sp = testutil::wide_space();
  MultiIndex z{0, 0};
  Expr u = Expr::atom(sp, Atom::even_jet(0, z));
  Expr v = Expr::atom(sp, Atom::even_jet(1, z));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, z));
  EulerResult r = euler_df(u * v + p * v);
  REQUIRE(r.even.size() == 2);
  REQUIRE(r.odd.size() == 2);
  CHECK(r.even[0] == v);
  CHECK(r.even[1] == u + p);
  CHECK(r.odd[0] == v);
  CHECK(r.odd[1].is_zero());
  CHECK_FALSE(r.all_zero());
  CHECK(euler_df(Expr::zero(sp)).all_zero());
}

TEST_CASE("euler annihilates total derivatives (property)") {
  Rng rng(401);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 200; ++it) {
    Expr a = testutil::random_expr(rng, sp, 4, 2, true);
    unsigned lam = (unsigned)rng.below(2);
    CHECK(euler_df(total_derivative(a, lam)).all_zero());
    CHECK(is_total_divergence(total_derivative(a, lam)));
  }
}

TEST_CASE("euler parallel matches the serial reference (property)") {
  Rng rng(402);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 50; ++it) {
    Expr a = testutil::random_expr(rng, sp, 4, 2, true);
    EulerResult par = euler_df(a);
    EulerResult ser = euler_df_serial(a);
    REQUIRE(par.even.size() == ser.even.size());
    REQUIRE(par.odd.size() == ser.odd.size());
    for (std::size_t i = 0; i < par.even.size(); ++i)
      CHECK(par.even[i] == ser.even[i]);
    for (std::size_t i = 0; i < par.odd.size(); ++i)
      CHECK(par.odd[i] == ser.odd[i]);
  }
}

TEST_CASE("nonzero euler residual survives adding a divergence") {
  Rng rng(403);
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr half_u2 = (u * u).mul_scalar(Rat(1, 2));
  for (int it = 0; it < 50; ++it) {
    Expr noise = total_derivative(
        testutil::random_expr(rng, sp, 3, 2, false), 0u);
    EulerResult r = euler_df(half_u2 + noise);
    CHECK(r.even[0] == u);
  }
}

TEST_CASE("linearize produces the Frechet derivative") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, {1}));
  Expr uxxx = Expr::atom(sp, Atom::even_jet(0, {3}));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, {0}));
  Expr px = Expr::atom(sp, Atom::odd_jet(0, {1}));
  Expr pxxx = Expr::atom(sp, Atom::odd_jet(0, {3}));
  // KdV flow u_xxx + 6 u u_x.
  Superfun l = linearize({uxxx + (u * ux).mul_scalar(6)});
  REQUIRE(l.degree == 1);
  REQUIRE(l.size() == 1);
  CHECK(l.comps[0] == pxxx + (u * px).mul_scalar(6) + (ux * p).mul_scalar(6));
}

TEST_CASE("adjoint of derivative flips sign, adjoint of mult keeps it") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, {1}));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, {0}));
  Expr px = Expr::atom(sp, Atom::odd_jet(0, {1}));
  CHECK(adjoint(Superfun(1, {px})) == Superfun(1, {-px}));
  CHECK(adjoint(Superfun(1, {u * p})) == Superfun(1, {u * p}));
  // (u d_x)^* = -d_x u = -u d_x - u_x.
  CHECK(adjoint(Superfun(1, {u * px})) == Superfun(1, {-(u * px) - ux * p}));
}

TEST_CASE("adjoint is an involution (property)") {
  Rng rng(404);
  SpaceP sp = testutil::wide_space();
  MultiIndex z{0, 0};
  for (int it = 0; it < 200; ++it) {
    std::vector<Expr> comps;
    for (int i = 0; i < 2; ++i) {
      Expr c = Expr::zero(sp);
      int nt = rng.range(1, 3);
      for (int t = 0; t < nt; ++t)
        c = c + testutil::random_expr(rng, sp, 1, 2, false) *
                    Expr::atom(sp, testutil::random_odd(rng, *sp, 2));
      comps.push_back(c);
    }
    Superfun l(1, comps);
    CHECK(adjoint(adjoint(l)) == l);
  }
}

TEST_CASE("splitext lists odd monomials with the even part first") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, {0}));
  Expr px = Expr::atom(sp, Atom::odd_jet(0, {1}));
  Expr f = u + u * p + (u * u) * (p * px);
  auto blocks = splitext(f);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].factors.empty());
  CHECK(blocks[0].coeff == u);
  REQUIRE(blocks[1].factors.size() == 1);
  CHECK(blocks[1].factors[0] == Atom::odd_jet(0, MultiIndex{0}));
  CHECK(blocks[1].coeff == u);
  REQUIRE(blocks[2].factors.size() == 2);
  CHECK(blocks[2].coeff == u * u);
}

TEST_CASE("splitext reconstructs the input (property)") {
  Rng rng(405);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 200; ++it) {
    Expr f = testutil::random_expr(rng, sp, 4, 2, true);
    Expr back = Expr::zero(sp);
    for (const auto& b : splitext(f)) {
      Expr mon = Expr::constant(sp, 1);
      for (const Atom& a : b.factors) mon = mon * Expr::atom(sp, a);
      back = back + mon * b.coeff;
    }
    CHECK(back == f);
  }
}

TEST_CASE("splitvars groups by monomials in chosen coordinates") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, {1}));
  Expr x = Expr::atom(sp, Atom::indep(0));
  Atom uat = Atom::even_jet(0, {0});

  Expr f = u * u * x + u * ux + ux;
  SplitVars sv = splitvars(f, {uat});
  CHECK(sv.denominator == Expr::constant(sp, 1));
  REQUIRE(sv.parts.size() == 3);
  // Highest power of u first.
  CHECK(sv.parts[0].first == u * u);
  CHECK(sv.parts[0].second == x);
  CHECK(sv.parts[1].first == u);
  CHECK(sv.parts[1].second == ux);
  CHECK(sv.parts[2].first == Expr::constant(sp, 1));
  CHECK(sv.parts[2].second == ux);

  // Coordinates in the denominator are rejected.
  CHECK_THROWS_AS(splitvars(x / u, {uat}), NotPolynomial);
}

TEST_CASE("splitvars reconstructs the input (property)") {
  Rng rng(406);
  SpaceP sp = testutil::wide_space();
  MultiIndex z{0, 0};
  std::vector<Atom> coords{Atom::even_jet(0, z), Atom::even_jet(1, z)};
  for (int it = 0; it < 200; ++it) {
    Expr f = testutil::random_expr(rng, sp, 4, 2, false);
    SplitVars sv = splitvars(f, coords);
    Expr back = Expr::zero(sp);
    for (const auto& [mon, coeff] : sv.parts) back = back + mon * coeff;
    CHECK(back == f * sv.denominator);
  }
}
