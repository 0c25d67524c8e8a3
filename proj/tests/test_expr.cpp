// Graded expression layer: products, signs, partial derivatives,
// parity bookkeeping and substitution.
#include "doctest.h"
#include "hamop/errors.hpp"
#include "hamop/expr.hpp"
#include "testutil.hpp"

using namespace hamop;
using testutil::Rng;

namespace {

struct Fix {
  SpaceP sp = testutil::scalar_space();
  MultiIndex z{0}, one{1}, two{2};
  Expr u = Expr::atom(sp, Atom::even_jet(0, z));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, one));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, z));
  Expr px = Expr::atom(sp, Atom::odd_jet(0, one));
  Expr pxx = Expr::atom(sp, Atom::odd_jet(0, two));
  Expr x = Expr::atom(sp, Atom::indep(0));
  Expr c1 = Expr::constant(sp, 1);
};

}  // namespace

TEST_CASE("odd factors square to zero and anticommute") {
  Fix f;
  CHECK((f.p * f.p).is_zero());
  CHECK(f.p * f.px == -(f.px * f.p));
  CHECK(f.p * f.px * f.pxx == f.pxx * f.p * f.px);  // cyclic, even moves
  // Even expressions commute with everything.
  CHECK(f.u * f.p == f.p * f.u);
}

TEST_CASE("graded product is associative and distributive") {
  Rng rng(201);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 200; ++it) {
    Expr a = testutil::random_expr(rng, sp, 3, 2, true);
    Expr b = testutil::random_expr(rng, sp, 3, 2, true);
    Expr c = testutil::random_expr(rng, sp, 3, 2, true);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("parity classification") {
  Fix f;
  CHECK(f.u.parity() == Parity::Even);
  CHECK(f.p.parity() == Parity::Odd);
  CHECK((f.u + f.p).parity() == Parity::Mixed);
  CHECK((f.p * f.px).parity() == Parity::Even);
  CHECK(f.u.is_even_function());
  CHECK_FALSE((f.p * f.px).is_even_function());  // even parity, odd factors
  CHECK((f.u * f.p).odd_degree_is(1));
  CHECK(Expr::zero(f.sp).odd_degree_is(3));
  CHECK_FALSE((f.u + f.p).odd_degree_is(1));
}

TEST_CASE("partial derivative on even coordinates") {
  Fix f;
  CHECK((f.u * f.u).partial(Atom::even_jet(0, f.z)) == f.u + f.u);
  CHECK(f.ux.partial(Atom::even_jet(0, f.z)).is_zero());
  CHECK((f.x * f.u).partial(Atom::indep(0)) == f.u);
  // Quotient rule through the rational layer.
  Expr q = f.c1 / f.u;
  CHECK(q.partial(Atom::even_jet(0, f.z)) == -(f.c1 / (f.u * f.u)));
}

TEST_CASE("left partial derivative on odd coordinates carries (-1)^k") {
  Fix f;
  Expr m = f.p * f.px;  // factor order: p, p_x
  CHECK(m.partial(Atom::odd_jet(0, f.z)) == f.px);
  // p_x sits in position 1 (zero-based), so the sign is -1.
  CHECK(m.partial(Atom::odd_jet(0, f.one)) == -f.p);
  // Derivative by an absent odd coordinate kills the term.
  CHECK(m.partial(Atom::odd_jet(0, f.two)).is_zero());
  // Degree-3 monomial: position 2 gives +.
  Expr m3 = f.p * f.px * f.pxx;
  CHECK(m3.partial(Atom::odd_jet(0, f.two)) == f.p * f.px);
}

TEST_CASE("odd partial is an odd derivation (graded Leibniz)") {
  Rng rng(202);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 200; ++it) {
    // Homogeneous factors so the graded sign is well defined.
    unsigned da = (unsigned)rng.below(3);
    Expr a = testutil::random_homogeneous(rng, sp, 2, 2, da);
    Expr b = testutil::random_homogeneous(rng, sp, 2, 2,
                                          (unsigned)rng.below(3));
    Atom w = testutil::random_odd(rng, *sp, 2);
    Expr lhs = (a * b).partial(w);
    Expr rhs = a.partial(w) * b +
               (da % 2 ? -(a * b.partial(w)) : a * b.partial(w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pow") {
  Fix f;
  CHECK(f.u.pow(0) == f.c1);
  CHECK(f.u.pow(3) == f.u * f.u * f.u);
  CHECK(f.u.pow(-1) == f.c1 / f.u);
  CHECK((f.u * f.p).pow(2).is_zero());
  CHECK_THROWS_AS(f.p.pow(-1), ParityViolation);
  CHECK_THROWS_AS(Expr::zero(f.sp).pow(-2), DivisionByZero);
}

TEST_CASE("division") {
  Fix f;
  CHECK((f.u * f.p) / f.u == f.p);
  CHECK_THROWS_AS(f.u / f.p, ParityViolation);
  CHECK_THROWS_AS(f.u / Expr::zero(f.sp), DivisionByZero);
}

TEST_CASE("ratfun extraction") {
  Fix f;
  CHECK(f.u.ratfun() == RatFun::variable(f.sp->even_id(
                            Atom::even_jet(0, f.z))));
  CHECK((f.u + f.p).even_coefficient() ==
        RatFun::variable(f.sp->even_id(Atom::even_jet(0, f.z))));
  CHECK_THROWS_AS(f.p.ratfun(), ParityViolation);
}

TEST_CASE("substitution on even coordinates") {
  Fix f;
  Expr e = f.u * f.u + f.ux;
  std::map<Atom, Expr> b{{Atom::even_jet(0, f.z), f.x + f.c1}};
  CHECK(e.substitute(b) == (f.x + f.c1) * (f.x + f.c1) + f.ux);
  // Bindings do not cascade: u -> u_x leaves the existing u_x alone.
  std::map<Atom, Expr> b2{{Atom::even_jet(0, f.z), f.ux}};
  CHECK((f.u + f.ux).substitute(b2) == f.ux + f.ux);
}

TEST_CASE("substitution on odd coordinates tracks signs") {
  Fix f;
  std::map<Atom, Expr> b{{Atom::odd_jet(0, f.z), f.px},
                         {Atom::odd_jet(0, f.one), f.p}};
  // Swapping the two factors through substitution flips the product.
  CHECK((f.p * f.px).substitute(b) == f.px * f.p);
  CHECK((f.p * f.px).substitute(b) == -(f.p * f.px));
}

TEST_CASE("substitution parity and denominator errors") {
  Fix f;
  std::map<Atom, Expr> bad1{{Atom::even_jet(0, f.z), f.p}};
  CHECK_THROWS_AS(f.u.substitute(bad1), ParityViolation);
  std::map<Atom, Expr> bad2{{Atom::odd_jet(0, f.z), f.u}};
  CHECK_THROWS_AS(f.p.substitute(bad2), ParityViolation);
  Expr e = f.c1 / f.u;
  std::map<Atom, Expr> bad3{{Atom::even_jet(0, f.z), Expr::zero(f.sp)}};
  CHECK_THROWS_AS(e.substitute(bad3), DivisionByZero);
}

TEST_CASE("substitute is a ring map on random input") {
  Rng rng(203);
  SpaceP sp = testutil::wide_space();
  MultiIndex z{0, 0};
  for (int it = 0; it < 200; ++it) {
    Expr a = testutil::random_expr(rng, sp, 3, 1, true);
    Expr b = testutil::random_expr(rng, sp, 3, 1, true);
    std::map<Atom, Expr> bind{
        {Atom::even_jet(0, z), testutil::random_expr(rng, sp, 2, 1, false)},
        {Atom::odd_jet(0, z),
         testutil::random_homogeneous(rng, sp, 2, 1, 1)}};
    Expr lhs = (a * b).substitute(bind);
    Expr rhs = a.substitute(bind) * b.substitute(bind);
    CHECK(lhs == rhs);
    CHECK((a + b).substitute(bind) ==
          a.substitute(bind) + b.substitute(bind));
  }
}

TEST_CASE("space mismatch is rejected") {
  Fix f;
  SpaceP other = testutil::wide_space();
  CHECK_THROWS_AS(f.u + Expr::constant(other, 1), SpaceMismatch);
}
