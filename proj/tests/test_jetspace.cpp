// Jet-space bookkeeping: coordinate enumeration, multi-index ranking,
// total derivatives with the truncation guard, and prolongation.
#include "doctest.h"
#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "testutil.hpp"

using namespace hamop;
using testutil::Rng;

TEST_CASE("coordinate counts") {
  // Two independent variables and order 10 give C(12,2) = 66 ranks;
  // two even plus two odd variables then make 264 jet coordinates.
  SpaceP sp = Space::make({{"x", "t"}, {"u", "v"}, {"p", "q"}, {}, 10});
  CHECK(sp->n_ranks() == 66);
  CHECK(sp->enumerate_coords().size() == 264);

  SpaceP s1 = Space::make({{"x"}, {"u"}, {"p"}, {}, 5});
  CHECK(s1->n_ranks() == 6);
  CHECK(s1->enumerate_coords().size() == 12);
}

TEST_CASE("rank and mindex are inverse") {
  SpaceP sp = Space::make({{"x", "t"}, {"u"}, {"p"}, {}, 7});
  for (unsigned r = 0; r < sp->n_ranks(); ++r) {
    auto back = sp->rank(sp->mindex(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK_FALSE(sp->rank(MultiIndex{8, 0}).has_value());
}

TEST_CASE("shift_rank adds one derivative") {
  SpaceP sp = Space::make({{"x", "t"}, {"u"}, {"p"}, {}, 6});
  for (unsigned r = 0; r < sp->n_ranks(); ++r)
    for (unsigned lam = 0; lam < 2; ++lam) {
      MultiIndex want = sp->mindex(r);
      want[lam]++;
      auto s = sp->shift_rank(r, lam);
      if (mi_order(want) > sp->total_order()) {
        CHECK_FALSE(s.has_value());
      } else {
        REQUIRE(s.has_value());
        CHECK(sp->mindex(*s) == want);
      }
    }
}

TEST_CASE("total derivative basics") {
  SpaceP sp = testutil::wide_space();  // indep x,t
  MultiIndex z{0, 0}, dx{1, 0}, dt{0, 1};
  Expr x = Expr::atom(sp, Atom::indep(0));
  Expr t = Expr::atom(sp, Atom::indep(1));
  Expr u = Expr::atom(sp, Atom::even_jet(0, z));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, dx));
  Expr ut = Expr::atom(sp, Atom::even_jet(0, dt));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, z));
  Expr px = Expr::atom(sp, Atom::odd_jet(0, dx));

  CHECK(total_derivative(x, 0u) == Expr::constant(sp, 1));
  CHECK(total_derivative(x, 1u).is_zero());
  CHECK(total_derivative(u, 0u) == ux);
  CHECK(total_derivative(u, "t") == ut);
  CHECK(total_derivative(p, 0u) == px);
  CHECK(total_derivative(x * u, 0u) == u + x * ux);
  // Parameters are constants.
  Expr c = Expr::atom(sp, Atom::param(0));
  CHECK(total_derivative(c, 0u).is_zero());
  CHECK(total_derivative(c * u, 0u) == c * ux);
}

TEST_CASE("iterated and composite total derivatives") {
  SpaceP sp = testutil::wide_space();
  MultiIndex z{0, 0};
  Expr u = Expr::atom(sp, Atom::even_jet(0, z));
  CHECK(total_derivative(u, 0u, 3) ==
        Expr::atom(sp, Atom::even_jet(0, {3, 0})));
  CHECK(total_derivative(u, MultiIndex{2, 1}) ==
        Expr::atom(sp, Atom::even_jet(0, {2, 1})));
  CHECK(total_derivative(u, MultiIndex{0, 0}) == u);
}

TEST_CASE("truncation guard raises with the offending variable") {
  SpaceP sp = Space::make({{"x"}, {"u"}, {"p"}, {}, 3});
  Expr top = Expr::atom(sp, Atom::even_jet(0, {3}));
  CHECK_THROWS_AS(total_derivative(top, 0u), OrderExceeded);
  try {
    total_derivative(top, 0u);
  } catch (const OrderExceeded& e) {
    CHECK(e.variable == "u");
    CHECK(e.required_order == 4);
  }
  // An odd jet at the boundary raises too.
  Expr ptop = Expr::atom(sp, Atom::odd_jet(0, {3}));
  CHECK_THROWS_AS(total_derivative(ptop, 0u), OrderExceeded);
  // One step below the boundary is fine.
  CHECK(total_derivative(Expr::atom(sp, Atom::even_jet(0, {2})), 0u) == top);
}

TEST_CASE("total derivatives commute (property)") {
  Rng rng(301);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 200; ++it) {
    Expr a = testutil::random_expr(rng, sp, 4, 2, true);
    Expr dxdt = total_derivative(total_derivative(a, 0u), 1u);
    Expr dtdx = total_derivative(total_derivative(a, 1u), 0u);
    CHECK(dxdt == dtdx);
  }
}

TEST_CASE("total derivative is an even derivation (property)") {
  Rng rng(302);
  SpaceP sp = testutil::wide_space();
  for (int it = 0; it < 200; ++it) {
    Expr a = testutil::random_expr(rng, sp, 3, 2, true);
    Expr b = testutil::random_expr(rng, sp, 3, 2, true);
    unsigned lam = (unsigned)rng.below(2);
    CHECK(total_derivative(a * b, lam) ==
          total_derivative(a, lam) * b + a * total_derivative(b, lam));
    CHECK(total_derivative(a + b, lam) ==
          total_derivative(a, lam) + total_derivative(b, lam));
  }
}

TEST_CASE("total derivative handles quotients") {
  SpaceP sp = testutil::scalar_space();
  Expr u = Expr::atom(sp, Atom::even_jet(0, {0}));
  Expr ux = Expr::atom(sp, Atom::even_jet(0, {1}));
  Expr q = Expr::constant(sp, 1) / u;
  CHECK(total_derivative(q, 0u) == -(ux / (u * u)));
}

TEST_CASE("prolong extends bindings to derivative coordinates") {
  SpaceP sp = testutil::scalar_space();
  Expr x = Expr::atom(sp, Atom::indep(0));
  auto table = prolong({{"u", x * x}}, 3);
  CHECK(table.at(Atom::even_jet(0, {0})) == x * x);
  CHECK(table.at(Atom::even_jet(0, {1})) == x + x);
  CHECK(table.at(Atom::even_jet(0, {2})) == Expr::constant(sp, 2));
  CHECK(table.at(Atom::even_jet(0, {3})).is_zero());
  CHECK(table.size() == 4);
}

TEST_CASE("prolong then substitute commutes with total derivative") {
  // Chain rule check: D_x(f)[u -> g] == D_x(f[u -> g]) when u is bound
  // to a function of x alone.
  Rng rng(303);
  SpaceP sp = testutil::scalar_space();
  Expr x = Expr::atom(sp, Atom::indep(0));
  for (int it = 0; it < 100; ++it) {
    Expr g = Expr::constant(sp, rng.range(-3, 3));
    for (int d = 0; d < 3; ++d)
      g = g * x + Expr::constant(sp, rng.range(-3, 3));
    auto table = prolong({{"u", g}}, sp->total_order());
    std::map<Atom, Expr> bind(table.begin(), table.end());
    Expr f = testutil::random_expr(rng, sp, 3, 2, false);
    CHECK(total_derivative(f, 0u).substitute(bind) ==
          total_derivative(f.substitute(bind), 0u));
  }
}
