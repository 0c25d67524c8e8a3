#include "hamop/examples.hpp"

#include <chrono>
#include <cstdio>

#include "hamop/dn.hpp"
#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "hamop/schouten.hpp"
#include "hamop/serialize.hpp"
#include "json.hpp"

namespace hamop {

namespace {

using nlohmann::json;

std::string clip(std::string s, std::size_t n = 300) {
  if (s.size() > n) {
    s.resize(n);
    s += "...";
  }
  return s;
}

struct Collector {
  std::vector<ExampleCheck>& out;
  void check(const std::string& name, bool pass, std::string detail = {}) {
    out.push_back({name, pass, pass ? std::string() : clip(std::move(detail))});
  }
};

// ---------------------------------------------------------------------------
// KdV: the pair d_x and d_x^3 + 2u d_x + u_x, and the vector field whose
// Lie derivative maps the first operator to the second.
void kdv_lieder(Collector& c) {
  SpaceP sp = Space::make({{"x"}, {"u"}, {"p"}, {}, 13});
  MultiIndex z(1, 0), one(1, 1), three(1, 3);
  CDiffOp a1(sp, 1, 1);
  a1.add(0, 0, one, Expr::constant(sp, 1));
  CDiffOp a2(sp, 1, 1);
  a2.add(0, 0, three, Expr::constant(sp, 1));
  a2.add(0, 0, one, Expr::atom(sp, Atom::even_jet(0, z)).mul_scalar(2));
  a2.add(0, 0, z, Expr::atom(sp, Atom::even_jet(0, one)));

  c.check("A1 is skew-adjoint", is_skew_adjoint(a1));
  c.check("A2 is skew-adjoint", is_skew_adjoint(a2));

  Expr biv1 = operator_bivector(a1);
  Expr biv2 = operator_bivector(a2);
  for (auto [f, h, name] :
       {std::tuple<const Expr*, const Expr*, const char*>{&biv1, &biv1,
                                                          "[A1,A1] = 0"},
        {&biv1, &biv2, "[A1,A2] = 0"},
        {&biv2, &biv2, "[A2,A2] = 0"}}) {
    BracketZero r = iszero_schouten_bracket(*f, *h);
    c.check(name, r.zero, "euler residual " + to_text(r.euler));
  }

  Expr u = Expr::atom(sp, Atom::even_jet(0, z));
  Expr u2x = Expr::atom(sp, Atom::even_jet(0, MultiIndex{2}));
  Expr p = Expr::atom(sp, Atom::odd_jet(0, z));
  Expr tau = (u * u + u2x).mul_scalar(Rat(-1, 2)) * p;
  EulerResult er = euler_df(lie_derivative(tau, biv1) - biv2);
  c.check("euler(lie(tau, A1) - A2) = {{0},{0}}",
          er.even.size() == 1 && er.odd.size() == 1 && er.all_zero(),
          to_text(er));
}

// ---------------------------------------------------------------------------
// WDVV, four-component form: first-order operator given by its explicit
// matrix data, third-order operator from the lower metric; the pair is
// bi-Hamiltonian.
void wdvv4_biham(Collector& c) {
  SpaceP sp = Space::make({{"x"},
                           {"a", "b", "c", "d", "ee", "f"},
                           {"p", "q", "r", "s", "tt", "u"},
                           {},
                           13});
  MultiIndex z(1, 0), one(1, 1);
  auto A = [&](unsigned k) { return Expr::atom(sp, Atom::even_jet(k, z)); };
  auto C = [&](long v) { return Expr::constant(sp, v); };
  Expr a1 = A(0), a2 = A(1), a3 = A(2), a4 = A(3), a5 = A(4), a6 = A(5);

  Expr P = (a3 * a4 + a6) / a1;
  Expr R = (a2 * a4 + a5.mul_scalar(2)) / a1;
  Expr S = (a3 * a5.mul_scalar(2) - a2 * a6) / a1;
  Expr Q = a5 * a5 - a4 * a6 +
           (a3 * a3 * a4 + a3 * a6 - a2 * a3 * a5.mul_scalar(2) +
            a2 * a2 * a6) /
               a1;

  std::vector<std::vector<Expr>> m1{
      {C(0), C(0), C(0), C(-1), C(0), C(0)},
      {C(0), C(-1), C(0), C(0), C(0), C(0)},
      {a1, a2, a3, a4, a5, a6},
      {C(-1), C(0), C(0), C(0), C(0), C(0)},
      {a2, a4, a5, R, P, S},
      {a3.mul_scalar(2), a5.mul_scalar(2), a6.mul_scalar(2), P.mul_scalar(2),
       S.mul_scalar(2), Q.mul_scalar(2)}};
  std::vector<std::vector<Expr>> m2{
      {C(0), C(0), a1, C(-1), a2, a3.mul_scalar(2)},
      {C(0), C(-1), a2, C(0), a4, a5.mul_scalar(2)},
      {C(0), C(0), a3, C(0), a5, a6.mul_scalar(2)},
      {C(-1), C(0), a4, C(0), R, P.mul_scalar(2)},
      {C(0), C(0), a5, C(0), P, S.mul_scalar(2)},
      {C(0), C(0), a6, C(0), S, Q.mul_scalar(2)}};

  // A1 = M1 d_x + d_x o M2, entered once directly and once through the
  // geometric first-order constructor.
  CDiffOp aa1(sp, 6, 6);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      aa1.add(i, j, one, m1[i][j] + m2[i][j]);
      aa1.add(i, j, z, total_derivative(m2[i][j], 0u));
    }
  ExprMatrix hu(sp, 6, 6);
  Tensor3 gam(sp, 6);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      hu.at(i, j) = m1[i][j] + m2[i][j];
      for (unsigned k = 0; k < 6; ++k)
        gam.at(i, j, k) = m2[i][j].partial(Atom::even_jet(k, z));
    }
  CDiffOp aa1b = dn1_operator(MetricField::hydrodynamic(hu),
                              ConnectionField{gam, ConnForm::Upper});
  c.check("matrix data matches the first-order constructor", aa1 == aa1b);

  Expr c0 = C(0), c1 = C(1);
  std::vector<std::vector<Expr>> gl{
      {a4 * a4, a5.mul_scalar(-2), a4.mul_scalar(2), -(a1 * a4 + a3), a2, c1},
      {a5.mul_scalar(-2), a3.mul_scalar(-2), a2, c0, a1, c0},
      {a4.mul_scalar(2), a2, C(2), -a1, c0, c0},
      {-(a1 * a4 + a3), c0, -a1, a1 * a1, c0, c0},
      {a2, a1, c0, c0, c0, c0},
      {c1, c0, c0, c0, c0, c0}};
  MetricField g3rd = MetricField::hydrodynamic(ExprMatrix(sp, gl));
  CDiffOp aa2 = dn3_operator(g3rd, DnCoords::Hydrodynamic);

  c.check("A1 is skew-adjoint", is_skew_adjoint(aa1));
  c.check("A2 is skew-adjoint", is_skew_adjoint(aa2));

  Dn3Report rep = check_dn3_conditions(g3rd);
  c.check("third-order metric satisfies both Hamiltonian identities",
          rep.all_ok());

  Expr biv1 = operator_bivector(aa1);
  Expr biv2 = operator_bivector(aa2);
  for (auto [f, h, name] :
       {std::tuple<const Expr*, const Expr*, const char*>{&biv1, &biv1,
                                                          "[A1,A1] = 0"},
        {&biv1, &biv2, "[A1,A2] = 0"},
        {&biv2, &biv2, "[A2,A2] = 0"}}) {
    BracketZero r = iszero_schouten_bracket(*f, *h);
    c.check(name, r.zero, "euler residual " + to_text(r.euler));
  }
}

// ---------------------------------------------------------------------------
// Darboux coordinates: the third-order operator in potential form is
// conjugated by the linearization of its Casimirs into the constant
// antidiagonal operator.
void darboux_g5(Collector& c) {
  SpaceP sp =
      Space::make({{"x"}, {"b1", "b2", "b3"}, {"p1", "p2", "p3"}, {}, 6});
  MultiIndex z(1, 0), one(1, 1);
  auto bx = [&](unsigned k) { return Expr::atom(sp, Atom::even_jet(k, one)); };
  auto b = [&](unsigned k) { return Expr::atom(sp, Atom::even_jet(k, z)); };
  Expr c0 = Expr::constant(sp, 0), c1 = Expr::constant(sp, 1);
  ExprMatrix g5(sp, {{bx(1).mul_scalar(-2), bx(0), c1},
                     {bx(0), c1, c0},
                     {c1, c0, c0}});
  MetricField mf = MetricField::potential(g5);
  CDiffOp a = dn3_operator(mf, DnCoords::Potential);
  c.check("potential-form operator is skew-adjoint", is_skew_adjoint(a));

  std::vector<Expr> cas{b(0), b(1), b(2) + bx(0) * b(1)};
  auto res = casimir_check(a, cas);
  for (unsigned i = 0; i < res.size(); ++i)
    c.check("Casimir residual " + std::to_string(i + 1) + " vanishes",
            res[i].is_zero(), to_text(res[i]));

  CDiffOp ta = transform_operator_differential(a, cas);
  Superfun ts = op_to_superfun(ta);
  auto px = [&](unsigned k) { return Expr::atom(sp, Atom::odd_jet(k, one)); };
  Expr expect[] = {-px(2), -px(1), -px(0)};
  const char* names[] = {"component 1 is -p3_x", "component 2 is -p2_x",
                         "component 3 is -p1_x"};
  for (unsigned i = 0; i < 3; ++i)
    c.check(names[i], ts.comps[i] == expect[i], to_text(ts.comps[i]));
}

// ---------------------------------------------------------------------------
// Compatibility table sample: Schouten brackets between third-order
// operators of classified metrics; two compatible pairs and two
// incompatible ones.
void compat3_table(Collector& c) {
  SpaceP sp = Space::make(
      {{"x"}, {"u1", "u2", "u3"}, {"p1", "p2", "p3"}, {"cc", "cp"}, 13});
  MultiIndex z(1, 0);
  auto U = [&](unsigned k) { return Expr::atom(sp, Atom::even_jet(k, z)); };
  Expr u1 = U(0), u2 = U(1), u3 = U(2);
  Expr c0 = Expr::constant(sp, 0), c1 = Expr::constant(sp, 1);
  auto mat3 = [&](std::vector<std::vector<Expr>> rows) {
    return ExprMatrix(sp, std::move(rows));
  };
  auto g1 = [&](const Expr& cst) {
    return mat3({{u2 * u2 + cst, -(u1 * u2) - u3, u2.mul_scalar(2)},
                 {-(u1 * u2) - u3, u1 * u1 + cst * u3 * u3,
                  -(cst * u2 * u3) - u1},
                 {u2.mul_scalar(2), -(cst * u2 * u3) - u1,
                  cst * u2 * u2 + c1}});
  };
  ExprMatrix g3 = mat3({{u2 * u2 + c1, -(u1 * u2), c0},
                        {-(u1 * u2), u1 * u1, c0},
                        {c0, c0, c1}});
  ExprMatrix g4 = mat3({{u2.mul_scalar(-2), u1, c0}, {u1, c0, c0}, {c0, c0, c1}});
  ExprMatrix g5 = mat3({{u2.mul_scalar(-2), u1, c1}, {u1, c1, c0}, {c1, c0, c0}});
  ExprMatrix g6 = ExprMatrix::identity(sp, 3);

  auto op = [&](const ExprMatrix& m) {
    return dn3_operator(MetricField::hydrodynamic(m), DnCoords::Hydrodynamic);
  };
  Expr b3 = operator_bivector(op(g3));
  Expr b4 = operator_bivector(op(g4));
  Expr b5 = operator_bivector(op(g5));
  Expr b6 = operator_bivector(op(g6));
  Expr b1c = operator_bivector(op(g1(Expr::atom(sp, Atom::param(0)))));
  Expr b1cp = operator_bivector(op(g1(Expr::atom(sp, Atom::param(1)))));

  BracketZero r34 = iszero_schouten_bracket(b3, b4);
  c.check("(g3, g4) compatible", r34.zero, "euler residual " + to_text(r34.euler));

  BracketZero r56 = iszero_schouten_bracket(b5, b6);
  c.check("(g5, g6) incompatible: nonzero euler residual", !r56.zero,
          "bracket unexpectedly vanishes in cohomology");

  BracketZero r11 = iszero_schouten_bracket(b1c, b1c);
  c.check("(g1 with equal constants) compatible", r11.zero,
          "euler residual " + to_text(r11.euler));

  BracketZero r11p = iszero_schouten_bracket(b1c, b1cp);
  c.check("(g1 with distinct constants) incompatible: nonzero euler residual",
          !r11p.zero, "bracket unexpectedly vanishes in cohomology");
}

// ---------------------------------------------------------------------------
// First-order / third-order compatibility: the first-order metric family
// with its Levi-Civita connection, constants eliminated on the branch
// where c2 is invertible, against the fixed third-order operator.
void compat13_verify(Collector& c) {
  SpaceP sp = Space::make(
      {{"x"}, {"u1", "u2"}, {"p1", "p2"}, {"c1", "c2", "c3", "c4"}, 13});
  MultiIndex z(1, 0);
  Expr u1 = Expr::atom(sp, Atom::even_jet(0, z));
  Expr u2 = Expr::atom(sp, Atom::even_jet(1, z));
  Expr c1 = Expr::atom(sp, Atom::param(0));
  Expr c2 = Expr::atom(sp, Atom::param(1));
  Expr c3 = Expr::atom(sp, Atom::param(2));
  Expr c4 = Expr::atom(sp, Atom::param(3));
  // Eliminated constants on the branch with c2 invertible.
  Expr c5 = (c1 * c3).mul_scalar(-2) / c2;
  Expr c6 = (c3 * c4).mul_scalar(2) / c2;
  Expr h11 = c1 * u1 + c2 * u2 + c3;
  Expr h12 = c4 * u1 - c2 / u1.mul_scalar(2) + c3 * u2 / u1 +
             c2 * u2 * u2 / u1.mul_scalar(2);
  Expr h22 = (c4 * u2).mul_scalar(2) + c1 / u1 + c5 * u2 / u1 -
             c1 * u2 * u2 / u1 + c6;
  MetricField h =
      MetricField::hydrodynamic(ExprMatrix(sp, {{h11, h12}, {h12, h22}}));
  c.check("first-order metric is flat", riemann_is_flat(h.inverse()));
  CDiffOp p1 = dn1_from_metric(h);
  c.check("P1 is skew-adjoint", is_skew_adjoint(p1));

  MetricField lower = h.inverse();
  ConnectionField gup = raise_connection(h, christoffel_lc(lower));
  c.check("connection satisfies the linear identities",
          check_gamma_linear(h, gup).all_ok());

  Expr one = Expr::constant(sp, 1);
  MetricField g3 = MetricField::hydrodynamic(
      ExprMatrix(sp, {{u2 * u2 + one, -(u1 * u2)}, {-(u1 * u2), u1 * u1}}));
  CDiffOp r3 = dn3_operator(g3, DnCoords::Hydrodynamic);
  BracketZero r33 = iszero_schouten_bracket(operator_bivector(r3),
                                            operator_bivector(r3));
  c.check("[R3,R3] = 0", r33.zero, "euler residual " + to_text(r33.euler));
  BracketZero r13 = iszero_schouten_bracket(operator_bivector(p1),
                                            operator_bivector(r3));
  c.check("[P1,R3] = 0", r13.zero, "euler residual " + to_text(r13.euler));
}

// ---------------------------------------------------------------------------
// WDVV, three-component form. Quick part: the bi-Hamiltonian pair in the
// hydrodynamic coordinates. Long part: push both operators to the flat
// coordinates of the first one and verify the Lie-derivative relation
// L_tau A1 = A2 there.
struct Wdvv3Data {
  SpaceP sp;  // hydrodynamic coordinates (a, b, c)
  CDiffOp a1, a2;
};

Wdvv3Data wdvv3_build() {
  SpaceP sp = Space::make({{"x"}, {"a", "b", "c"}, {"p", "q", "r"}, {}, 13});
  MultiIndex z(1, 0), one(1, 1);
  Expr a = Expr::atom(sp, Atom::even_jet(0, z));
  Expr b = Expr::atom(sp, Atom::even_jet(1, z));
  Expr c = Expr::atom(sp, Atom::even_jet(2, z));
  auto dx = [&](const Expr& e) { return total_derivative(e, 0u); };
  Expr bb_ac = b * b - a * c;

  CDiffOp a1(sp, 3, 3);
  a1.add(0, 0, one, Expr::constant(sp, Rat(-3, 2)));
  a1.add(0, 1, one, a.mul_scalar(Rat(1, 2)));
  a1.add(0, 1, z, dx(a).mul_scalar(Rat(1, 2)));
  a1.add(0, 2, one, b);
  a1.add(0, 2, z, dx(b));
  a1.add(1, 0, one, a.mul_scalar(Rat(1, 2)));
  a1.add(1, 1, one, b);
  a1.add(1, 1, z, dx(b).mul_scalar(Rat(1, 2)));
  a1.add(1, 2, one, c.mul_scalar(Rat(3, 2)));
  a1.add(1, 2, z, dx(c));
  a1.add(2, 0, one, b);
  a1.add(2, 1, one, c.mul_scalar(Rat(3, 2)));
  a1.add(2, 1, z, dx(c).mul_scalar(Rat(1, 2)));
  a1.add(2, 2, one, bb_ac.mul_scalar(2));
  a1.add(2, 2, z, dx(bb_ac));

  Expr c0 = Expr::constant(sp, 0), c1 = Expr::constant(sp, 1);
  ExprMatrix gl(sp,
                {{b.mul_scalar(-2), a, c1}, {a, c1, c0}, {c1, c0, c0}});
  CDiffOp a2 =
      dn3_operator(MetricField::hydrodynamic(gl), DnCoords::Hydrodynamic);
  return {sp, std::move(a1), std::move(a2)};
}

// The three tensors entering the vector field in flat coordinates. v
// holds the order-0 jets (u1, u2, u3); all indices are 0-based with
// othr(i) = the two indices different from i.
struct Wdvv3Tensors {
  SpaceP sp;
  std::vector<Expr> v;

  Expr diff(unsigned i, unsigned j) const { return v[i] - v[j]; }

  // Inverse of the leading-term metric of the symplectic operator.
  ExprMatrix g_upper() const {
    ExprMatrix g(sp, 3, 3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) {
        if (i == j) {
          unsigned a = (i + 1) % 3, b = (i + 2) % 3;
          g.at(i, j) = (diff(i, a) * diff(i, b)).mul_scalar(Rat(-1, 4));
        } else {
          g.at(i, j) = (diff(i, j) * diff(i, j)).mul_scalar(Rat(-1, 4));
        }
      }
    return g;
  }

  // Antisymmetric two-form.
  Expr r_form(unsigned i, unsigned j) const {
    if (i == j) return Expr::zero(sp);
    unsigned k = 3 - i - j;
    Expr one = Expr::constant(sp, 1);
    Expr term1 = one / (diff(i, j) * diff(i, k));
    Expr term2 = one / (diff(j, i) * diff(j, k));
    return (term1 - term2).mul_scalar(Rat(-1, 3));
  }

  // Quadratic conserved-density coefficients, symmetric in the last two
  // indices; the first index is brought to position one by the cyclic
  // relabeling s, then the two closed-form cases apply.
  Expr l_coeff(unsigned i, unsigned j, unsigned k) const {
    // cyclic map taking 0 to i
    auto s = [&](unsigned m) { return (m + i) % 3; };
    auto inv = [&](unsigned m) { return (m + 3 - i) % 3; };
    unsigned J = inv(j), K = inv(k);
    const Expr& w0 = v[s(0)];
    const Expr& w1 = v[s(1)];
    const Expr& w2 = v[s(2)];
    Expr d01 = w0 - w1, d02 = w0 - w2, d12 = w1 - w2;
    auto wfac = [&](unsigned m) {  // product over the complement of {m}
      if (m == 0) return d12;
      if (m == 1) return d02;
      return d01;
    };
    if ((J != 0 && K != 0) || (J == 0 && K == 0)) {
      Expr numer = (d01 + d02) * wfac(J) * wfac(K);
      Expr denom = (d01.pow(3) * d02.pow(3)).mul_scalar(2);
      return numer / denom;
    }
    unsigned kk = (J == 0) ? K : J;  // the non-zero index
    unsigned jj = 3 - kk;            // the remaining index
    Expr dk = w0 - v[s(kk)];
    Expr dj = w0 - v[s(jj)];
    Expr numer = dk * dk + dj * dj;
    Expr denom = (dk * dk * dj.pow(3)).mul_scalar(2);
    return -(numer / denom);
  }
};

void wdvv3_lagrep(Collector& c, bool long_mode) {
  Wdvv3Data d = wdvv3_build();
  c.check("A1 is skew-adjoint", is_skew_adjoint(d.a1));
  c.check("A2 is skew-adjoint", is_skew_adjoint(d.a2));
  Expr biv1 = operator_bivector(d.a1);
  Expr biv2 = operator_bivector(d.a2);
  for (auto [f, h, name] :
       {std::tuple<const Expr*, const Expr*, const char*>{&biv1, &biv1,
                                                          "[A1,A1] = 0"},
        {&biv1, &biv2, "[A1,A2] = 0"},
        {&biv2, &biv2, "[A2,A2] = 0"}}) {
    BracketZero r = iszero_schouten_bracket(*f, *h);
    c.check(name, r.zero, "euler residual " + to_text(r.euler));
  }
  if (!long_mode) return;

  // Flat coordinates of the leading term of A1.
  SpaceP usp = Space::make(
      {{"x"}, {"u1", "u2", "u3"}, {"p1", "p2", "p3"}, {}, 13});
  MultiIndex z(1, 0), one(1, 1);
  auto U = [&](unsigned k) { return Expr::atom(usp, Atom::even_jet(k, z)); };
  Expr u1 = U(0), u2 = U(1), u3 = U(2);
  std::map<std::string, Expr> forward{
      {"a", u1 + u2 + u3},
      {"b", (u1 * u2 + u2 * u3 + u3 * u1).mul_scalar(Rat(-1, 2))},
      {"c", u1 * u2 * u3}};

  CDiffOp taa1 = transform_operator_point(d.a1, forward, usp);
  CDiffOp kap(usp, 3, 3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      kap.add(i, j, one,
              Expr::constant(usp, Rat(i == j ? 1 : -1, 2)));
  c.check("A1 becomes the constant operator in flat coordinates",
          taa1 == kap, to_text(op_to_superfun(taa1)));

  CDiffOp taa2 = transform_operator_point(d.a2, forward, usp);

  Wdvv3Tensors tens{usp, {u1, u2, u3}};
  ExprMatrix g_low = matrix_inverse(tens.g_upper());
  auto ux = [&](unsigned m) { return Expr::atom(usp, Atom::even_jet(m, one)); };
  std::vector<Expr> lvec;
  for (unsigned n = 0; n < 3; ++n) {
    Expr inner = Expr::zero(usp);
    for (unsigned m = 0; m < 3; ++m)
      inner += (g_low.at(n, m).mul_scalar(Rat(1, 2)) + tens.r_form(n, m)) *
               ux(m);
    Expr quad = Expr::zero(usp);
    for (unsigned s = 0; s < 3; ++s)
      for (unsigned m = 0; m < 3; ++m)
        quad += tens.l_coeff(n, s, m) * ux(s) * ux(m);
    lvec.push_back(total_derivative(inner, 0u) - quad.mul_scalar(Rat(1, 2)));
  }
  Expr tau = Expr::zero(usp);
  for (unsigned i = 0; i < 3; ++i) {
    Expr taui = Expr::zero(usp);
    for (unsigned n = 0; n < 3; ++n)
      taui -= Expr::constant(usp, Rat(i == n ? 1 : -1, 2)) * lvec[n];
    tau += taui * Expr::atom(usp, Atom::odd_jet(i, z));
  }

  EulerResult er =
      euler_df(lie_derivative(tau, operator_bivector(taa1)) -
               operator_bivector(taa2));
  c.check("euler(lie(tau, A1) - A2) = 0 in flat coordinates", er.all_zero(),
          to_text(er));
}

const std::vector<std::string> kIds{"kdv-lieder",   "wdvv4-biham",
                                    "darboux-g5",   "compat3-table",
                                    "compat13-verify", "wdvv3-lagrep"};

}  // namespace

const std::vector<std::string>& example_ids() { return kIds; }

bool example_is_long(const std::string& id) { return id == "wdvv3-lagrep"; }

ExampleReport run_example(const std::string& id, bool long_mode) {
  ExampleReport rep;
  rep.id = id;
  rep.long_mode = long_mode && example_is_long(id);
  Collector c{rep.checks};
  auto t0 = std::chrono::steady_clock::now();
  if (id == "kdv-lieder")
    kdv_lieder(c);
  else if (id == "wdvv4-biham")
    wdvv4_biham(c);
  else if (id == "darboux-g5")
    darboux_g5(c);
  else if (id == "compat3-table")
    compat3_table(c);
  else if (id == "compat13-verify")
    compat13_verify(c);
  else if (id == "wdvv3-lagrep")
    wdvv3_lagrep(c, rep.long_mode);
  else {
    std::string ids;
    for (const auto& s : kIds) ids += (ids.empty() ? "" : ", ") + s;
    throw UnknownName("unknown example '" + id + "'; available: " + ids);
  }
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  rep.ok = true;
  for (const auto& ch : rep.checks) {
    if (!ch.pass) {
      rep.ok = false;
      rep.first_mismatch = ch.name + (ch.detail.empty() ? "" : ": " + ch.detail);
      break;
    }
  }
  return rep;
}

std::string report_text(const ExampleReport& r) {
  std::string out = "example " + r.id +
                    (r.long_mode ? " (long)" : "") + "\n";
  for (const auto& ch : r.checks) {
    out += std::string(ch.pass ? "  ok   " : "  FAIL ") + ch.name;
    if (!ch.pass && !ch.detail.empty()) out += "\n       got: " + ch.detail;
    out += "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", r.seconds);
  out += std::string(r.ok ? "PASS" : "FAIL") + " (" + buf + "s)\n";
  if (!r.ok) out += "first mismatch: " + r.first_mismatch + "\n";
  return out;
}

std::string report_json(const ExampleReport& r) {
  json checks = json::array();
  for (const auto& ch : r.checks)
    checks.push_back(
        json{{"detail", ch.detail}, {"name", ch.name}, {"pass", ch.pass}});
  json doc{{"checks", checks},
           {"id", r.id},
           {"long", r.long_mode},
           {"mismatch", r.first_mismatch},
           {"ok", r.ok}};
  return doc.dump();
}

}  // namespace hamop
