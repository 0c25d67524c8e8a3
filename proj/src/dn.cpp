#include "hamop/dn.hpp"

#include <utility>

#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "hamop/varcalc.hpp"

namespace hamop {

ExprMatrix matrix_inverse(const ExprMatrix& m) { return m.inverse(); }

namespace {

MetricField make_metric(ExprMatrix g, DnCoords coords) {
  if (g.rows() != g.cols()) throw ShapeMismatch("a metric must be square");
  if (!g.is_symmetric()) throw ShapeMismatch("a metric must be symmetric");
  const SpaceP& sp = g.space();
  if (g.rows() != sp->n_dep())
    throw ShapeMismatch("a metric needs one row per dependent variable");
  if (coords == DnCoords::Potential && sp->n_indep() != 1)
    throw ShapeMismatch(
        "potential coordinates require one independent variable");
  const unsigned allowed_order = coords == DnCoords::Hydrodynamic ? 0 : 1;
  for (unsigned i = 0; i < g.rows(); ++i)
    for (unsigned j = 0; j < g.cols(); ++j) {
      const Expr& x = g.at(i, j);
      if (!x.is_even_function())
        throw ParityViolation("metric entries must be free of odd factors");
      std::set<VarId> vars;
      x.collect_even_vars(vars);
      for (VarId v : vars) {
        Atom at = sp->even_atom(v);
        if (at.kind == AtomKind::Parameter) continue;
        if (at.kind == AtomKind::EvenJet && mi_order(at.mi) == allowed_order)
          continue;
        throw OrderExceeded(sp->name(at), allowed_order);
      }
    }
  return MetricField{std::move(g), coords};
}

}  // namespace

MetricField MetricField::hydrodynamic(ExprMatrix g) {
  return make_metric(std::move(g), DnCoords::Hydrodynamic);
}

MetricField MetricField::potential(ExprMatrix g) {
  return make_metric(std::move(g), DnCoords::Potential);
}

Atom MetricField::coord(unsigned k) const {
  MultiIndex mi(space()->n_indep(), 0);
  if (coords == DnCoords::Potential) mi[0] = 1;
  return Atom::even_jet(k, mi);
}

Expr MetricField::comma(const Expr& f, unsigned k) const {
  return f.partial(coord(k));
}

MetricField MetricField::inverse() const {
  try {
    return MetricField{g.inverse(), coords};
  } catch (const SingularMatrix&) {
    throw SingularMatrix("the metric is degenerate");
  }
}

Tensor3::Tensor3(SpaceP space, unsigned dim) : sp(std::move(space)), n(dim) {
  e.assign(static_cast<size_t>(n) * n * n, Expr::zero(sp));
}

bool Tensor3::is_zero() const {
  for (const auto& x : e) if (!x.is_zero()) return false;
  return true;
}

ConnectionField christoffel_lc(const MetricField& g_lower) {
  const SpaceP& sp = g_lower.space();
  const unsigned n = g_lower.n();
  ExprMatrix inv = g_lower.inverse().g;
  Tensor3 t(sp, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = j; k < n; ++k) {
        Expr acc = Expr::zero(sp);
        for (unsigned s = 0; s < n; ++s) {
          Expr braces = g_lower.comma(g_lower.g.at(s, k), j) +
                        g_lower.comma(g_lower.g.at(s, j), k) -
                        g_lower.comma(g_lower.g.at(j, k), s);
          acc += inv.at(i, s) * braces;
        }
        acc = acc.mul_scalar(Rat(1, 2));
        t.at(i, j, k) = acc;
        t.at(i, k, j) = std::move(acc);
      }
  return ConnectionField{std::move(t), ConnForm::Lower};
}

ConnectionField raise_connection(const MetricField& h_upper,
                                 const ConnectionField& gamma_lower) {
  if (gamma_lower.form != ConnForm::Lower)
    throw ShapeMismatch("raising expects a lower-form connection");
  const SpaceP& sp = h_upper.space();
  require_same_space(sp, gamma_lower.t.sp);
  const unsigned n = h_upper.n();
  if (gamma_lower.t.n != n) throw ShapeMismatch("connection size mismatch");
  Tensor3 t(sp, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k) {
        Expr acc = Expr::zero(sp);
        for (unsigned s = 0; s < n; ++s)
          acc += h_upper.g.at(i, s) * gamma_lower.t.at(j, s, k);
        t.at(i, j, k) = -acc;
      }
  return ConnectionField{std::move(t), ConnForm::Upper};
}

bool riemann_is_flat(const MetricField& g_lower) {
  const unsigned n = g_lower.n();
  ConnectionField gamma = christoffel_lc(g_lower);
  const Tensor3& c = gamma.t;
  // R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj}
  //           + G^i_{ks} G^s_{lj} - G^i_{ls} G^s_{kj}
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = k + 1; l < n; ++l) {
          Expr r = g_lower.comma(c.at(i, l, j), k) -
                   g_lower.comma(c.at(i, k, j), l);
          for (unsigned s = 0; s < n; ++s)
            r += c.at(i, k, s) * c.at(s, l, j) -
                 c.at(i, l, s) * c.at(s, k, j);
          if (!r.is_zero()) return false;
        }
  return true;
}

CDiffOp dn1_operator(const MetricField& h_upper,
                     const ConnectionField& gamma_upper) {
  if (gamma_upper.form != ConnForm::Upper)
    throw ShapeMismatch("the first-order operator takes an upper connection");
  const SpaceP& sp = h_upper.space();
  require_same_space(sp, gamma_upper.t.sp);
  if (sp->n_indep() != 1)
    throw ShapeMismatch(
        "homogeneous operators live over one independent variable");
  const unsigned n = h_upper.n();
  if (gamma_upper.t.n != n) throw ShapeMismatch("connection size mismatch");
  if (h_upper.coords != DnCoords::Hydrodynamic)
    throw ShapeMismatch("the first-order operator takes a hydrodynamic metric");
  const MultiIndex zero(1, 0), one(1, 1);
  CDiffOp a(sp, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      a.add(i, j, one, h_upper.g.at(i, j));
      Expr con = Expr::zero(sp);
      for (unsigned k = 0; k < n; ++k)
        con += gamma_upper.t.at(i, j, k) *
               Expr::atom(sp, Atom::even_jet(k, one));
      a.add(i, j, zero, con);
    }
  return a;
}

CDiffOp dn1_from_metric(const MetricField& h_upper) {
  MetricField lower = h_upper.inverse();
  ConnectionField gamma = raise_connection(h_upper, christoffel_lc(lower));
  return dn1_operator(h_upper, gamma);
}

Dn3Coeffs dn3_c_from_g(const MetricField& g_lower) {
  const SpaceP& sp = g_lower.space();
  const unsigned n = g_lower.n();
  Tensor3 lower(sp, n);
  for (unsigned s = 0; s < n; ++s)
    for (unsigned k = 0; k < n; ++k)
      for (unsigned m = 0; m < n; ++m)
        lower.at(s, k, m) = (g_lower.comma(g_lower.g.at(s, m), k) -
                             g_lower.comma(g_lower.g.at(s, k), m))
                                .mul_scalar(Rat(1, 3));
  ExprMatrix inv = g_lower.inverse().g;
  Tensor3 upper(sp, n);
  for (unsigned p = 0; p < n; ++p)
    for (unsigned q = 0; q < n; ++q)
      for (unsigned k = 0; k < n; ++k) {
        Expr acc = Expr::zero(sp);
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = 0; j < n; ++j)
            acc += inv.at(q, i) * inv.at(p, j) * lower.at(i, j, k);
        upper.at(p, q, k) = std::move(acc);
      }
  return Dn3Coeffs{std::move(lower), std::move(upper)};
}

CDiffOp dn3_operator(const MetricField& g_lower, DnCoords coords) {
  if (coords != g_lower.coords)
    throw ShapeMismatch(
        "the requested form must match the coordinates of the metric");
  const SpaceP& sp = g_lower.space();
  if (sp->n_indep() != 1)
    throw ShapeMismatch(
        "homogeneous operators live over one independent variable");
  const unsigned n = g_lower.n();
  ExprMatrix gu = g_lower.inverse().g;
  Tensor3 cu = dn3_c_from_g(g_lower).upper;

  // Contracted coefficient: c^{ij}_k u^k_x (hydrodynamic) or
  // c^{ij}_k b^k_xx (potential).
  MultiIndex contr(1, g_lower.coords == DnCoords::Hydrodynamic ? 1 : 2);
  std::vector<std::vector<Expr>> gmat(n, std::vector<Expr>(n, Expr::zero(sp)));
  std::vector<std::vector<Expr>> cmat(n, std::vector<Expr>(n, Expr::zero(sp)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      gmat[i][j] = gu.at(i, j);
      Expr acc = Expr::zero(sp);
      for (unsigned k = 0; k < n; ++k)
        acc += cu.at(i, j, k) * Expr::atom(sp, Atom::even_jet(k, contr));
      cmat[i][j] = std::move(acc);
    }
  CDiffOp gop = CDiffOp::mult(sp, gmat);
  CDiffOp cop = CDiffOp::mult(sp, cmat);
  CDiffOp dx = CDiffOp::derivative(sp, n, 0, 1);
  if (coords == DnCoords::Hydrodynamic)
    return dx.compose(gop.compose(dx) + cop).compose(dx);
  return -(gop.compose(dx) + cop);
}

Dn3Report check_dn3_conditions(const MetricField& g_lower) {
  const unsigned n = g_lower.n();
  Dn3Coeffs c = dn3_c_from_g(g_lower);
  ExprMatrix inv = g_lower.inverse().g;
  Dn3Report rep;
  rep.cyclic_ok = rep.quadratic_ok = true;
  for (unsigned m = 0; m < n; ++m)
    for (unsigned k = 0; k < n; ++k)
      for (unsigned s = 0; s < n; ++s) {
        Expr r = g_lower.comma(g_lower.g.at(m, k), s) +
                 g_lower.comma(g_lower.g.at(k, s), m) +
                 g_lower.comma(g_lower.g.at(m, s), k);
        if (!r.is_zero()) rep.cyclic_ok = false;
        rep.cyclic_residual.push_back(std::move(r));
      }
  for (unsigned m = 0; m < n; ++m)
    for (unsigned s = 0; s < n; ++s)
      for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
          Expr r = g_lower.comma(c.lower.at(m, s, k), l);
          for (unsigned p = 0; p < n; ++p)
            for (unsigned q = 0; q < n; ++q)
              r += inv.at(p, q) * c.lower.at(p, m, l) * c.lower.at(q, s, k);
          if (!r.is_zero()) rep.quadratic_ok = false;
          rep.quadratic_residual.push_back(std::move(r));
        }
  return rep;
}

GammaLinearReport check_gamma_linear(const MetricField& h_upper,
                                     const ConnectionField& gamma_upper) {
  if (gamma_upper.form != ConnForm::Upper)
    throw ShapeMismatch("the linear relations take an upper connection");
  const SpaceP& sp = h_upper.space();
  require_same_space(sp, gamma_upper.t.sp);
  const unsigned n = h_upper.n();
  if (gamma_upper.t.n != n) throw ShapeMismatch("connection size mismatch");
  const Tensor3& ga = gamma_upper.t;
  GammaLinearReport rep;
  rep.symmetry_ok = rep.pairing_ok = true;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k) {
        Expr r = ga.at(i, j, k) + ga.at(j, i, k) -
                 h_upper.comma(h_upper.g.at(i, j), k);
        if (!r.is_zero()) rep.symmetry_ok = false;
        rep.symmetry_residual.push_back(std::move(r));
      }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = 0; k < n; ++k) {
        Expr r = Expr::zero(sp);
        for (unsigned s = 0; s < n; ++s)
          r += h_upper.g.at(i, s) * ga.at(j, k, s) -
               h_upper.g.at(j, s) * ga.at(i, k, s);
        if (!r.is_zero()) rep.pairing_ok = false;
        rep.pairing_residual.push_back(std::move(r));
      }
  return rep;
}

std::vector<Expr> casimir_check(const CDiffOp& a, const std::vector<Expr>& c) {
  if (a.rows() != a.cols())
    throw ShapeMismatch("Casimir residuals need a square operator");
  const SpaceP& sp = a.space();
  const MultiIndex zero(sp->n_indep(), 0);
  std::vector<Expr> out;
  for (const Expr& dens : c) {
    require_same_space(sp, dens.space());
    std::vector<Expr> vd;
    vd.reserve(a.cols());
    for (unsigned j = 0; j < a.cols(); ++j)
      vd.push_back(variational_derivative(dens, Atom::even_jet(j, zero)));
    std::vector<Expr> res = a.apply(vd);
    for (auto& r : res) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Expr> casimir_construct(
    const SpaceP& sp, const std::vector<std::vector<std::vector<Rat>>>& psi,
    const std::vector<std::vector<Rat>>& omega) {
  const unsigned n = sp->n_dep();
  if (psi.size() != omega.size())
    throw ShapeMismatch("one psi array and one omega vector per Casimir");
  if (sp->n_indep() != 1)
    throw ShapeMismatch("potential Casimirs live over one independent variable");
  const MultiIndex zero(1, 0), one(1, 1);
  std::vector<Expr> out;
  for (size_t al = 0; al < psi.size(); ++al) {
    if (psi[al].size() != n || omega[al].size() != n)
      throw ShapeMismatch("psi and omega must have one entry per variable");
    for (unsigned i = 0; i < n; ++i) {
      if (psi[al][i].size() != n)
        throw ShapeMismatch("psi arrays must be square");
      for (unsigned m = 0; m < n; ++m)
        if (psi[al][i][m] != -psi[al][m][i])
          throw AntisymmetryViolation("psi arrays must be antisymmetric");
    }
    Expr c = Expr::zero(sp);
    for (unsigned m = 0; m < n; ++m) {
      Expr coef = Expr::constant(sp, omega[al][m]);
      for (unsigned k = 0; k < n; ++k)
        coef += Expr::atom(sp, Atom::even_jet(k, one))
                    .mul_scalar(psi[al][m][k] / 2);
      c += coef * Expr::atom(sp, Atom::even_jet(m, zero));
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hamop
