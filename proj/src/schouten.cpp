#include "hamop/schouten.hpp"

#include <algorithm>
#include <utility>

#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "hamop/parallel.hpp"

namespace hamop {

namespace {

// Degree shared by every term; throws on mixed degrees (zero passes).
unsigned homogeneous_degree(const Expr& f, const char* what) {
  if (f.is_zero()) return 0;
  unsigned d = static_cast<unsigned>(f.terms().front().mon.size());
  for (const auto& t : f.terms())
    if (t.mon.size() != d)
      throw DegreeViolation(std::string(what) +
                            " must be homogeneous in the odd coordinates");
  return d;
}

Expr bracket_impl(const Expr& f, const Expr& h, bool parallel) {
  const SpaceP& sp = f.space();
  require_same_space(sp, h.space());
  if (sp->n_odd() != sp->n_dep())
    throw ShapeMismatch(
        "the bracket pairs dependent variables with odd variables "
        "one to one");
  if (f.is_zero() || h.is_zero()) return Expr::zero(sp);
  const unsigned df = homogeneous_degree(f, "bracket argument");
  const unsigned dh = homogeneous_degree(h, "bracket argument");
  // Sign (-1)^s with s = (deg f + 1)(deg h + 1) on the second product.
  const bool flip = ((df + 1) * (dh + 1)) % 2 != 0;

  const unsigned n = sp->n_dep();
  const MultiIndex zero(sp->n_indep(), 0);
  std::vector<Expr> slot(n, Expr::zero(sp));
  auto component = [&](std::size_t i) {
    const Atom ui = Atom::even_jet(static_cast<unsigned>(i), zero);
    const Atom pi = Atom::odd_jet(static_cast<unsigned>(i), zero);
    Expr a = variational_derivative(h, ui) * variational_derivative(f, pi);
    Expr b = variational_derivative(f, ui) * variational_derivative(h, pi);
    slot[i] = flip ? a + b : a - b;
  };
  if (parallel) {
    parallel_for(n, component);
  } else {
    for (std::size_t i = 0; i < n; ++i) component(i);
  }
  Expr acc = Expr::zero(sp);
  for (const auto& e : slot) acc += e;
  return acc;
}

}  // namespace

Expr schouten_bracket(const Expr& f, const Expr& h) {
  return bracket_impl(f, h, true);
}

Expr schouten_bracket_serial(const Expr& f, const Expr& h) {
  return bracket_impl(f, h, false);
}

BracketZero iszero_schouten_bracket(const Expr& f, const Expr& h) {
  BracketZero r{false, schouten_bracket(f, h), EulerResult{}};
  r.euler = euler_df(r.representative);
  r.zero = r.euler.all_zero();
  return r;
}

Expr lie_derivative(const Expr& tau, const Expr& h) {
  if (!tau.odd_degree_is(1))
    throw DegreeViolation(
        "the field of a Lie derivative must have odd degree 1");
  return schouten_bracket(tau, h);
}

Expr lie_derivative(const Superfun& tau, const Expr& h) {
  Expr sum = Expr::zero(tau.space());
  for (const Expr& c : tau.comps) sum += c;
  return lie_derivative(sum, h);
}

Expr operator_bivector(const CDiffOp& a) {
  return superfun_to_multivector(op_to_superfun(a));
}

std::vector<Expr> hamiltonian_flow(const CDiffOp& a, const Expr& h) {
  const SpaceP& sp = a.space();
  require_same_space(sp, h.space());
  if (!h.is_even_function())
    throw ParityViolation("a Hamiltonian density must be free of odd factors");
  const MultiIndex zero(sp->n_indep(), 0);
  std::vector<Expr> vd;
  vd.reserve(a.cols());
  for (unsigned j = 0; j < a.cols(); ++j)
    vd.push_back(variational_derivative(h, Atom::even_jet(j, zero)));
  return a.apply(vd);
}

Expr poisson_bracket(const Expr& h, const Expr& f, const CDiffOp& a) {
  const SpaceP& sp = a.space();
  require_same_space(sp, h.space());
  std::vector<Expr> flow = hamiltonian_flow(a, f);
  if (!h.is_even_function())
    throw ParityViolation("a Hamiltonian density must be free of odd factors");
  const MultiIndex zero(sp->n_indep(), 0);
  Expr acc = Expr::zero(sp);
  for (unsigned i = 0; i < a.rows(); ++i)
    acc += variational_derivative(h, Atom::even_jet(i, zero)) * flow[i];
  return acc;
}

CDiffOp check_operator_equation(const std::vector<Expr>& f, const CDiffOp& a) {
  CDiffOp lin = superfun_to_op(linearize(f));
  CDiffOp adj = superfun_to_op(adjoint(linearize(f)));
  return lin.compose(a) + a.compose(adj);
}

bool is_skew_adjoint(const CDiffOp& a) {
  if (a.rows() != a.cols())
    throw ShapeMismatch("skew-adjointness applies to square operators");
  Superfun s = op_to_superfun(a);
  return (s + adjoint(s)).is_zero();
}

CDiffOp transform_operator_differential(const CDiffOp& a,
                                        const std::vector<Expr>& c) {
  Superfun lin = linearize(c);
  CDiffOp lc = superfun_to_op(lin);
  CDiffOp lcs = superfun_to_op(adjoint(lin));
  return lc.compose(a).compose(lcs);
}

namespace {

// Checks that a forward component only involves order-0 jets,
// parameters, and independent variables of its space.
void require_pointwise(const Expr& f, const std::string& name) {
  if (!f.is_even_function())
    throw ParityViolation("forward component '" + name +
                          "' must be free of odd factors");
  std::set<VarId> vars;
  f.collect_even_vars(vars);
  for (VarId v : vars) {
    Atom at = f.space()->even_atom(v);
    if (at.kind == AtomKind::EvenJet && mi_order(at.mi) > 0)
      throw OrderExceeded(name, 0);
  }
}

}  // namespace

CDiffOp transform_operator_point(const CDiffOp& a,
                                 const std::map<std::string, Expr>& forward,
                                 const SpaceP& new_space) {
  const SpaceP& old_sp = a.space();
  if (a.rows() != a.cols() || a.rows() != old_sp->n_dep())
    throw ShapeMismatch(
        "point transport applies to square operators with one row per "
        "dependent variable");
  if (old_sp->spec().indep != new_space->spec().indep ||
      old_sp->spec().params != new_space->spec().params)
    throw SpaceMismatch(
        "point transport keeps independent variables and parameters");
  const unsigned n = old_sp->n_dep();
  if (new_space->n_dep() != n)
    throw ShapeMismatch("old and new space need equally many dependents");

  // Forward components: one per old dependent variable, written in the
  // new coordinates, order-0 only.
  std::vector<Expr> fwd;
  fwd.reserve(n);
  for (unsigned h = 0; h < n; ++h) {
    const std::string& name = old_sp->spec().dep[h];
    auto it = forward.find(name);
    if (it == forward.end())
      throw UnknownName("no forward expression for '" + name + "'");
    require_same_space(new_space, it->second.space());
    require_pointwise(it->second, name);
    fwd.push_back(it->second);
  }

  // Highest derivative order of the old coefficients decides how far
  // the forward map must be prolonged.
  unsigned needed = 0;
  std::set<VarId> vars;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (const auto& [mi, c] : a.entry(i, j)) c.collect_even_vars(vars);
  for (VarId v : vars) {
    Atom at = old_sp->even_atom(v);
    if (at.kind == AtomKind::EvenJet) needed = std::max(needed, mi_order(at.mi));
  }
  if (needed > new_space->total_order())
    throw OrderExceeded(new_space->spec().dep.front(), needed);

  // Table old even id -> value in the new coordinates.
  std::map<VarId, RatFun> value;
  for (unsigned l = 0; l < old_sp->n_indep(); ++l)
    value[old_sp->even_id(Atom::indep(l))] =
        RatFun::variable(new_space->even_id(Atom::indep(l)));
  for (unsigned k = 0; k < old_sp->n_param(); ++k)
    value[old_sp->even_id(Atom::param(k))] =
        RatFun::variable(new_space->even_id(Atom::param(k)));
  for (unsigned h = 0; h < n; ++h) {
    // Graded walk so the parent with one derivative less exists.
    std::vector<Expr> by_rank(new_space->n_ranks(), Expr::zero(new_space));
    for (unsigned r = 0; r < new_space->n_ranks(); ++r) {
      const MultiIndex& mi = new_space->mindex(r);
      unsigned o = mi_order(mi);
      if (o > needed) continue;
      if (o == 0) {
        by_rank[r] = fwd[h];
      } else {
        unsigned l = 0;
        while (mi[l] == 0) ++l;
        MultiIndex parent = mi;
        --parent[l];
        by_rank[r] = total_derivative(by_rank[*new_space->rank(parent)], l);
      }
      if (auto old_rank = old_sp->rank(mi); old_rank.has_value())
        value[old_sp->even_id(Atom::even_jet(h, mi))] = by_rank[r].ratfun();
    }
  }
  auto lookup = [&value](VarId v) -> const RatFun* {
    auto it = value.find(v);
    return it == value.end() ? nullptr : &it->second;
  };
  auto transport = [&](const Expr& c) {
    RatFun r = c.ratfun();
    RatFun num = eval_poly(r.num(), lookup);
    RatFun den = eval_poly(r.den(), lookup);
    if (den.is_zero())
      throw DivisionByZero("substitution makes a denominator vanish");
    return Expr::from_ratfun(new_space, num / den);
  };

  // The operator with transported coefficients, on the new space.
  CDiffOp moved(new_space, n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (const auto& [mi, c] : a.entry(i, j)) moved.add(i, j, mi, transport(c));

  // Jacobian of the forward map by the order-0 new coordinates.
  const MultiIndex zero(new_space->n_indep(), 0);
  ExprMatrix jac(new_space, n, n);
  for (unsigned h = 0; h < n; ++h)
    for (unsigned j = 0; j < n; ++j)
      jac.at(h, j) = fwd[h].partial(Atom::even_jet(j, zero));
  ExprMatrix jinv(new_space, n, n);
  try {
    jinv = jac.inverse();
  } catch (const SingularMatrix&) {
    throw SingularJacobian("the forward map has a singular Jacobian");
  }

  std::vector<std::vector<Expr>> l(n, std::vector<Expr>(n, Expr::zero(new_space)));
  std::vector<std::vector<Expr>> r(n, std::vector<Expr>(n, Expr::zero(new_space)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      l[i][j] = jinv.at(i, j);
      r[i][j] = jinv.at(j, i);  // transpose
    }
  CDiffOp left = CDiffOp::mult(new_space, l);
  CDiffOp right = CDiffOp::mult(new_space, r);
  return left.compose(moved).compose(right);
}

}  // namespace hamop
