#include "hamop/varcalc.hpp"

#include <algorithm>

#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "hamop/parallel.hpp"

namespace hamop {

namespace {

/*
 * Variational derivative on one independent variable by a Horner fold.
 *
 * Description:
 *   delta/delta u = sum_k (-D)^k d/du_k nests as
 *   d_0 - D(d_1 - D(d_2 - ... - D(d_m))), which needs m total
 *   derivatives in place of the m(m+1)/2 of the termwise sum and lets
 *   every level share one reduction.
 */
Expr vd_horner_1d(const Expr& f, const Atom& var) {
  const SpaceP& sp = f.space();
  unsigned maxo = 0;
  bool any = false;
  if (var.kind == AtomKind::EvenJet) {
    std::set<VarId> vars;
    f.collect_even_vars(vars);
    for (VarId v : vars) {
      Atom a = sp->even_atom(v);
      if (a.kind != AtomKind::EvenJet || a.index != var.index) continue;
      maxo = std::max(maxo, mi_order(a.mi));
      any = true;
    }
  } else {
    std::set<std::uint32_t> ids;
    f.collect_odd_ids(ids);
    for (std::uint32_t id : ids) {
      if (sp->odd_index_of(id) != var.index) continue;
      maxo = std::max(maxo, mi_order(sp->odd_atom(id).mi));
      any = true;
    }
  }
  if (!any) return Expr::zero(sp);
  auto partial_at = [&](unsigned o) {
    MultiIndex mi(1, o);
    Atom a = var.kind == AtomKind::EvenJet ? Atom::even_jet(var.index, mi)
                                           : Atom::odd_jet(var.index, mi);
    return f.partial(a);
  };
  Expr acc = partial_at(maxo);
  for (unsigned k = maxo; k-- > 0;)
    acc = partial_at(k) - total_derivative(acc, 0u);
  return acc;
}

}  // namespace

Expr variational_derivative(const Expr& f, const Atom& var) {
  const SpaceP& sp = f.space();
  if (var.kind != AtomKind::EvenJet && var.kind != AtomKind::OddJet)
    throw UnknownAtom("variational derivative needs a dependent variable");
  if (mi_order(var.mi) != 0)
    throw UnknownAtom("variational derivative needs an order-zero variable");
  if (var.kind == AtomKind::EvenJet && var.index >= sp->n_dep())
    throw UnknownAtom("dependent variable index out of range");
  if (var.kind == AtomKind::OddJet && var.index >= sp->n_odd())
    throw UnknownAtom("odd variable index out of range");
  if (sp->n_indep() == 1) return vd_horner_1d(f, var);
  Expr acc = Expr::zero(sp);
  if (var.kind == AtomKind::EvenJet) {
    if (var.index >= sp->n_dep())
      throw UnknownAtom("dependent variable index out of range");
    std::set<VarId> vars;
    f.collect_even_vars(vars);
    for (VarId v : vars) {
      Atom a = sp->even_atom(v);
      if (a.kind != AtomKind::EvenJet || a.index != var.index) continue;
      Expr g = f.partial(a);
      if (g.is_zero()) continue;
      g = total_derivative(g, a.mi);
      acc += mi_order(a.mi) % 2 == 0 ? g : -g;
    }
  } else {
    if (var.index >= sp->n_odd())
      throw UnknownAtom("odd variable index out of range");
    std::set<std::uint32_t> ids;
    f.collect_odd_ids(ids);
    for (std::uint32_t id : ids) {
      if (sp->odd_index_of(id) != var.index) continue;
      Atom a = sp->odd_atom(id);
      Expr g = f.partial(a);
      if (g.is_zero()) continue;
      g = total_derivative(g, a.mi);
      acc += mi_order(a.mi) % 2 == 0 ? g : -g;
    }
  }
  return acc;
}

Expr variational_derivative(const Expr& f, const std::string& var_name) {
  const SpaceP& sp = f.space();
  MultiIndex zero(sp->n_indep(), 0);
  const auto& deps = sp->spec().dep;
  auto it = std::find(deps.begin(), deps.end(), var_name);
  if (it != deps.end())
    return variational_derivative(
        f, Atom::even_jet((unsigned)(it - deps.begin()), zero));
  const auto& odds = sp->spec().odd;
  it = std::find(odds.begin(), odds.end(), var_name);
  if (it != odds.end())
    return variational_derivative(
        f, Atom::odd_jet((unsigned)(it - odds.begin()), zero));
  throw UnknownAtom("'" + var_name + "' is not a dependent variable");
}

bool EulerResult::all_zero() const {
  for (const auto& e : even)
    if (!e.is_zero()) return false;
  for (const auto& e : odd)
    if (!e.is_zero()) return false;
  return true;
}

EulerResult euler_df(const Expr& f) {
  const SpaceP& sp = f.space();
  unsigned n = sp->n_dep(), k = sp->n_odd();
  MultiIndex zero(sp->n_indep(), 0);
  EulerResult r;
  r.even.assign(n, Expr::zero(sp));
  r.odd.assign(k, Expr::zero(sp));
  parallel_for(n + k, [&](std::size_t i) {
    if (i < n)
      r.even[i] = variational_derivative(f, Atom::even_jet((unsigned)i, zero));
    else
      r.odd[i - n] =
          variational_derivative(f, Atom::odd_jet((unsigned)(i - n), zero));
  });
  return r;
}

EulerResult euler_df_serial(const Expr& f) {
  const SpaceP& sp = f.space();
  MultiIndex zero(sp->n_indep(), 0);
  EulerResult r;
  for (unsigned i = 0; i < sp->n_dep(); ++i)
    r.even.push_back(variational_derivative(f, Atom::even_jet(i, zero)));
  for (unsigned i = 0; i < sp->n_odd(); ++i)
    r.odd.push_back(variational_derivative(f, Atom::odd_jet(i, zero)));
  return r;
}

bool is_total_divergence(const Expr& f) { return euler_df(f).all_zero(); }

Superfun linearize(const std::vector<Expr>& f) {
  if (f.empty()) throw ShapeMismatch("linearize needs components");
  const SpaceP& sp = f.front().space();
  if (sp->n_odd() != sp->n_dep())
    throw ShapeMismatch(
        "linearize pairs dependent variables with odd ones; counts differ");
  std::vector<Expr> comps;
  comps.reserve(f.size());
  for (const Expr& fk : f) {
    require_same_space(sp, fk.space());
    if (!fk.is_even_function())
      throw ParityViolation("linearize needs components without odd factors");
    Expr acc = Expr::zero(sp);
    std::set<VarId> vars;
    fk.collect_even_vars(vars);
    for (VarId v : vars) {
      Atom a = sp->even_atom(v);
      if (a.kind != AtomKind::EvenJet) continue;
      Expr d = fk.partial(a);
      if (d.is_zero()) continue;
      acc += d * Expr::atom(sp, Atom::odd_jet(a.index, a.mi));
    }
    comps.push_back(std::move(acc));
  }
  return Superfun(1, std::move(comps));
}

Superfun adjoint(const Superfun& l) {
  if (l.degree != 1)
    throw DegreeViolation("adjoint acts on degree-1 superfunctions");
  const SpaceP& sp = l.space();
  unsigned n = sp->n_odd();
  if (l.size() != n)
    throw ShapeMismatch(
        "adjoint needs as many components as odd variables");
  MultiIndex zero(sp->n_indep(), 0);
  std::vector<Expr> comps(n, Expr::zero(sp));
  for (unsigned k = 0; k < l.size(); ++k) {
    Expr pk = Expr::atom(sp, Atom::odd_jet(k, zero));
    for (const auto& t : l.comps[k].terms()) {
      Atom a = sp->odd_atom(t.mon[0]);  // degree-1 terms by invariant
      Expr moved = total_derivative(Expr::from_ratfun(sp, t.c) * pk, a.mi);
      comps[a.index] += mi_order(a.mi) % 2 == 0 ? moved : -moved;
    }
  }
  return Superfun(1, std::move(comps));
}

std::vector<OddBlock> splitext(const Expr& f) {
  const SpaceP& sp = f.space();
  std::vector<OddBlock> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    OddBlock b{{}, Expr::from_ratfun(sp, t.c)};
    for (std::uint32_t id : t.mon) b.factors.push_back(sp->odd_atom(id));
    out.push_back(std::move(b));
  }
  return out;
}

SplitVars splitvars(const Expr& f, const std::vector<Atom>& coords) {
  const SpaceP& sp = f.space();
  RatFun r = f.ratfun();  // rejects odd factors
  std::set<VarId> cv;
  for (const Atom& a : coords) {
    if (a.kind == AtomKind::OddJet)
      throw ParityViolation("splitvars coordinates must be even");
    cv.insert(sp->even_id(a));
  }
  for (VarId v : cv)
    if (r.den().contains(v))
      throw NotPolynomial("denominator contains a split coordinate; clear it first");
  struct Desc {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return Monomial::cmp(a, b) > 0;
    }
  };
  std::map<Monomial, std::vector<Poly::Term>, Desc> groups;
  for (const auto& [m, c] : r.num().terms()) {
    Monomial cm, rest;
    for (const auto& [v, e] : m.f)
      (cv.count(v) ? cm.f : rest.f).emplace_back(v, e);
    groups[cm].emplace_back(std::move(rest), c);
  }
  SplitVars out{{}, Expr::from_ratfun(sp, RatFun(r.den()))};
  for (auto& [cm, ts] : groups) {
    Expr mon = Expr::from_ratfun(sp, RatFun(Poly::term(cm, Rat(1))));
    Expr coeff = Expr::from_ratfun(sp, RatFun(normalize_terms(std::move(ts))));
    out.parts.emplace_back(std::move(mon), std::move(coeff));
  }
  return out;
}

}  // namespace hamop
