#include "hamop/jet.hpp"

#include <algorithm>

#include "hamop/errors.hpp"

namespace hamop {

namespace {

Expr total_derivative_once(const Expr& a, unsigned lambda) {
  const SpaceP& sp = a.space();
  if (lambda >= sp->n_indep())
    throw UnknownAtom("independent variable index out of range");
  // The derivation image of each even variable: parameters drop, the
  // matching independent variable becomes 1, jets shift one step. The
  // cache is shared by every coefficient of the expression.
  std::map<VarId, Poly::DerivImage> images;
  auto image = [&](VarId v) -> Poly::DerivImage {
    auto it = images.find(v);
    if (it != images.end()) return it->second;
    Poly::DerivImage im;
    Atom at = sp->even_atom(v);
    if (at.kind == AtomKind::IndepVar) {
      if (at.index == lambda) im.kind = Poly::DerivImage::One;
    } else if (at.kind == AtomKind::EvenJet) {
      auto s = sp->shift_rank(*sp->rank(at.mi), lambda);
      if (!s)
        throw OrderExceeded(sp->spec().dep[at.index], sp->total_order() + 1);
      im.kind = Poly::DerivImage::Var;
      im.v = sp->even_id(Atom::even_jet(at.index, sp->mindex(*s)));
    }
    images.emplace(v, im);
    return im;
  };
  std::vector<Expr::Term> acc;
  for (const auto& t : a.terms()) {
    RatFun dc = t.c.derivation(image);
    if (!dc.is_zero()) acc.push_back({t.mon, std::move(dc)});

    // Odd part: shift each factor in place; the canonical position of
    // the shifted factor gives the permutation sign.
    for (std::size_t pos = 0; pos < t.mon.size(); ++pos) {
      unsigned ovar = sp->odd_index_of(t.mon[pos]);
      auto s = sp->shift_rank(sp->odd_rank_of(t.mon[pos]), lambda);
      if (!s)
        throw OrderExceeded(sp->spec().odd[ovar], sp->total_order() + 1);
      std::uint32_t nid = sp->odd_id(ovar, *s);
      OddMon m(t.mon);
      m.erase(m.begin() + pos);
      if (std::binary_search(m.begin(), m.end(), nid)) continue;
      auto it = std::lower_bound(m.begin(), m.end(), nid);
      std::size_t q = it - m.begin();
      m.insert(it, nid);
      RatFun c = (q - pos) % 2 == 0 ? t.c : -t.c;
      acc.push_back({std::move(m), std::move(c)});
    }
  }
  return Expr::make(sp, std::move(acc));
}

}  // namespace

Expr total_derivative(const Expr& a, unsigned lambda, unsigned k) {
  Expr r = a;
  for (unsigned i = 0; i < k; ++i) r = total_derivative_once(r, lambda);
  return r;
}

Expr total_derivative(const Expr& a, const std::string& indep_name,
                      unsigned k) {
  const auto& names = a.space()->spec().indep;
  auto it = std::find(names.begin(), names.end(), indep_name);
  if (it == names.end())
    throw UnknownAtom("unknown independent variable '" + indep_name + "'");
  return total_derivative(a, static_cast<unsigned>(it - names.begin()), k);
}

Expr total_derivative(const Expr& a, const MultiIndex& mi) {
  Expr r = a;
  for (unsigned l = 0; l < mi.size(); ++l)
    if (mi[l] > 0) r = total_derivative(r, l, mi[l]);
  return r;
}

std::map<Atom, Expr> prolong(const std::map<std::string, Expr>& bindings,
                             unsigned max_order) {
  std::map<Atom, Expr> out;
  for (const auto& [name, f] : bindings) {
    const SpaceP& sp = f.space();
    const auto& deps = sp->spec().dep;
    auto it = std::find(deps.begin(), deps.end(), name);
    if (it == deps.end())
      throw UnknownAtom("'" + name + "' is not a dependent variable");
    unsigned dep = static_cast<unsigned>(it - deps.begin());
    if (max_order > sp->total_order())
      throw OrderExceeded(name, max_order);
    // Walk ranks in graded order so a parent of one derivative less is
    // always available.
    std::vector<Expr> by_rank(sp->n_ranks(), Expr::zero(sp));
    for (unsigned r = 0; r < sp->n_ranks(); ++r) {
      const MultiIndex& mi = sp->mindex(r);
      unsigned o = mi_order(mi);
      if (o > max_order) continue;
      if (o == 0) {
        by_rank[r] = f;
      } else {
        unsigned l = 0;
        while (mi[l] == 0) ++l;
        MultiIndex parent = mi;
        --parent[l];
        by_rank[r] = total_derivative(by_rank[*sp->rank(parent)], l);
      }
      out.emplace(Atom::even_jet(dep, mi), by_rank[r]);
    }
  }
  return out;
}

}  // namespace hamop
