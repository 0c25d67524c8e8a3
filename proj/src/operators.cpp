#include "hamop/operators.hpp"

#include "hamop/errors.hpp"
#include "hamop/jet.hpp"
#include "hamop/parallel.hpp"

namespace hamop {

Superfun::Superfun(unsigned deg, std::vector<Expr> cs)
    : degree(deg), comps(std::move(cs)) {
  if (comps.empty()) throw ShapeMismatch("superfunction needs a component");
  for (const auto& c : comps) {
    require_same_space(comps.front().space(), c.space());
    if (!c.odd_degree_is(deg))
      throw DegreeViolation(
          "superfunction component is not homogeneous of the declared degree");
  }
}

Superfun Superfun::operator+(const Superfun& o) const {
  if (degree != o.degree)
    throw DegreeViolation("adding superfunctions of different degree");
  if (size() != o.size()) throw ShapeMismatch("superfunction sizes differ");
  std::vector<Expr> cs;
  cs.reserve(comps.size());
  for (unsigned i = 0; i < size(); ++i) cs.push_back(comps[i] + o.comps[i]);
  return Superfun(degree, std::move(cs));
}

Superfun Superfun::operator-() const {
  std::vector<Expr> cs;
  cs.reserve(comps.size());
  for (const auto& c : comps) cs.push_back(-c);
  return Superfun(degree, std::move(cs));
}

bool Superfun::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

CDiffOp::CDiffOp(SpaceP sp, unsigned rows, unsigned cols)
    : sp_(std::move(sp)), rows_(rows), cols_(cols), e_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw ShapeMismatch("operator needs positive dimensions");
}

CDiffOp CDiffOp::identity(SpaceP sp, unsigned n) {
  CDiffOp a(sp, n, n);
  MultiIndex zero(sp->n_indep(), 0);
  for (unsigned i = 0; i < n; ++i)
    a.add(i, i, zero, Expr::constant(sp, Rat(1)));
  return a;
}

CDiffOp CDiffOp::derivative(SpaceP sp, unsigned n, unsigned lambda,
                            unsigned k) {
  if (lambda >= sp->n_indep())
    throw UnknownAtom("independent variable index out of range");
  CDiffOp a(sp, n, n);
  MultiIndex mi(sp->n_indep(), 0);
  mi[lambda] = k;
  for (unsigned i = 0; i < n; ++i)
    a.add(i, i, mi, Expr::constant(sp, Rat(1)));
  return a;
}

CDiffOp CDiffOp::mult(SpaceP sp, const std::vector<std::vector<Expr>>& m) {
  if (m.empty() || m[0].empty())
    throw ShapeMismatch("multiplication operator needs entries");
  CDiffOp a(sp, (unsigned)m.size(), (unsigned)m[0].size());
  MultiIndex zero(sp->n_indep(), 0);
  for (unsigned i = 0; i < a.rows(); ++i) {
    if (m[i].size() != m[0].size())
      throw ShapeMismatch("ragged coefficient matrix");
    for (unsigned j = 0; j < a.cols(); ++j) a.add(i, j, zero, m[i][j]);
  }
  return a;
}

void CDiffOp::add(unsigned i, unsigned j, const MultiIndex& mi,
                  const Expr& c) {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("entry index out of range");
  require_same_space(sp_, c.space());
  if (!c.is_even_function())
    throw ParityViolation("operator coefficient has odd factors");
  if (mi.size() != sp_->n_indep())
    throw ShapeMismatch("multi-index length does not match the space");
  if (!sp_->rank(mi)) {
    // The entry would differentiate its argument beyond the truncation.
    std::string var = j < sp_->n_odd() ? sp_->spec().odd[j]
                      : j < sp_->n_dep() ? sp_->spec().dep[j]
                                         : sp_->spec().indep[0];
    throw OrderExceeded(var, mi_order(mi));
  }
  if (c.is_zero()) return;
  Entry& e = e_[i * cols_ + j];
  auto it = e.find(mi);
  if (it == e.end()) {
    e.emplace(mi, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

Expr CDiffOp::coefficient(unsigned i, unsigned j, const MultiIndex& mi) const {
  const Entry& e = entry(i, j);
  auto it = e.find(mi);
  return it == e.end() ? Expr::zero(sp_) : it->second;
}

std::vector<Expr> CDiffOp::apply(const std::vector<Expr>& psi) const {
  if (psi.size() != cols_)
    throw ShapeMismatch("argument count does not match operator columns");
  for (const auto& p : psi) require_same_space(sp_, p.space());
  std::vector<Expr> out(rows_, Expr::zero(sp_));
  // Derivatives of the arguments are shared across rows.
  std::map<std::pair<unsigned, MultiIndex>, Expr> dpsi;
  for (unsigned j = 0; j < cols_; ++j)
    for (unsigned i = 0; i < rows_; ++i)
      for (const auto& [mi, c] : entry(i, j)) {
        auto key = std::make_pair(j, mi);
        auto it = dpsi.find(key);
        if (it == dpsi.end())
          it = dpsi.emplace(key, total_derivative(psi[j], mi)).first;
        out[i] += c * it->second;
      }
  return out;
}

namespace {

unsigned long binom(unsigned n, unsigned k) {
  unsigned long r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Enumerates sub-multi-indices s <= mi with the product of per-variable
// binomial coefficients (the coefficient in the iterated Leibniz rule).
void for_each_submindex(
    const MultiIndex& mi,
    const std::function<void(const MultiIndex&, unsigned long)>& fn) {
  MultiIndex s(mi.size(), 0);
  std::function<void(unsigned, unsigned long)> rec = [&](unsigned pos,
                                                         unsigned long c) {
    if (pos == mi.size()) {
      fn(s, c);
      return;
    }
    for (unsigned k = 0; k <= mi[pos]; ++k) {
      s[pos] = k;
      rec(pos + 1, c * binom(mi[pos], k));
    }
    s[pos] = 0;
  };
  rec(0, 1);
}

}  // namespace

CDiffOp CDiffOp::compose(const CDiffOp& o) const {
  require_same_space(sp_, o.sp_);
  if (cols_ != o.rows_)
    throw ShapeMismatch("operator dimensions do not compose");
  CDiffOp r(sp_, rows_, o.cols_);
  std::vector<CDiffOp> rowacc(rows_, CDiffOp(sp_, 1, o.cols_));
  parallel_for(rows_, [&](std::size_t i) {
    for (unsigned j = 0; j < cols_; ++j) {
      for (const auto& [mi, a] : entry((unsigned)i, j)) {
        for (unsigned k = 0; k < o.cols_; ++k) {
          for (const auto& [tau, b] : o.entry(j, k)) {
            for_each_submindex(
                mi, [&, &ta = tau, &cb = b, &ca = a](const MultiIndex& s,
                                                     unsigned long c) {
                  // d_mi(b d_tau) contributes C(mi,s) d_s(b) d_{mi-s+tau}
                  Expr db = ca * total_derivative(cb, s);
                  if (db.is_zero()) return;
                  if (c != 1) db = db.mul_scalar(Rat(c));
                  MultiIndex rest(mi.size());
                  for (unsigned l = 0; l < mi.size(); ++l)
                    rest[l] = mi[l] - s[l] + ta[l];
                  rowacc[i].add(0, k, rest, db);
                });
          }
        }
      }
    }
  });
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < o.cols_; ++k)
      for (const auto& [mi, c] : rowacc[i].entry(0, k)) r.add(i, k, mi, c);
  return r;
}

CDiffOp CDiffOp::operator+(const CDiffOp& o) const {
  require_same_space(sp_, o.sp_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ShapeMismatch("operator dimensions differ");
  CDiffOp r(*this);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      for (const auto& [mi, c] : o.entry(i, j)) r.add(i, j, mi, c);
  return r;
}

CDiffOp CDiffOp::operator-() const {
  CDiffOp r(*this);
  for (auto& e : r.e_)
    for (auto& [mi, c] : e) c = -c;
  return r;
}

CDiffOp CDiffOp::scale(const Rat& q) const {
  CDiffOp r(sp_, rows_, cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      for (const auto& [mi, c] : entry(i, j))
        r.add(i, j, mi, c.mul_scalar(q));
  return r;
}

bool CDiffOp::is_zero() const {
  for (const auto& e : e_)
    if (!e.empty()) return false;
  return true;
}

bool CDiffOp::operator==(const CDiffOp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (sp_ != o.sp_ && !(sp_ && o.sp_ && sp_->same(*o.sp_))) return false;
  return e_ == o.e_;
}

Superfun op_to_superfun(const CDiffOp& a) {
  const SpaceP& sp = a.space();
  if (a.cols() != sp->n_odd())
    throw ShapeMismatch(
        "operator columns must match the odd variables of the space");
  std::vector<Expr> comps;
  comps.reserve(a.rows());
  for (unsigned i = 0; i < a.rows(); ++i) {
    Expr acc = Expr::zero(sp);
    for (unsigned j = 0; j < a.cols(); ++j)
      for (const auto& [mi, c] : a.entry(i, j))
        acc += c * Expr::atom(sp, Atom::odd_jet(j, mi));
    comps.push_back(std::move(acc));
  }
  return Superfun(1, std::move(comps));
}

CDiffOp superfun_to_op(const Superfun& s) {
  if (s.degree != 1)
    throw DegreeViolation("only degree-1 superfunctions encode operators");
  const SpaceP& sp = s.space();
  CDiffOp a(sp, s.size(), sp->n_odd());
  for (unsigned i = 0; i < s.size(); ++i) {
    for (const auto& t : s.comps[i].terms()) {
      if (t.mon.size() != 1)
        throw DegreeViolation("term is not linear in the odd coordinates");
      Atom oa = sp->odd_atom(t.mon[0]);
      a.add(i, oa.index, oa.mi, Expr::from_ratfun(sp, t.c));
    }
  }
  return a;
}

Expr superfun_to_multivector(const Superfun& s) {
  const SpaceP& sp = s.space();
  if (s.size() != sp->n_odd())
    throw ShapeMismatch(
        "component count must match the odd variables of the space");
  Expr acc = Expr::zero(sp);
  MultiIndex zero(sp->n_indep(), 0);
  for (unsigned i = 0; i < s.size(); ++i)
    acc += Expr::atom(sp, Atom::odd_jet(i, zero)) * s.comps[i];
  return acc;
}

}  // namespace hamop
