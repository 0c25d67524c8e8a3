#include "hamop/expr.hpp"

#include <algorithm>

#include "hamop/errors.hpp"

namespace hamop {

int cmp_oddmon(const OddMon& a, const OddMon& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int merge_oddmon(const OddMon& a, const OddMon& b, OddMon& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] moves past the remaining factors of a.
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return sign;
}

Expr Expr::constant(SpaceP sp, const Rat& c) {
  return from_ratfun(std::move(sp), RatFun::constant(c));
}

Expr Expr::from_ratfun(SpaceP sp, RatFun c) {
  Expr e(std::move(sp));
  if (!c.is_zero()) e.ts_.push_back({OddMon{}, std::move(c)});
  return e;
}

Expr Expr::atom(SpaceP sp, const Atom& a) {
  Expr e(sp);
  if (a.kind == AtomKind::OddJet) {
    e.ts_.push_back({OddMon{sp->odd_id(a)}, RatFun::constant(Rat(1))});
  } else {
    e.ts_.push_back({OddMon{}, RatFun::variable(sp->even_id(a))});
  }
  return e;
}

Expr Expr::make(SpaceP sp, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return cmp_oddmon(a.mon, b.mon) < 0;
  });
  Expr e(std::move(sp));
  for (auto& t : ts) {
    if (t.c.is_zero()) continue;
    if (!e.ts_.empty() && e.ts_.back().mon == t.mon) {
      e.ts_.back().c += t.c;
      if (e.ts_.back().c.is_zero()) e.ts_.pop_back();
    } else {
      e.ts_.push_back(std::move(t));
    }
  }
  return e;
}

Expr Expr::operator-() const {
  Expr r(*this);
  for (auto& t : r.ts_) t.c = -t.c;
  return r;
}

Expr Expr::operator+(const Expr& o) const {
  require_same_space(sp_, o.sp_);
  Expr r(sp_);
  r.ts_.reserve(ts_.size() + o.ts_.size());
  std::size_t i = 0, j = 0;
  while (i < ts_.size() && j < o.ts_.size()) {
    int c = cmp_oddmon(ts_[i].mon, o.ts_[j].mon);
    if (c < 0) {
      r.ts_.push_back(ts_[i++]);
    } else if (c > 0) {
      r.ts_.push_back(o.ts_[j++]);
    } else {
      RatFun s = ts_[i].c + o.ts_[j].c;
      if (!s.is_zero()) r.ts_.push_back({ts_[i].mon, std::move(s)});
      ++i, ++j;
    }
  }
  r.ts_.insert(r.ts_.end(), ts_.begin() + i, ts_.end());
  r.ts_.insert(r.ts_.end(), o.ts_.begin() + j, o.ts_.end());
  return r;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
  require_same_space(sp_, o.sp_);
  std::vector<Term> acc;
  acc.reserve(ts_.size() * o.ts_.size());
  OddMon m;
  for (const auto& a : ts_) {
    for (const auto& b : o.ts_) {
      int sign = merge_oddmon(a.mon, b.mon, m);
      if (sign == 0) continue;
      RatFun c = a.c * b.c;
      if (sign < 0) c = -c;
      acc.push_back({m, std::move(c)});
    }
  }
  return make(sp_, std::move(acc));
}

Expr Expr::operator/(const Expr& o) const {
  require_same_space(sp_, o.sp_);
  if (!o.is_even_function())
    throw ParityViolation("division by an expression with odd factors");
  if (o.is_zero()) throw DivisionByZero("division by zero expression");
  RatFun inv = o.even_coefficient().inverse();
  Expr r(*this);
  for (auto& t : r.ts_) t.c *= inv;
  return r;
}

Expr Expr::mul_scalar(const Rat& c) const {
  if (sgn(c) == 0) return Expr(sp_);
  Expr r(*this);
  for (auto& t : r.ts_) t.c *= RatFun::constant(c);
  return r;
}

Expr Expr::pow(int e) const {
  if (e < 0) {
    if (!is_even_function())
      throw ParityViolation("negative power of an expression with odd factors");
    return from_ratfun(sp_, ratfun().pow(e));
  }
  Expr r = constant(sp_, Rat(1));
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Parity Expr::parity() const {
  bool even = false, odd = false;
  for (const auto& t : ts_) (t.mon.size() % 2 == 0 ? even : odd) = true;
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

bool Expr::is_even_function() const {
  for (const auto& t : ts_)
    if (!t.mon.empty()) return false;
  return true;
}

bool Expr::odd_degree_is(unsigned deg) const {
  for (const auto& t : ts_)
    if (t.mon.size() != deg) return false;
  return true;
}

Expr Expr::partial(const Atom& a) const {
  if (a.kind == AtomKind::OddJet) {
    std::uint32_t id = sp_->odd_id(a);
    Expr r(sp_);
    for (const auto& t : ts_) {
      auto it = std::find(t.mon.begin(), t.mon.end(), id);
      if (it == t.mon.end()) continue;
      std::size_t pos = it - t.mon.begin();
      OddMon m(t.mon.begin(), it);
      m.insert(m.end(), it + 1, t.mon.end());
      RatFun c = pos % 2 == 0 ? t.c : -t.c;
      r.ts_.push_back({std::move(m), std::move(c)});
    }
    // Removing one fixed id preserves the canonical term order.
    return r;
  }
  VarId v = sp_->even_id(a);
  Expr r(sp_);
  for (const auto& t : ts_) {
    RatFun d = t.c.derivative(v);
    if (!d.is_zero()) r.ts_.push_back({t.mon, std::move(d)});
  }
  return r;
}

RatFun Expr::even_coefficient() const {
  if (!ts_.empty() && ts_[0].mon.empty()) return ts_[0].c;
  return RatFun();
}

RatFun Expr::ratfun() const {
  if (!is_even_function())
    throw ParityViolation("expression has odd factors");
  return even_coefficient();
}

void Expr::collect_even_vars(std::set<VarId>& out) const {
  for (const auto& t : ts_) t.c.collect_vars(out);
}

void Expr::collect_odd_ids(std::set<std::uint32_t>& out) const {
  for (const auto& t : ts_) out.insert(t.mon.begin(), t.mon.end());
}

Expr Expr::substitute(const std::map<Atom, Expr>& bindings) const {
  std::map<VarId, RatFun> even;
  std::map<std::uint32_t, const Expr*> odd;
  for (const auto& [key, value] : bindings) {
    require_same_space(sp_, value.space());
    if (key.kind == AtomKind::OddJet) {
      if (!value.is_zero() && value.parity() != Parity::Odd)
        throw ParityViolation("odd coordinate bound to a non-odd expression");
      odd[sp_->odd_id(key)] = &value;
    } else {
      if (!value.is_even_function())
        throw ParityViolation(
            "even coordinate bound to an expression with odd factors");
      even[sp_->even_id(key)] = value.even_coefficient();
    }
  }
  auto lookup = [&](VarId v) -> const RatFun* {
    auto it = even.find(v);
    return it == even.end() ? nullptr : &it->second;
  };
  Expr result(sp_);
  for (const auto& t : ts_) {
    RatFun num = eval_poly(t.c.num(), lookup);
    RatFun den = eval_poly(t.c.den(), lookup);
    if (den.is_zero())
      throw DivisionByZero("substitution makes a denominator vanish");
    Expr acc = from_ratfun(sp_, num / den);
    for (std::uint32_t id : t.mon) {
      auto it = odd.find(id);
      if (it == odd.end()) {
        Expr f(sp_);
        f.ts_.push_back({OddMon{id}, RatFun::constant(Rat(1))});
        acc *= f;
      } else {
        acc *= *it->second;
      }
      if (acc.is_zero()) break;
    }
    result += acc;
  }
  return result;
}

bool Expr::operator==(const Expr& o) const {
  if (sp_ != o.sp_ && !(sp_ && o.sp_ && sp_->same(*o.sp_))) return false;
  return ts_ == o.ts_;
}

}  // namespace hamop
