#include "hamop/ratfun.hpp"

#include <map>
#include <utility>

#include "hamop/errors.hpp"

namespace hamop {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den_.is_one() && !den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::div_exact(num_, g);
      den_ = Poly::div_exact(den_, g);
    }
  }
  normalize_den();
}

// Denominator sign and scale convention: primitive integer, positive
// leading coefficient; the rational scalar moves into the numerator.
void RatFun::normalize_den() {
  if (den_.is_one()) return;
  auto [c, p] = den_.rat_content();
  den_ = std::move(p);
  if (c != 1) num_ = num_.mul_scalar(Rat(1) / c);
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

/*
 * Sum of reduced fractions.
 *
 * Description:
 *   Classical scheme that keeps gcd operands small: with both inputs in
 *   lowest terms and d1 = gcd of the denominators, the sum over the
 *   common denominator needs no reduction at all when d1 = 1, and
 *   otherwise only t = a*(d/d1) + c*(b/d1) against d1 itself.
 */
RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  Poly d1 = Poly::gcd(den_, o.den_);
  RatFun r;
  if (d1.is_one()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  } else {
    Poly bg = Poly::div_exact(den_, d1);
    Poly dg = Poly::div_exact(o.den_, d1);
    Poly t = num_ * dg + o.num_ * bg;
    if (t.is_zero()) return RatFun();
    Poly d2 = Poly::gcd(t, d1);
    if (d2.is_one()) {
      r.num_ = std::move(t);
      r.den_ = den_ * dg;
    } else {
      r.num_ = Poly::div_exact(t, d2);
      r.den_ = bg * Poly::div_exact(o.den_, d2);
    }
  }
  r.normalize_den();
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

/*
 * Product of reduced fractions.
 *
 * Description:
 *   Cross-cancels gcd(a, d) and gcd(c, b) before multiplying; with both
 *   inputs in lowest terms the result then is too.
 */
RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  RatFun r;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ * o.num_;
    return r;  // product of polynomials needs no reduction
  }
  Poly g1 = o.den_.is_one() ? Poly::constant(1) : Poly::gcd(num_, o.den_);
  Poly g2 = den_.is_one() ? Poly::constant(1) : Poly::gcd(o.num_, den_);
  r.num_ = (g1.is_one() ? num_ : Poly::div_exact(num_, g1)) *
           (g2.is_one() ? o.num_ : Poly::div_exact(o.num_, g2));
  r.den_ = (g2.is_one() ? den_ : Poly::div_exact(den_, g2)) *
           (g1.is_one() ? o.den_ : Poly::div_exact(o.den_, g1));
  r.normalize_den();
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  if (is_zero()) return RatFun();
  return *this * o.inverse();
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize_den();
  return r;
}

RatFun RatFun::pow(int e) const {
  if (e == 0) return RatFun::constant(Rat(1));
  RatFun base = e < 0 ? inverse() : *this;
  unsigned k = e < 0 ? static_cast<unsigned>(-(long long)e)
                     : static_cast<unsigned>(e);
  // Reduced fractions stay reduced under powers.
  RatFun r;
  r.num_ = base.num_.pow(k);
  r.den_ = base.den_.pow(k);
  return r;
}

RatFun RatFun::derivative(VarId v) const {
  if (den_.is_one()) {
    RatFun r;
    r.num_ = num_.derivative(v);
    return r;
  }
  if (!den_.contains(v)) return RatFun(num_.derivative(v), den_);
  // (n/d)' = (n'*(d/g) - n*(d'/g)) / (d*(d/g)) with g = gcd(d, d'),
  // which keeps the final reduction on much smaller operands than the
  // quotient-rule form over d^2.
  Poly dd = den_.derivative(v);
  Poly g = Poly::gcd(den_, dd);
  Poly d1 = g.is_one() ? den_ : Poly::div_exact(den_, g);
  Poly t = num_.derivative(v) * d1 -
           num_ * (g.is_one() ? dd : Poly::div_exact(dd, g));
  return RatFun(std::move(t), den_ * d1);
}

RatFun RatFun::derivation(
    const std::function<Poly::DerivImage(VarId)>& image) const {
  Poly dn = num_.derivation(image);
  if (den_.is_one()) {
    RatFun r;
    r.num_ = std::move(dn);
    return r;
  }
  Poly dd = den_.derivation(image);
  if (dd.is_zero()) return RatFun(std::move(dn), den_);
  Poly g = Poly::gcd(den_, dd);
  Poly d1 = g.is_one() ? den_ : Poly::div_exact(den_, g);
  Poly t = dn * d1 - num_ * (g.is_one() ? dd : Poly::div_exact(dd, g));
  return RatFun(std::move(t), den_ * d1);
}

void RatFun::collect_vars(std::set<VarId>& out) const {
  num_.collect_vars(out);
  den_.collect_vars(out);
}

RatFun eval_poly(const Poly& p,
                 const std::function<const RatFun*(VarId)>& lookup) {
  RatFun acc;
  std::map<std::pair<VarId, unsigned>, RatFun> powers;
  for (const auto& [m, c] : p.terms()) {
    RatFun t = RatFun::constant(c);
    for (const auto& [v, e] : m.f) {
      const RatFun* bound = lookup(v);
      if (bound == nullptr) {
        t *= RatFun(Poly::variable(v, e));
        continue;
      }
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end())
        it = powers.emplace(key, bound->pow(static_cast<int>(e))).first;
      t *= it->second;
    }
    acc += t;
  }
  return acc;
}

}  // namespace hamop
