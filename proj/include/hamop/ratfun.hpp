#ifndef HAMOP_RATFUN_HPP
#define HAMOP_RATFUN_HPP

#include <functional>

#include "hamop/poly.hpp"

namespace hamop {

/// Reduced fraction of multivariate polynomials. Invariants: the
/// denominator is a nonzero primitive integer polynomial with positive
/// leading coefficient, and numerator and denominator have no common
/// factor. Equality of canonical forms is structural equality.
class RatFun {
 public:
  RatFun() = default;  // zero
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly num) : RatFun(std::move(num), Poly::constant(1)) {}
  static RatFun constant(const Rat& c) { return RatFun(Poly::constant(c)); }
  static RatFun variable(VarId v) { return RatFun(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rat constant_value() const { return num_.constant_value(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;  // throws DivisionByZero
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun inverse() const;
  RatFun pow(int e) const;

  RatFun derivative(VarId v) const;

  /// Derivation extended from Poly::derivation by one quotient rule:
  /// (n/d)' = (n'*(d/g) - n*(d'/g)) / (d*(d/g)) with g = gcd(d, d').
  /// Much cheaper than summing per-variable derivatives.
  RatFun derivation(const std::function<Poly::DerivImage(VarId)>& image) const;

  bool contains(VarId v) const { return num_.contains(v) || den_.contains(v); }
  void collect_vars(std::set<VarId>& out) const;

  /// Value equality: the structural comparison is the fast path, with a
  /// cross-multiplication fallback so the answer never depends on the
  /// representation.
  bool operator==(const RatFun& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    if (num_.is_zero() || o.num_.is_zero()) return false;
    return num_ * o.den_ == o.num_ * den_;
  }

 private:
  Poly num_;
  Poly den_ = Poly::constant(1);
  void reduce();
  void normalize_den();
};

/// Evaluates p with every variable replaced through lookup; a null
/// return keeps the variable itself. Used for substitution.
RatFun eval_poly(const Poly& p,
                 const std::function<const RatFun*(VarId)>& lookup);

}  // namespace hamop

#endif  // HAMOP_RATFUN_HPP
