#ifndef HAMOP_EXPR_HPP
#define HAMOP_EXPR_HPP

#include <cstdint>
#include <map>

#include "hamop/ratfun.hpp"
#include "hamop/space.hpp"

namespace hamop {

/// Product of distinct odd coordinates, stored as strictly increasing
/// ids; the empty product is 1. The id order is the canonical factor
/// order, so permutation signs are absorbed when terms are built.
using OddMon = std::vector<std::uint32_t>;

enum class Parity { Even, Odd, Mixed };

/// Canonical-form expression on a jet space: a sum of terms, each a
/// rational function of the even coordinates times an odd monomial.
/// Terms are sorted (shorter odd monomials first, then by factor ids)
/// and zero coefficients are dropped, so equality is structural and
/// zero is the empty sum. All operations are pure.
class Expr {
 public:
  struct Term {
    OddMon mon;
    RatFun c;
    bool operator==(const Term&) const = default;
  };

  explicit Expr(SpaceP sp) : sp_(std::move(sp)) {}
  static Expr zero(SpaceP sp) { return Expr(std::move(sp)); }
  static Expr constant(SpaceP sp, const Rat& c);
  static Expr atom(SpaceP sp, const Atom& a);
  static Expr from_ratfun(SpaceP sp, RatFun c);
  /// Canonicalizes arbitrary terms (sorts, merges, strips zeros).
  static Expr make(SpaceP sp, std::vector<Term> ts);

  const SpaceP& space() const { return sp_; }
  const std::vector<Term>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }

  Expr operator-() const;
  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator*(const Expr& o) const;  // graded product
  /// Division by an expression without odd factors.
  Expr operator/(const Expr& o) const;
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr mul_scalar(const Rat& c) const;
  Expr pow(int e) const;

  Parity parity() const;
  /// True when no term carries an odd factor.
  bool is_even_function() const;
  /// True when every term has exactly deg odd factors (zero passes).
  bool odd_degree_is(unsigned deg) const;

  /// Left partial derivative by one coordinate. For an odd coordinate
  /// in position k of a monomial the term picks up the sign (-1)^k.
  Expr partial(const Atom& a) const;

  /// Simultaneous substitution. Even coordinates must be bound to
  /// expressions without odd factors, odd coordinates to odd-parity
  /// expressions; bindings do not cascade.
  Expr substitute(const std::map<Atom, Expr>& bindings) const;

  /// The coefficient of the empty odd monomial.
  RatFun even_coefficient() const;
  /// Whole expression as a rational function; requires no odd factors.
  RatFun ratfun() const;

  void collect_even_vars(std::set<VarId>& out) const;
  void collect_odd_ids(std::set<std::uint32_t>& out) const;

  bool operator==(const Expr& o) const;

 private:
  SpaceP sp_;
  std::vector<Term> ts_;
};

/// Merge of two strictly increasing id lists with the permutation
/// sign; returns 0 as sign when a factor repeats (the product is 0).
int merge_oddmon(const OddMon& a, const OddMon& b, OddMon& out);

/// Three-way order used for the canonical term sequence.
int cmp_oddmon(const OddMon& a, const OddMon& b);

}  // namespace hamop

#endif  // HAMOP_EXPR_HPP
