#ifndef HAMOP_POLY_HPP
#define HAMOP_POLY_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hamop {

using Int = mpz_class;
using Rat = mpq_class;
using VarId = std::uint32_t;

/// Power product of polynomial variables. Factors are kept sorted by
/// ascending variable id with strictly positive exponents; the empty
/// factor list is the monomial 1.
struct Monomial {
  using Factor = std::pair<VarId, unsigned>;
  std::vector<Factor> f;

  bool is_one() const { return f.empty(); }
  unsigned total_degree() const;
  unsigned degree(VarId v) const;
  bool contains(VarId v) const { return degree(v) > 0; }

  Monomial times(const Monomial& o) const;
  /// Exact division; returns false if o does not divide *this.
  bool divide(const Monomial& o, Monomial& out) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial var(VarId v, unsigned e = 1);

  /// Lexicographic comparison with lower variable ids taking priority.
  /// Returns -1, 0, or 1. This is an admissible monomial order: it is a
  /// total order with 1 minimal and it respects multiplication.
  static int cmp(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return f == o.f; }
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// strictly decreasing monomial order (leading term first) with nonzero
/// coefficients; the zero polynomial has no terms.
class Poly {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  static Poly variable(VarId v, unsigned e = 1);
  static Poly term(const Monomial& m, const Rat& c);

  bool is_zero() const { return ts_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial (zero polynomial gives 0).
  Rat constant_value() const;

  std::size_t size() const { return ts_.size(); }
  const std::vector<Term>& terms() const { return ts_; }
  const Term& leading() const { return ts_.front(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly mul_scalar(const Rat& c) const;
  Poly mul_monomial(const Monomial& m, const Rat& c) const;
  Poly pow(unsigned e) const;

  Poly derivative(VarId v) const;

  /// Image of a variable under a derivation: zero, the constant one, or
  /// a single other variable.
  struct DerivImage {
    enum Kind { Zero, One, Var } kind = Zero;
    VarId v = 0;
  };

  /// Applies the derivation determined by the variable images in a
  /// single pass: Σ over factors of e * (m / w) * image(w). This is the
  /// shape of a total derivative, where every jet variable maps to the
  /// next one and parameters map to zero.
  Poly derivation(const std::function<DerivImage(VarId)>& image) const;

  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  bool contains(VarId v) const;
  void collect_vars(std::set<VarId>& out) const;

  /// Largest monomial dividing every term (1 for the zero polynomial).
  Monomial monomial_content() const;

  /// Writes *this as c * p with p an integer polynomial whose
  /// coefficients have gcd 1 and whose leading coefficient is positive;
  /// the sign is carried by the rational c. The zero polynomial gives
  /// (1, 0).
  std::pair<Rat, Poly> rat_content() const;

  /// Content and primitive part with respect to variable v: gcd of the
  /// coefficient polynomials of the powers of v.
  Poly content_in(VarId v) const;

  /// Coefficients of the powers of v, index = exponent. The entries do
  /// not contain v. Returns {*this} when v is absent.
  std::vector<Poly> coeffs_in(VarId v) const;
  static Poly from_coeffs_in(VarId v, const std::vector<Poly>& cs);

  /// Primitive gcd: the result is an integer polynomial with coprime
  /// coefficients and positive leading coefficient (1 when the inputs
  /// are coprime); rational scalar content of the inputs is ignored.
  static Poly gcd(const Poly& a, const Poly& b);

  /// Exact division; the caller guarantees b | a.
  static Poly div_exact(const Poly& a, const Poly& b);

  bool operator==(const Poly& o) const { return ts_ == o.ts_; }

 private:
  std::vector<Term> ts_;
  static Poly from_sorted(std::vector<Term> ts);  // trusts invariants
  friend Poly normalize_terms(std::vector<Poly::Term> ts);
};

/// Sorts, merges and strips zero terms. Shared with RatFun internals.
Poly normalize_terms(std::vector<Poly::Term> ts);

}  // namespace hamop

#endif  // HAMOP_POLY_HPP
