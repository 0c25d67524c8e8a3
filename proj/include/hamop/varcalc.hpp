#ifndef HAMOP_VARCALC_HPP
#define HAMOP_VARCALC_HPP

#include <string>
#include <vector>

#include "hamop/operators.hpp"

namespace hamop {

/// Variational derivative of f by one dependent variable of either
/// parity: the alternating sum of total derivatives of the partials by
/// the jets of that variable. var must be an order-zero jet atom.
Expr variational_derivative(const Expr& f, const Atom& var);
Expr variational_derivative(const Expr& f, const std::string& var_name);

/// Variational derivatives by every even and odd dependent variable,
/// in declaration order.
struct EulerResult {
  std::vector<Expr> even;
  std::vector<Expr> odd;
  bool all_zero() const;
};

EulerResult euler_df(const Expr& f);
/// Serial reference for euler_df; same contract, no worker threads.
EulerResult euler_df_serial(const Expr& f);

/// True when every variational derivative of f vanishes, i.e. f is a
/// total divergence in the truncated setting.
bool is_total_divergence(const Expr& f);

/// Linearization of a vector function: component k collects the
/// partials by each jet coordinate times the matching odd jet. Needs
/// as many odd variables as dependent ones.
Superfun linearize(const std::vector<Expr>& f);

/// Formal adjoint of a degree-1 superfunction (a matrix operator in
/// disguise): signs and total derivatives moved onto the coefficients.
Superfun adjoint(const Superfun& l);

/// Decomposition by odd monomials: one entry per distinct monomial in
/// canonical order, the empty monomial (purely even part) first.
struct OddBlock {
  std::vector<Atom> factors;
  Expr coeff;
};
std::vector<OddBlock> splitext(const Expr& f);

/// Decomposition of the numerator of an even function by monomials in
/// the listed coordinates, highest monomial first; the denominator is
/// reported separately and must not contain the coordinates.
struct SplitVars {
  std::vector<std::pair<Expr, Expr>> parts;  // (monomial, coefficient)
  Expr denominator;
};
SplitVars splitvars(const Expr& f, const std::vector<Atom>& coords);

}  // namespace hamop

#endif  // HAMOP_VARCALC_HPP
