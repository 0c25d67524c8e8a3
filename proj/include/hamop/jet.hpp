#ifndef HAMOP_JET_HPP
#define HAMOP_JET_HPP

#include <string>

#include "hamop/expr.hpp"

namespace hamop {

/// k-fold total derivative along the lambda-th independent variable.
/// Acts as an even derivation: explicit dependence on the independent
/// variable plus the shift of every jet coordinate of either parity.
/// Throws OrderExceeded when a jet past the truncation order would be
/// produced with a nonzero coefficient.
Expr total_derivative(const Expr& a, unsigned lambda, unsigned k = 1);
Expr total_derivative(const Expr& a, const std::string& indep_name,
                      unsigned k = 1);

/// Composite total derivative with one factor per independent variable.
Expr total_derivative(const Expr& a, const MultiIndex& mi);

/// Extends bindings of dependent variables to their derivative
/// coordinates up to the given order by repeated total derivatives.
/// Keys of the result are jet atoms of the bound variables.
std::map<Atom, Expr> prolong(const std::map<std::string, Expr>& bindings,
                             unsigned max_order);

}  // namespace hamop

#endif  // HAMOP_JET_HPP
