#ifndef HAMOP_SCHOUTEN_HPP
#define HAMOP_SCHOUTEN_HPP

#include <map>
#include <string>
#include <vector>

#include "hamop/matrix.hpp"
#include "hamop/operators.hpp"
#include "hamop/varcalc.hpp"

namespace hamop {

/// Variational Schouten bracket of two parity-homogeneous densities,
/// paired through the odd coordinates: with s = (deg f + 1)(deg h + 1),
///
///   [f, h] = sum_i ( dh/du^i * df/dp_i - (-1)^s df/du^i * dh/dp_i )
///
/// where d/du, d/dp are variational derivatives. The result represents
/// the bracket up to total divergence. Requires one odd variable per
/// dependent variable; components run in parallel.
Expr schouten_bracket(const Expr& f, const Expr& h);
/// Single-threaded reference implementation of the same computation.
Expr schouten_bracket_serial(const Expr& f, const Expr& h);

/// Zero test in cohomology: the bracket vanishes as a functional iff
/// every component of its Euler operator vanishes identically.
struct BracketZero {
  bool zero = false;
  Expr representative;  // the raw bracket density
  EulerResult euler;
};
BracketZero iszero_schouten_bracket(const Expr& f, const Expr& h);

/// Lie derivative along a vector field encoded as a degree-1 density
/// tau = sum_i tau^i p_i; equals the bracket [tau, h]. The Superfun
/// overload sums the components first.
Expr lie_derivative(const Expr& tau, const Expr& h);
Expr lie_derivative(const Superfun& tau, const Expr& h);

/// Degree-2 density of an operator: sum_i p_i * (row i applied to the
/// undifferentiated odd coordinates).
Expr operator_bivector(const CDiffOp& a);

/// Flow components A(delta H / delta u) of a Hamiltonian density.
std::vector<Expr> hamiltonian_flow(const CDiffOp& a, const Expr& h);

/// Poisson bracket density {h, f} = sum_i dh/du^i * A(df/du)^i,
/// defined modulo total divergence.
Expr poisson_bracket(const Expr& h, const Expr& f, const CDiffOp& a);

/// Formal compatibility residual l_F o A + A o l_F* of an evolution
/// equation characteristic F with an operator A; zero means A maps
/// cosymmetries to symmetries of the equation.
CDiffOp check_operator_equation(const std::vector<Expr>& f, const CDiffOp& a);

/// True when the formal adjoint of a square operator is its negative.
bool is_skew_adjoint(const CDiffOp& a);

/// Conjugation B = l_C o A o l_C* by the linearization of a vector of
/// differential functions C (a differential substitution).
CDiffOp transform_operator_differential(const CDiffOp& a,
                                        const std::vector<Expr>& c);

/// Transport of an operator under an invertible change of dependent
/// variables. `forward` maps each old dependent-variable name to its
/// expression in the coordinates of `new_space` (order-0 dependence
/// only, parameters and independent variables allowed); the result is
/// Jinv o A~ o Jinv^T where A~ carries the substituted coefficients and
/// J is the Jacobian of the forward map.
CDiffOp transform_operator_point(const CDiffOp& a,
                                 const std::map<std::string, Expr>& forward,
                                 const SpaceP& new_space);

}  // namespace hamop

#endif  // HAMOP_SCHOUTEN_HPP
