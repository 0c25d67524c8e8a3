#ifndef HAMOP_DETAIL_MODGCD_HPP
#define HAMOP_DETAIL_MODGCD_HPP

#include "hamop/poly.hpp"

namespace hamop::detail {

/// Sparse modular gcd (evaluation + interpolation over a word-sized
/// prime field). Inputs must be nonzero primitive integer polynomials.
/// On success writes a primitive candidate with positive leading
/// coefficient that has been verified by exact trial division of both
/// inputs. A false return means the routine was inconclusive (unlucky
/// evaluation points, coefficient overflow, degree disagreement) and
/// the caller should fall back to another method.
bool modular_gcd(const Poly& a, const Poly& b, Poly& out);

/// Exact-division check shared with the gcd verifiers; the quotient is
/// written only on success.
bool try_divide_exact(const Poly& a, const Poly& b, Poly& q);

}  // namespace hamop::detail

#endif  // HAMOP_DETAIL_MODGCD_HPP
