#ifndef HAMOP_PARSER_HPP
#define HAMOP_PARSER_HPP

#include <map>
#include <string>

#include "hamop/expr.hpp"

namespace hamop {

/// Parses a coordinate name over a space. Derivative names have the
/// form <var>_<spec> with <spec> a concatenation of [count]<indep>
/// groups in the declaration order of the independent variables
/// (u, u_x, u_2x, u_t2x). Throws SyntaxError for malformed or
/// out-of-order suffixes (with a fix-it hint in the canonical
/// spelling), UnknownName for an undeclared base name, and
/// OrderExceeded when the requested jet lies past the truncation
/// order.
Atom parse_atom(const std::string& name, const SpaceP& sp);

/// Spells an atom in the grammar accepted by parse_atom.
std::string atom_name(const Atom& a, const Space& sp);

/// Parses an expression over a space.
///
/// Grammar:  sum of products of factors; operators + - * / ^ with
/// integer exponents and parentheses; atoms are coordinate names per
/// parse_atom and nonnegative integer literals. A name bound in `env`
/// stands for its expression. Products involving odd coordinates are
/// graded. Division and negative powers require even divisors.
///
/// Errors: SyntaxError (carries the byte offset), UnknownName,
/// OrderExceeded, and the arithmetic errors of Expr.
Expr parse_expr(const std::string& text, const SpaceP& sp,
                const std::map<std::string, Expr>* env = nullptr);

}  // namespace hamop

#endif  // HAMOP_PARSER_HPP
