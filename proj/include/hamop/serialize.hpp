#ifndef HAMOP_SERIALIZE_HPP
#define HAMOP_SERIALIZE_HPP

#include <string>

#include "hamop/operators.hpp"
#include "hamop/varcalc.hpp"

namespace hamop {

enum class Format { Text, Json };

/// Text form of an expression in the grammar of parse_expr; parsing
/// the result reproduces the expression exactly (canonical forms are
/// unique, so the roundtrip is the identity).
std::string to_text(const Expr& e);
/// One-line "(comp1, comp2, ...)" form.
std::string to_text(const Superfun& s);
/// One line per matrix entry, coefficients times d<indep> powers.
std::string to_text(const CDiffOp& a);
/// Bracketed lists "{{even...},{odd...}}".
std::string to_text(const EulerResult& r);

/// Structured form: expression terms are (numerator, denominator,
/// odd-factor list) triples; polynomials are coefficient/monomial
/// pairs in canonical order; every derivative multi-index appears as
/// a count map keyed by independent-variable name. Object keys are
/// emitted in sorted order, so equal values serialize to equal bytes.
std::string to_json(const Expr& e);
std::string to_json(const Superfun& s);
std::string to_json(const CDiffOp& a);
std::string to_json(const EulerResult& r);

std::string serialize(const Expr& e, Format f);
std::string serialize(const Superfun& s, Format f);
std::string serialize(const CDiffOp& a, Format f);
std::string serialize(const EulerResult& r, Format f);

}  // namespace hamop

#endif  // HAMOP_SERIALIZE_HPP
