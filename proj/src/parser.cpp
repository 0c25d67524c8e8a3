#include "hamop/parser.hpp"

#include <cctype>

#include "hamop/errors.hpp"

namespace hamop {

namespace {

bool is_ident_start(char c) { return std::isalpha((unsigned char)c); }
bool is_ident_char(char c) {
  return std::isalnum((unsigned char)c) || c == '_';
}

// Index of name in list, or -1.
int find_name(const std::vector<std::string>& list, const std::string& s) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == s) return (int)i;
  return -1;
}

// Parses the derivative suffix of a jet name into a multi-index.
// offset points at the suffix inside the full token for error
// positions; base is the variable name for diagnostics.
MultiIndex parse_suffix(const std::string& spec, const SpaceP& sp,
                        const std::string& base, std::size_t offset) {
  const auto& indep = sp->spec().indep;
  MultiIndex mi(indep.size(), 0);
  int last = -1;
  bool out_of_order = false;
  std::size_t i = 0;
  if (spec.empty())
    throw SyntaxError("empty derivative suffix after '" + base + "_'", offset);
  while (i < spec.size()) {
    std::size_t group = i;
    unsigned long count = 1;
    if (std::isdigit((unsigned char)spec[i])) {
      count = 0;
      while (i < spec.size() && std::isdigit((unsigned char)spec[i])) {
        count = count * 10 + (unsigned long)(spec[i] - '0');
        if (count > 1000000)
          throw SyntaxError("derivative count too large", offset + group);
        ++i;
      }
      if (count == 0)
        throw SyntaxError("derivative count must be positive", offset + group);
    }
    // Longest declared independent-variable name at this position.
    int var = -1;
    std::size_t len = 0;
    for (std::size_t v = 0; v < indep.size(); ++v) {
      const std::string& n = indep[v];
      if (n.size() > len && spec.compare(i, n.size(), n) == 0) {
        var = (int)v;
        len = n.size();
      }
    }
    if (var < 0)
      throw SyntaxError("unknown independent variable in derivative suffix of '" +
                            base + "_" + spec + "'",
                        offset + i);
    if (var <= last) out_of_order = true;
    last = std::max(last, var);
    mi[(std::size_t)var] += (unsigned)count;
    i += len;
  }
  if (out_of_order) {
    // Canonical spelling: counts merged, variables in declaration order.
    std::string hint = base + "_";
    for (std::size_t l = 0; l < mi.size(); ++l) {
      if (mi[l] == 0) continue;
      if (mi[l] > 1) hint += std::to_string(mi[l]);
      hint += indep[l];
    }
    throw SyntaxError("derivative suffix of '" + base + "_" + spec +
                          "' lists independent variables out of declaration "
                          "order; write '" +
                          hint + "'",
                      offset);
  }
  return mi;
}

}  // namespace

Atom parse_atom(const std::string& name, const SpaceP& sp) {
  const SpaceSpec& spec = sp->spec();
  std::size_t us = name.find('_');
  std::string base = name.substr(0, us);
  int i;
  if (us == std::string::npos) {
    if ((i = find_name(spec.indep, base)) >= 0) return Atom::indep((unsigned)i);
    if ((i = find_name(spec.params, base)) >= 0) return Atom::param((unsigned)i);
    MultiIndex zero(spec.indep.size(), 0);
    if ((i = find_name(spec.dep, base)) >= 0)
      return Atom::even_jet((unsigned)i, zero);
    if ((i = find_name(spec.odd, base)) >= 0)
      return Atom::odd_jet((unsigned)i, zero);
    throw UnknownName("unknown name '" + base + "'");
  }
  std::string suffix = name.substr(us + 1);
  bool is_dep = (i = find_name(spec.dep, base)) >= 0;
  if (!is_dep) i = find_name(spec.odd, base);
  if (i < 0) {
    if (find_name(spec.indep, base) >= 0 || find_name(spec.params, base) >= 0)
      throw SyntaxError("'" + base +
                            "' is not a dependent variable and has no jet "
                            "coordinates",
                        0);
    throw UnknownName("unknown name '" + base + "' in '" + name + "'");
  }
  MultiIndex mi = parse_suffix(suffix, sp, base, us + 1);
  unsigned order = mi_order(mi);
  if (order > sp->total_order()) throw OrderExceeded(base, order);
  return is_dep ? Atom::even_jet((unsigned)i, std::move(mi))
                : Atom::odd_jet((unsigned)i, std::move(mi));
}

std::string atom_name(const Atom& a, const Space& sp) { return sp.name(a); }

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const SpaceP& sp,
             const std::map<std::string, Expr>* env)
      : s_(text), sp_(sp), env_(env) {}

  Expr run() {
    skip();
    if (i_ >= s_.size()) throw SyntaxError("empty expression", i_);
    Expr e = sum();
    skip();
    if (i_ < s_.size())
      throw SyntaxError("unexpected input after expression", i_);
    return e;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
  const SpaceP& sp_;
  const std::map<std::string, Expr>* env_;

  void skip() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
  }
  char peek() { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool eat(char c) {
    skip();
    if (peek() != c) return false;
    ++i_;
    return true;
  }

  Expr sum() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    } else if (peek() == '+') {
      ++i_;
    }
    Expr acc = product();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (peek() == '+') {
        ++i_;
        acc += product();
      } else if (peek() == '-') {
        ++i_;
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Expr product() {
    Expr acc = factor();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++i_;
        acc *= factor();
      } else if (peek() == '/') {
        ++i_;
        acc = acc / factor();
      } else {
        return acc;
      }
    }
  }

  Expr factor() {
    Expr base = primary();
    while (true) {
      skip();
      if (peek() != '^') break;
      ++i_;
      base = base.pow(exponent());
    }
    return base;
  }

  int exponent() {
    skip();
    std::size_t at = i_;
    bool neg = eat('-');
    skip();
    if (!std::isdigit((unsigned char)peek()))
      throw SyntaxError("expected an integer exponent", i_);
    long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) throw SyntaxError("exponent too large", at);
      ++i_;
    }
    return (int)(neg ? -v : v);
  }

  Expr primary() {
    skip();
    std::size_t at = i_;
    char c = peek();
    if (c == '(') {
      ++i_;
      Expr e = sum();
      skip();
      if (!eat(')')) throw SyntaxError("expected ')'", i_);
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (std::isdigit((unsigned char)peek())) {
        digits += peek();
        ++i_;
      }
      return Expr::constant(sp_, Rat(Int(digits)));
    }
    if (is_ident_start(c)) {
      std::string name;
      while (is_ident_char(peek())) {
        name += peek();
        ++i_;
      }
      if (env_) {
        auto it = env_->find(name);
        if (it != env_->end()) {
          require_same_space(sp_, it->second.space());
          return it->second;
        }
      }
      try {
        return Expr::atom(sp_, parse_atom(name, sp_));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.raw, at + e.pos);
      }
    }
    throw SyntaxError(std::string("expected a number, name, or '('"), at);
  }
};

}  // namespace

Expr parse_expr(const std::string& text, const SpaceP& sp,
                const std::map<std::string, Expr>* env) {
  return ExprParser(text, sp, env).run();
}

}  // namespace hamop
