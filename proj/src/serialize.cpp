#include "hamop/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace hamop {

namespace {

using nlohmann::json;

std::string rat_text(const Rat& r) { return r.get_str(); }

// One polynomial term without its sign; |c| is passed in.
std::string poly_term_text(const Space& sp, const Monomial& m, const Rat& ac) {
  std::string out;
  bool coeff_shown = !(ac == 1) || m.is_one();
  if (coeff_shown) out = rat_text(ac);
  for (const auto& [v, e] : m.f) {
    if (!out.empty()) out += "*";
    out += sp.name(sp.even_atom(v));
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Polynomial in term order, with internal signs.
std::string poly_text(const Space& sp, const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = sgn(c) < 0;
    Rat ac = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += poly_term_text(sp, m, ac);
  }
  return out;
}

bool needs_parens_in_product(const Poly& p) { return p.terms().size() > 1; }

// True when a denominator can stand after '/' without parentheses:
// a single term with coefficient one and at most one variable.
bool den_is_plain(const Poly& p) {
  if (p.terms().size() != 1) return false;
  const auto& [m, c] = p.terms().front();
  return c == 1 && m.f.size() <= 1 && !m.is_one();
}

// Coefficient of one expression term, sign removed by the caller.
std::string coeff_text(const Space& sp, const RatFun& c, bool in_product) {
  const Poly& num = c.num();
  const Poly& den = c.den();
  if (den.is_one()) {
    std::string s = poly_text(sp, num);
    if (in_product && needs_parens_in_product(num)) return "(" + s + ")";
    return s;
  }
  std::string n = poly_text(sp, num);
  if (needs_parens_in_product(num)) n = "(" + n + ")";
  std::string d = poly_text(sp, den);
  if (!den_is_plain(den)) d = "(" + d + ")";
  return n + "/" + d;
}

int ratfun_sign(const RatFun& c) {
  if (c.is_zero()) return 0;
  return sgn(c.num().leading().second) < 0 ? -1 : 1;
}

std::string mi_text(const Space& sp, const MultiIndex& mi) {
  std::string out;
  for (unsigned l = 0; l < mi.size(); ++l) {
    if (mi[l] == 0) continue;
    if (!out.empty()) out += "*";
    out += "d" + sp.spec().indep[l];
    if (mi[l] > 1) out += "^" + std::to_string(mi[l]);
  }
  return out;
}

json mi_json(const Space& sp, const MultiIndex& mi) {
  json m = json::object();
  for (unsigned l = 0; l < mi.size(); ++l)
    if (mi[l] > 0) m[sp.spec().indep[l]] = mi[l];
  return m;
}

json atom_json(const Space& sp, const Atom& a) {
  json j = json::object();
  switch (a.kind) {
    case AtomKind::IndepVar:
      j["kind"] = "indep";
      j["name"] = sp.spec().indep[a.index];
      return j;
    case AtomKind::Parameter:
      j["kind"] = "param";
      j["name"] = sp.spec().params[a.index];
      return j;
    case AtomKind::EvenJet:
      j["kind"] = "even";
      j["name"] = sp.spec().dep[a.index];
      j["mi"] = mi_json(sp, a.mi);
      return j;
    case AtomKind::OddJet:
      j["kind"] = "odd";
      j["name"] = sp.spec().odd[a.index];
      j["mi"] = mi_json(sp, a.mi);
      return j;
  }
  return j;
}

json poly_json(const Space& sp, const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [v, e] : m.f)
      mono.push_back(json::array({atom_json(sp, sp.even_atom(v)), e}));
    terms.push_back(json::array({rat_text(c), mono}));
  }
  return terms;
}

json expr_json(const Expr& e) {
  const Space& sp = *e.space();
  json terms = json::array();
  for (const auto& t : e.terms()) {
    json odd = json::array();
    for (std::uint32_t id : t.mon) odd.push_back(atom_json(sp, sp.odd_atom(id)));
    terms.push_back(json{{"den", poly_json(sp, t.c.den())},
                         {"num", poly_json(sp, t.c.num())},
                         {"odd", odd}});
  }
  return json{{"terms", terms}};
}

json euler_json(const EulerResult& r) {
  json even = json::array(), odd = json::array();
  for (const auto& e : r.even) even.push_back(expr_json(e));
  for (const auto& e : r.odd) odd.push_back(expr_json(e));
  return json{{"even", even}, {"odd", odd}};
}

json superfun_json(const Superfun& s) {
  json comps = json::array();
  for (const auto& c : s.comps) comps.push_back(expr_json(c));
  return json{{"comps", comps}, {"degree", s.degree}};
}

json op_json(const CDiffOp& a) {
  const Space& sp = *a.space();
  json entries = json::array();
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) {
      const auto& ent = a.entry(i, j);
      if (ent.empty()) continue;
      json terms = json::array();
      for (const auto& [mi, c] : ent)
        terms.push_back(json{{"coeff", expr_json(c)}, {"mi", mi_json(sp, mi)}});
      entries.push_back(json{{"i", i}, {"j", j}, {"terms", terms}});
    }
  return json{{"cols", a.cols()}, {"entries", entries}, {"rows", a.rows()}};
}

}  // namespace

std::string to_text(const Expr& e) {
  if (e.is_zero()) return "0";
  const Space& sp = *e.space();
  std::string out;
  bool first = true;
  for (const auto& t : e.terms()) {
    bool neg = ratfun_sign(t.c) < 0;
    RatFun ac = neg ? -t.c : t.c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string piece;
    bool unit = ac.is_constant() && ac.num().is_one();
    // A sign prefix binds like a product, so a multi-term coefficient
    // needs parentheses even without odd factors.
    if (!unit || t.mon.empty())
      piece = coeff_text(sp, ac, !t.mon.empty() || neg);
    for (std::uint32_t id : t.mon) {
      if (!piece.empty()) piece += "*";
      piece += sp.name(sp.odd_atom(id));
    }
    out += piece;
  }
  return out;
}

std::string to_text(const Superfun& s) {
  std::string out = "(";
  for (unsigned i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_text(s.comps[i]);
  }
  return out + ")";
}

std::string to_text(const CDiffOp& a) {
  const Space& sp = *a.space();
  std::ostringstream out;
  for (unsigned i = 0; i < a.rows(); ++i)
    for (unsigned j = 0; j < a.cols(); ++j) {
      out << "[" << i + 1 << "," << j + 1 << "] ";
      const auto& ent = a.entry(i, j);
      if (ent.empty()) {
        out << "0\n";
        continue;
      }
      bool first = true;
      for (const auto& [mi, c] : ent) {
        if (!first) out << " + ";
        first = false;
        std::string cs = to_text(c);
        if (c.terms().size() > 1) cs = "(" + cs + ")";
        std::string ms = mi_text(sp, mi);
        out << cs;
        if (!ms.empty()) out << "*" << ms;
      }
      out << "\n";
    }
  return out.str();
}

std::string to_text(const EulerResult& r) {
  std::string out = "{{";
  for (std::size_t i = 0; i < r.even.size(); ++i) {
    if (i) out += ",";
    out += to_text(r.even[i]);
  }
  out += "},{";
  for (std::size_t i = 0; i < r.odd.size(); ++i) {
    if (i) out += ",";
    out += to_text(r.odd[i]);
  }
  return out + "}}";
}

std::string to_json(const Expr& e) { return expr_json(e).dump(); }
std::string to_json(const Superfun& s) { return superfun_json(s).dump(); }
std::string to_json(const CDiffOp& a) { return op_json(a).dump(); }
std::string to_json(const EulerResult& r) { return euler_json(r).dump(); }

std::string serialize(const Expr& e, Format f) {
  return f == Format::Text ? to_text(e) : to_json(e);
}
std::string serialize(const Superfun& s, Format f) {
  return f == Format::Text ? to_text(s) : to_json(s);
}
std::string serialize(const CDiffOp& a, Format f) {
  return f == Format::Text ? to_text(a) : to_json(a);
}
std::string serialize(const EulerResult& r, Format f) {
  return f == Format::Text ? to_text(r) : to_json(r);
}

}  // namespace hamop
