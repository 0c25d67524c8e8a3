#include "hamop/script.hpp"

#include <sstream>

#include "hamop/errors.hpp"
#include "hamop/parser.hpp"
#include "hamop/schouten.hpp"
#include "json.hpp"

namespace hamop {

namespace {

using nlohmann::json;

struct Command {
  unsigned index = 0;  // one-based, comments and blanks skipped
  std::string verb;
  std::string rest;
};

// Raised out of run_once so the driver can retry with a larger order.
struct RaiseNeeded {
  unsigned required;
  std::string message;
};

std::vector<Command> split_commands(const std::string& source) {
  std::vector<Command> cmds;
  std::istringstream in(source);
  std::string line;
  unsigned index = 0;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    Command c;
    c.index = ++index;
    std::size_t sp = line.find_first_of(" \t");
    c.verb = line.substr(0, sp);
    if (sp != std::string::npos) {
      std::size_t r = line.find_first_not_of(" \t", sp);
      if (r != std::string::npos) c.rest = line.substr(r);
    }
    cmds.push_back(std::move(c));
  }
  return cmds;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

SpaceSpec parse_space_decl(const std::string& rest) {
  SpaceSpec spec;
  spec.total_order = 0;
  std::istringstream in(rest);
  std::string tok;
  while (in >> tok) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw Error("space declaration expects key=value fields, got '" + tok +
                  "'");
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "order") {
      try {
        long v = std::stol(val);
        if (v < 1 || v > 1000) throw Error("");
        spec.total_order = (unsigned)v;
      } catch (...) {
        throw Error("space order must be an integer in [1, 1000], got '" +
                    val + "'");
      }
      continue;
    }
    std::vector<std::string> names;
    if (!val.empty()) {
      for (auto& n : split_list(val, ',')) {
        if (n.empty())
          throw Error("empty name in space field '" + key + "'");
        names.push_back(n);
      }
    }
    if (key == "indep")
      spec.indep = names;
    else if (key == "dep")
      spec.dep = names;
    else if (key == "odd")
      spec.odd = names;
    else if (key == "params")
      spec.params = names;
    else
      throw Error("unknown space field '" + key + "'");
  }
  if (spec.total_order == 0)
    throw Error("space declaration needs an order= field");
  return spec;
}

namespace {

json space_json(const SpaceSpec& s) {
  return json{{"dep", s.dep},       {"indep", s.indep},
              {"odd", s.odd},       {"order", s.total_order},
              {"params", s.params}};
}

std::string space_text(const SpaceSpec& s) {
  auto list = [](const std::vector<std::string>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += v[i];
    }
    return out + "]";
  };
  return "space: indep=" + list(s.indep) + " dep=" + list(s.dep) +
         " odd=" + list(s.odd) + " params=" + list(s.params) +
         " order=" + std::to_string(s.total_order);
}

json reparse(const std::string& dumped) { return json::parse(dumped); }

class Runner {
 public:
  Runner(const std::vector<Command>& cmds, const SpaceSpec& spec,
         bool script_has_decl, Format format)
      : cmds_(cmds),
        spec_(spec),
        script_has_decl_(script_has_decl),
        format_(format) {}

  Transcript run() {
    Transcript t;
    t.final_order = spec_.total_order;
    for (const Command& c : cmds_) {
      try {
        dispatch(c);
      } catch (const OrderExceeded& e) {
        throw RaiseNeeded{e.required_order, where(c) + e.what()};
      } catch (const std::exception& e) {
        t.ok = false;
        t.error = where(c) + e.what();
        finish(t);
        return t;
      }
    }
    t.ok = true;
    finish(t);
    return t;
  }

 private:
  const std::vector<Command>& cmds_;
  SpaceSpec spec_;
  bool script_has_decl_;
  Format format_;

  SpaceP sp_;
  std::map<std::string, Expr> env_;
  std::map<std::string, CDiffOp> ops_;
  std::vector<std::string> lines_;
  json records_ = json::array();

  static std::string where(const Command& c) {
    return "command " + std::to_string(c.index) + " (" + c.verb + "): ";
  }

  void finish(Transcript& t) {
    if (format_ == Format::Text) {
      t.lines = lines_;
    } else {
      json doc{{"commands", records_}, {"ok", t.ok}};
      if (!t.ok) doc["error"] = t.error;
      doc["order"] = t.final_order;
      t.lines = {doc.dump()};
    }
  }

  void emit(std::string line) { lines_.push_back(std::move(line)); }

  void need_space(const Command& c) {
    if (!sp_)
      throw Error("no space is in scope before command " +
                  std::to_string(c.index) + "; declare one first");
  }

  // Accepts a fresh name: parse_atom must fail with UnknownName and the
  // name must be unbound.
  void check_fresh(const std::string& name) {
    if (name.empty()) throw Error("missing name");
    if (env_.count(name) || ops_.count(name))
      throw Error("name '" + name + "' is already bound");
    try {
      parse_atom(name, sp_);
      throw Error("name '" + name + "' collides with a coordinate");
    } catch (const UnknownName&) {
      return;  // good: not a coordinate
    }
  }

  const CDiffOp& get_op(const std::string& name) {
    auto it = ops_.find(name);
    if (it == ops_.end())
      throw UnknownName("unknown operator '" + name + "'");
    return it->second;
  }

  const Expr& get_binding(const std::string& name) {
    auto it = env_.find(name);
    if (it == env_.end())
      throw UnknownName("unknown binding '" + name + "'");
    return it->second;
  }

  Expr parse(const std::string& text) { return parse_expr(text, sp_, &env_); }

  // "name = payload" split for let/op.
  static std::pair<std::string, std::string> name_eq(const std::string& rest,
                                                     const char* what) {
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos)
      throw Error(std::string(what) + " expects 'name = ...'");
    return {trim(rest.substr(0, eq)), trim(rest.substr(eq + 1))};
  }

  void dispatch(const Command& c) {
    if (c.verb == "space") {
      if (sp_) throw Error("a space is already declared");
      if (!script_has_decl_ || c.index != 1)
        throw Error("the space declaration must be the first command");
      sp_ = Space::make(spec_);
      emit(space_text(spec_));
      records_.push_back(json{{"index", c.index},
                              {"space", space_json(spec_)},
                              {"verb", "space"}});
      return;
    }
    if (!sp_ && !script_has_decl_) sp_ = Space::make(spec_);
    need_space(c);

    if (c.verb == "let") {
      auto [name, payload] = name_eq(c.rest, "let");
      check_fresh(name);
      Expr e = parse(payload);
      env_.emplace(name, e);
      emit(name + " = " + to_text(e));
      records_.push_back(json{{"index", c.index},
                              {"name", name},
                              {"value", reparse(to_json(e))},
                              {"verb", "let"}});
      return;
    }
    if (c.verb == "op") {
      auto [name, payload] = name_eq(c.rest, "op");
      check_fresh(name);
      std::vector<Expr> rows;
      for (auto& part : split_list(payload, ';')) rows.push_back(parse(trim(part)));
      Superfun sf(1, rows);
      CDiffOp a = superfun_to_op(sf);
      ops_.emplace(name, a);
      emit(name + " = " + to_text(sf));
      records_.push_back(json{{"index", c.index},
                              {"name", name},
                              {"rows", reparse(to_json(sf))},
                              {"verb", "op"}});
      return;
    }
    if (c.verb == "print") {
      Expr e = parse(c.rest);
      emit(to_text(e));
      records_.push_back(json{{"index", c.index},
                              {"value", reparse(to_json(e))},
                              {"verb", "print"}});
      return;
    }
    if (c.verb == "euler") {
      EulerResult r = euler_df(parse(c.rest));
      emit(to_text(r));
      records_.push_back(json{{"index", c.index},
                              {"value", reparse(to_json(r))},
                              {"verb", "euler"}});
      return;
    }
    if (c.verb == "skew") {
      std::string name = trim(c.rest);
      bool skew = is_skew_adjoint(get_op(name));
      emit("skew-adjoint(" + name + "): " + (skew ? "yes" : "no"));
      records_.push_back(json{{"index", c.index},
                              {"op", name},
                              {"skew", skew},
                              {"verb", "skew"}});
      return;
    }
    if (c.verb == "bracket") {
      std::istringstream in(c.rest);
      std::string a, b, extra;
      if (!(in >> a >> b) || (in >> extra))
        throw Error("bracket expects two operator names");
      BracketZero r = iszero_schouten_bracket(
          operator_bivector(get_op(a)), operator_bivector(get_op(b)));
      emit("[" + a + "," + b + "] = 0 in cohomology: " +
           (r.zero ? "yes" : "no"));
      if (!r.zero) emit("residual: " + to_text(r.euler));
      records_.push_back(json{{"index", c.index},
                              {"ops", json::array({a, b})},
                              {"residual", reparse(to_json(r.euler))},
                              {"verb", "bracket"},
                              {"zero", r.zero}});
      return;
    }
    if (c.verb == "lieder") {
      std::istringstream in(c.rest);
      std::string tau, a, b, extra;
      if (!(in >> tau >> a >> b) || (in >> extra))
        throw Error("lieder expects a vector-field binding and two operator "
                    "names");
      Expr lt = lie_derivative(get_binding(tau),
                               operator_bivector(get_op(a))) -
                operator_bivector(get_op(b));
      EulerResult r = euler_df(lt);
      emit("euler(lie(" + tau + "," + a + ") - " + b + ") = " + to_text(r));
      records_.push_back(json{{"euler", reparse(to_json(r))},
                              {"index", c.index},
                              {"ops", json::array({a, b})},
                              {"tau", tau},
                              {"verb", "lieder"}});
      return;
    }
    if (c.verb == "transform") {
      std::istringstream in(c.rest);
      std::string name;
      in >> name;
      std::string payload;
      std::getline(in, payload);
      payload = trim(payload);
      if (payload.empty())
        throw Error("transform expects an operator name and substitution "
                    "components");
      std::vector<Expr> comps;
      for (auto& part : split_list(payload, ';'))
        comps.push_back(parse(trim(part)));
      CDiffOp b = transform_operator_differential(get_op(name), comps);
      Superfun sf = op_to_superfun(b);
      emit("transform(" + name + ") = " + to_text(sf));
      records_.push_back(json{{"index", c.index},
                              {"op", name},
                              {"rows", reparse(to_json(sf))},
                              {"verb", "transform"}});
      return;
    }
    throw Error("unknown command '" + c.verb + "'");
  }
};

}  // namespace

std::string Transcript::text() const {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += "\n";
  }
  if (!ok && !error.empty()) out += "error: " + error + "\n";
  return out;
}

Transcript run_script(const std::string& source, const ScriptOptions& opt) {
  std::vector<Command> cmds = split_commands(source);
  Transcript empty;
  if (cmds.empty()) {
    empty.ok = true;
    if (opt.format == Format::Json)
      empty.lines = {json{{"commands", json::array()}, {"ok", true},
                          {"order", 0}}
                         .dump()};
    return empty;
  }

  bool script_has_decl = cmds.front().verb == "space";
  SpaceSpec base;
  if (script_has_decl) {
    try {
      base = parse_space_decl(cmds.front().rest);
    } catch (const std::exception& e) {
      Transcript t;
      t.ok = false;
      t.error = "command 1 (space): " + std::string(e.what());
      if (opt.format == Format::Json)
        t.lines = {json{{"commands", json::array()},
                        {"error", t.error},
                        {"ok", false}}
                       .dump()};
      return t;
    }
  } else if (opt.space) {
    base = *opt.space;
  } else {
    Transcript t;
    t.ok = false;
    t.error = "command 1 (" + cmds.front().verb +
              "): no space declaration precedes this command";
    if (opt.format == Format::Json)
      t.lines = {json{{"commands", json::array()},
                      {"error", t.error},
                      {"ok", false}}
                     .dump()};
    return t;
  }
  if (opt.order) base.total_order = *opt.order;

  unsigned t_order = base.total_order;
  for (;;) {
    SpaceSpec spec = base;
    spec.total_order = t_order;
    try {
      Runner r(cmds, spec, script_has_decl, opt.format);
      Transcript out = r.run();
      return out;
    } catch (const RaiseNeeded& rn) {
      if (!opt.auto_raise || t_order >= opt.max_order) {
        Transcript t;
        t.ok = false;
        t.final_order = t_order;
        t.error = rn.message;
        if (opt.auto_raise)
          t.error += " [auto-raise stopped at the cap of " +
                     std::to_string(opt.max_order) + "]";
        if (opt.format == Format::Json)
          t.lines = {json{{"commands", json::array()},
                          {"error", t.error},
                          {"ok", false},
                          {"order", t_order}}
                         .dump()};
        return t;
      }
      unsigned next = std::max(t_order * 2, rn.required);
      t_order = std::min(next, opt.max_order);
    }
  }
}

}  // namespace hamop
