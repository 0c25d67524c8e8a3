#ifndef HAMOP_SCRIPT_HPP
#define HAMOP_SCRIPT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamop/serialize.hpp"
#include "hamop/space.hpp"

namespace hamop {

struct ScriptOptions {
  Format format = Format::Text;
  /// Retry the whole script with a doubled truncation order whenever a
  /// computation runs past the declared one, up to max_order.
  bool auto_raise = false;
  unsigned max_order = 64;
  /// Overrides the truncation order of the declaration when set.
  std::optional<unsigned> order;
  /// Space to use when the script has no declaration of its own.
  std::optional<SpaceSpec> space;
};

struct Transcript {
  bool ok = false;
  /// Formatted per-command output; with Format::Json a single element
  /// holding the whole structured document.
  std::vector<std::string> lines;
  std::string error;        // empty when ok
  unsigned final_order = 0;  // truncation order the run ended with
  std::string text() const;
};

/// Parses the body of a `space` declaration, e.g.
/// "indep=x,t dep=u,v odd=p,q params=c order=10". Throws Error on
/// malformed fields or a missing order.
SpaceSpec parse_space_decl(const std::string& decl);

/// Runs a script: one command per line, '#' starts a comment.
///
///   space indep=x,t dep=u,v odd=p,q params=c order=10
///   let name = <expr>
///   op name = <row> [; <row>]...     rows are degree-1 expressions
///   print <expr>
///   euler <expr>
///   skew <op>
///   bracket <op> <op>
///   lieder <let-name> <op> <op>
///   transform <op> <expr> [; <expr>]...
///
/// The space declaration precedes every other command (unless supplied
/// via options); let/op names bind once and must not collide with
/// coordinates. Errors carry the one-based command index. Output is
/// deterministic: equal scripts and options give equal bytes.
Transcript run_script(const std::string& source,
                      const ScriptOptions& opt = {});

}  // namespace hamop

#endif  // HAMOP_SCRIPT_HPP
