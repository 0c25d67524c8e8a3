// Command-line driver: runs scripts from a file or stdin, or one of the
// embedded example computations. Exit status is 0 exactly when every
// command ran cleanly and every embedded expectation matched.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hamop/examples.hpp"
#include "hamop/parallel.hpp"
#include "hamop/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "hamop: variational calculus for Hamiltonian operators with "
      "Grassmann jet coordinates"};

  std::string script_path;
  std::string space_decl;
  std::string example;
  std::string format = "text";
  unsigned order = 0;
  unsigned max_order = 64;
  bool auto_raise = false;
  bool long_mode = false;
  bool list_examples = false;
  int jobs = 0;

  app.add_option("script", script_path,
                 "script file to run ('-' reads standard input)");
  app.add_option("--space", space_decl,
                 "space declaration used when the script has none, e.g. "
                 "\"indep=x dep=u odd=p order=10\"");
  app.add_option("--order", order,
                 "override the declared truncation order");
  app.add_flag("--auto-raise", auto_raise,
               "retry with a doubled truncation order when a computation "
               "needs more jets");
  app.add_option("--max-order", max_order,
                 "cap for --auto-raise (default 64)");
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--example", example, "run an embedded example by id");
  app.add_flag("--long", long_mode,
               "include the long-running part of gated examples");
  app.add_option("--jobs", jobs,
                 "worker threads for bracket and Euler components "
                 "(0 = hardware default)");
  app.add_flag("--list-examples", list_examples,
               "print the available example ids and exit");

  CLI11_PARSE(app, argc, argv);

  hamop::set_jobs(jobs);
  hamop::Format fmt =
      format == "json" ? hamop::Format::Json : hamop::Format::Text;

  if (list_examples) {
    for (const auto& id : hamop::example_ids())
      std::cout << id << (hamop::example_is_long(id) ? " (long available)" : "")
                << "\n";
    return 0;
  }

  try {
    if (!example.empty()) {
      hamop::ExampleReport rep = hamop::run_example(example, long_mode);
      std::cout << (fmt == hamop::Format::Json ? hamop::report_json(rep)
                                               : hamop::report_text(rep));
      if (fmt == hamop::Format::Json) std::cout << "\n";
      return rep.ok ? 0 : 1;
    }

    if (script_path.empty()) {
      std::cerr << "nothing to do: give a script file, '-', or --example; "
                   "see --help\n";
      return 2;
    }
    std::string source;
    if (script_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      source = ss.str();
    } else {
      std::ifstream in(script_path);
      if (!in) {
        std::cerr << "cannot open script '" << script_path << "'\n";
        return 2;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      source = ss.str();
    }

    hamop::ScriptOptions opt;
    opt.format = fmt;
    opt.auto_raise = auto_raise;
    opt.max_order = max_order;
    if (order > 0) opt.order = order;
    if (!space_decl.empty()) {
      try {
        opt.space = hamop::parse_space_decl(space_decl);
      } catch (const std::exception& e) {
        std::cerr << "bad --space declaration: " << e.what() << "\n";
        return 2;
      }
    }

    hamop::Transcript t = hamop::run_script(source, opt);
    std::cout << t.text();
    return t.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
