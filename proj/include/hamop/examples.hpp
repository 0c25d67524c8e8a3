#ifndef HAMOP_EXAMPLES_HPP
#define HAMOP_EXAMPLES_HPP

#include <string>
#include <vector>

namespace hamop {

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first differing component when the check fails
};

struct ExampleReport {
  std::string id;
  bool ok = false;
  bool long_mode = false;
  std::vector<ExampleCheck> checks;
  std::string first_mismatch;  // empty when ok
  double seconds = 0.0;
};

/// Identifiers of the embedded computations, in a stable order.
const std::vector<std::string>& example_ids();

/// True for examples whose full run is gated behind the long flag.
bool example_is_long(const std::string& id);

/// Runs one embedded example and compares every computed value against
/// its expected outcome. Unknown ids raise UnknownName. For gated
/// examples, long_mode adds the expensive computation to the quick
/// checks.
ExampleReport run_example(const std::string& id, bool long_mode = false);

std::string report_text(const ExampleReport& r);
/// Structured report without timings, suitable for golden files.
std::string report_json(const ExampleReport& r);

}  // namespace hamop

#endif  // HAMOP_EXAMPLES_HPP
