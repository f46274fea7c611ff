#ifndef QOSC_CLI_HPP
#define QOSC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qosc::cli {

// Runs one CLI invocation. Returns 0 on success, 2 on validation/usage
// errors, 3 on internal inconsistencies (classification disagreement,
// failed asymptotic corroboration).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 17-significant-digit rendering shared by the JSON and CSV writers.
std::string format17(double v);

} // namespace qosc::cli

#endif
