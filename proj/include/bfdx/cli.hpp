#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bfdx {

enum class OutputFormat { human, json, csv };

// Runs one CLI invocation; args excludes the program name. Data goes to
// out, diagnostics to err. Exit codes: 0 success; 1 infeasible or empty
// results, reported as data on out; 2 usage errors and numeric failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bfdx
