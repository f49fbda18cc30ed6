#pragma once

// Command-line front door: verify | measure | tree | orbit | render, long
// flags only. Exit codes: 0 success (and all checks pass), 1 check failure
// or refused computation, 2 usage error. FJL_REPORT_PRECISION overrides the
// decimal precision used for reports and figures (default 12).

#include <iostream>
#include <string>
#include <vector>

namespace fjl {

int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace fjl
