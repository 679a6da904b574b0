#pragma once
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpm/monomial.hpp"
#include "cpm/report.hpp"

namespace cpm {

inline constexpr const char* kToolVersion = "1.0.0";

// {version, N, suite, checks: [{check, status, anchor, witness, elapsed_ms}], overall}
nlohmann::ordered_json report_json(const std::string& suite, int N, const std::vector<VerificationReport>& reports,
                                   bool timings);

// Parses "<re>+<im>i" style complex literals; nullopt on malformed input.
std::optional<cplx> parse_complex(const std::string& s);

// args excludes the program name. env_tol is the value of CPM_TOL, if set.
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::optional<std::string> env_tol = std::nullopt);

}  // namespace cpm
