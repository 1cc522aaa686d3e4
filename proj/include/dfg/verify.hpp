#ifndef DFG_VERIFY_HPP
#define DFG_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace dfg {

struct CheckResult {
    std::string name;
    nlohmann::json params;
    bool pass = false;
    std::string left_digest;
    std::string right_digest;
    long long ms = 0;
};

std::string sha256_hex(const std::string& data);

// Runs one of the suites {all, routes, symmetry, ansatz, profiles, tridiag}
// at sizes up to nmax. Results come back sorted by check name regardless of
// execution order; jobs > 1 runs independent checks concurrently.
// Unknown suite -> std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, int nmax, int jobs = 1);

nlohmann::json report_to_json(const std::vector<CheckResult>& checks);
bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace dfg

#endif
