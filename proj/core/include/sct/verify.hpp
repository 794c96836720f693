#ifndef SCT_VERIFY_HPP
#define SCT_VERIFY_HPP

#include <string>
#include <vector>

namespace sct {

struct CheckResult {
    std::string name;
    bool ok;
};

// suite names accepted by run_suite, "all" last
const std::vector<std::string>& verify_suites();

// runs one invariant suite; weight bounds the exhaustive ranges, each check
// derives its own cap from it. Unknown names throw std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite, int weight);

} // namespace sct

#endif
