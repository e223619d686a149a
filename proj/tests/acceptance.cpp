// Acceptance gate: runs the full verification suite at the default budgets
// and prints one line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "brw/config.hpp"
#include "brw/verify.hpp"

int main() {
    brw::RunConfig config;  // reference budgets
    brw::StatReport report = brw::verify_suite(config);

    // Criterion number -> check ids it comprises.
    const std::vector<std::pair<std::string, std::vector<std::string>>> criteria = {
        {"1 extinction-time tail",
         {"1a-extinction-tail", "1b-extinction-tail-geometric",
          "1c-extinction-exact-recursion"}},
        {"2 total-area law", {"2-theta-law"}},
        {"3 stable jump indices", {"3a-stable-index-theta", "3b-stable-index-zero"}},
        {"4 pointwise scaling relation", {"4-scaling-relation"}},
        {"5 dual-path limit at zero", {"5-dual-path-zero-law"}},
        {"6 largest-jump profile shape", {"6-ise-jump-shape"}},
        {"7 exact invariants", {"7-exact-invariants"}},
        {"8 small-instance enumeration", {"8-conditioned-shape-oracle"}},
        {"9 estimator calibration", {"9a-hill-coverage", "9b-ppp-atom-count"}},
        {"10 determinism", {"10-determinism"}},
    };

    std::map<std::string, const brw::CheckResult*> by_id;
    for (const auto& c : report.checks) by_id[c.check_id] = &c;

    bool all_ok = true;
    for (const auto& [label, ids] : criteria) {
        bool ok = true;
        std::string detail;
        for (const auto& id : ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                ok = false;
                detail += id + "=missing ";
                continue;
            }
            ok = ok && it->second->pass;
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%s=%.4g ", id.c_str(),
                          it->second->statistic);
            detail += buf;
        }
        all_ok = all_ok && ok;
        std::printf("criterion %-32s %s  (%s)\n", label.c_str(),
                    ok ? "PASS" : "FAIL", detail.c_str());
    }
    return all_ok ? 0 : 1;
}
