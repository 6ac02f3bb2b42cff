// One line per acceptance criterion. Exit status is nonzero when any criterion fails.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "qthook/acceptance.hpp"

int main(int argc, char** argv) {
    qthook::SuiteOptions opts;
    if (const char* s = std::getenv("QTHOOK_SEED")) opts.seed = std::stoull(s);
    std::string jsonOut;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--json" && i + 1 < argc) jsonOut = argv[++i];
        else if (a == "--seed" && i + 1 < argc) opts.seed = std::stoull(argv[++i]);
    }
    bool ok = true;
    nlohmann::json all = nlohmann::json::array();
    for (int id = 1; id <= qthook::kCriterionCount; ++id) {
        auto c = qthook::runCriterion(id, opts);
        std::cout << c.line() << std::endl;
        ok = ok && c.pass;
        all.push_back(c.toJson());
    }
    if (!jsonOut.empty()) std::ofstream(jsonOut) << all.dump(2) << '\n';
    std::cout << (ok ? "acceptance: all criteria pass" : "acceptance: FAILED") << std::endl;
    return ok ? 0 : 1;
}
