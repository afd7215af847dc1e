// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "bethe/suite.hpp"

int main(int argc, char** argv) {
    bethe::SuiteConfig cfg;
    if (argc > 1) cfg.seed = std::stoull(argv[1]);
    const auto results = bethe::run_suite(cfg, bethe::EngineSet::standard());
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " [" << r.samples
                  << " checks]";
        if (!r.detail.empty()) std::cout << "  -- " << r.detail;
        std::cout << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
