#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bethe/verma.hpp"
#include "bethe/yangian.hpp"

namespace bethe {

/// The four weight-function engines behind one interface, so tests can swap
/// in a deliberately broken one.
struct EngineSet {
    using Engine = std::function<ModuleVector(const XiShape&, const Variables&, const EvalModuleContext&)>;
    Engine direct;
    Engine presym;
    Engine main;
    Engine main2;

    static EngineSet standard();
    /// Looks up an engine by name: direct, presym, main, main2.
    const Engine& get(const std::string& name) const;
    static const std::vector<std::string>& names();
};

struct SuiteConfig {
    std::uint64_t seed = 20240917;
    int points = 3;   // random parameter points per shape where a count is not fixed
};

struct CriterionResult {
    int id = 0;
    std::string name;
    long samples = 0;
    bool passed = false;
    std::string detail;
};

CriterionResult verify_yang_baxter(const SuiteConfig& cfg);
CriterionResult verify_rtt(const SuiteConfig& cfg);
CriterionResult verify_example(const SuiteConfig& cfg, const EngineSet& engines);
CriterionResult verify_engines(const SuiteConfig& cfg, const EngineSet& engines);
CriterionResult verify_splitting(const SuiteConfig& cfg, const EngineSet& engines);
CriterionResult verify_choice_independence(const SuiteConfig& cfg);
CriterionResult verify_gl2_identities(const SuiteConfig& cfg);
CriterionResult verify_x_calculus(const SuiteConfig& cfg);
CriterionResult verify_factorial_identity(const SuiteConfig& cfg);
CriterionResult verify_subset_pair_identity(const SuiteConfig& cfg);

/// All criteria in order 1..10. `only`, when nonempty, selects ids.
std::vector<CriterionResult> run_suite(const SuiteConfig& cfg, const EngineSet& engines,
                                       const std::vector<int>& only = {});

}  // namespace bethe
