#include "bethe/suite.hpp"
#include "doctest.h"

using namespace bethe;

TEST_CASE("engine lookup") {
    const auto e = EngineSet::standard();
    CHECK(EngineSet::names().size() == 4);
    for (const auto& n : EngineSet::names()) CHECK(static_cast<bool>(e.get(n)));
    CHECK_THROWS_AS(e.get("nope"), std::invalid_argument);
}

TEST_CASE("suite is deterministic for a fixed seed") {
    const SuiteConfig cfg{99, 1};
    const auto a = run_suite(cfg, EngineSet::standard(), {1, 3, 9});
    const auto b = run_suite(cfg, EngineSet::standard(), {1, 3, 9});
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].passed);
        CHECK(a[i].samples == b[i].samples);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("a corrupted engine is caught") {
    EngineSet bad = EngineSet::standard();
    const auto good = bad.main2;
    bad.main2 = [good](const XiShape& s, const Variables& t, const EvalModuleContext& ctx) {
        auto v = good(s, t, ctx);
        if (s.total() >= 2) v *= Rational(2);
        return v;
    };
    const auto res = verify_engines({5, 1}, bad);
    CHECK_FALSE(res.passed);
    CHECK(res.detail.find("main2") != std::string::npos);
}

TEST_CASE("a pole inside a criterion fails it rather than escaping") {
    EngineSet bad = EngineSet::standard();
    bad.direct = [](const XiShape&, const Variables&, const EvalModuleContext&) -> ModuleVector {
        throw PoleError("forced");
    };
    const auto res = verify_example({5, 1}, bad);
    CHECK_FALSE(res.passed);
    CHECK(res.detail.find("pole") != std::string::npos);
}
