#include "bethe/params.hpp"
#include "bethe/permutation.hpp"
#include "bethe/yangian.hpp"
#include "doctest.h"

using namespace bethe;

namespace {

const PbwMonomial kE21 = PbwMonomial::of(0, 0, 0, 0, 1, 0);

}  // namespace

TEST_CASE("evaluation T-operators on v") {
    Sampler s(31);
    EvalModule mod({s.highest_weight(), s.small()});
    const Rational u = mod.x() + Rational(7, 2);
    const auto v = ModuleVector::vacuum();
    for (int a = 1; a <= 4; ++a)
        CHECK(mod.t_apply(a, a, u, v) == v * ((u - mod.x() + mod.hw()[a]) / (u - mod.x())));
    CHECK(mod.t_apply(2, 1, u, v).is_zero());
    CHECK(mod.t_apply(1, 2, u, v) == ModuleVector(kE21, (u - mod.x()).inverse()));
    CHECK_THROWS_AS(mod.t_apply(1, 2, mod.x(), v), PoleError);
}

TEST_CASE("direct engine small shapes") {
    EvalModule mod({HighestWeight{{Rational(1), Rational(2), Rational(3), Rational(4)}}, Rational(1)});
    CHECK(weight_function_direct({0, 0, 0}, {}, mod) == ModuleVector::vacuum());
    Variables t;
    t.group(1) = {Rational(5)};
    CHECK(weight_function_direct({1, 0, 0}, t, mod) == ModuleVector(kE21, Rational(1, 4)));
    CHECK_THROWS_AS(weight_function_direct({1, 1, 0}, t, mod), std::invalid_argument);
    CHECK_THROWS_AS(weight_function_direct({7, 0, 0}, t, mod), std::invalid_argument);
}

TEST_CASE("the xi=(1,1,1) expansion coefficients") {
    const Rational t1(2), t2(7, 3), t3(-5);
    const auto terms = example_terms(t1, t2, t3);
    auto coef = [&](const std::string& label) {
        for (const auto& term : terms)
            if (term.label == label) return term.coefficient;
        FAIL("missing term " << label);
        return Rational(0);
    };
    CHECK(coef("T12 T23 T34") == Rational(1));
    CHECK(coef("T13 T22 T34") == (t2 - t1).inverse());
    CHECK(coef("T14 T23 T32") ==
          ((t2 - t1) * (t3 - t2) + 1) / ((t2 - t1) * (t3 - t1) * (t3 - t2)));
}

TEST_CASE("direct engine is symmetric within groups and weight-homogeneous") {
    Sampler s(32);
    const auto pt = s.point({2, 2, 1});
    EvalModule mod(pt.context());
    const auto base = weight_function_direct(pt.shape, pt.t, mod);
    CHECK_FALSE(base.is_zero());
    for (int a = 1; a <= 2; ++a) {
        Variables sw = pt.t;
        std::swap(sw.group(a)[0], sw.group(a)[1]);
        CHECK(weight_function_direct(pt.shape, sw, mod) == base);
    }
    std::array<Rational, 4> expect = pt.hw.lam;
    expect[0] -= 2;
    expect[1] += 2 - 2;
    expect[2] += 2 - 1;
    expect[3] += 1;
    for (const auto& [m, c] : base.terms()) CHECK(weight_of(m, pt.hw) == expect);
}

TEST_CASE("gl2 weight function examples") {
    const Rational z(3), u(8), w(-2);
    const Gl2Module l({Gl2Site::l(z)});
    CHECK(gl2_weight_function({u}, l, l.basis({1})) == l.basis({2}) * (u - z).inverse());
    CHECK(gl2_weight_function({u, w}, l, l.basis({1})).is_zero());
    const Gl2Module lb({Gl2Site::lbar(z)});
    CHECK(gl2_weight_function({u}, lb, lb.basis({2})) == lb.basis({1}) * (z - u).inverse());
}

TEST_CASE("splitting property") {
    Sampler s(33);
    for (const XiShape shape : {XiShape{0, 2, 0}, XiShape{1, 1, 1}, XiShape{2, 1, 1}, XiShape{1, 1, 2}}) {
        const auto pt = s.point(shape);
        EvalModule mod(pt.context());
        CHECK(check_splitting(shape, pt.t, mod));
    }
}

TEST_CASE("RTT on the highest vector, all diagonal quadruples vanish on both sides") {
    Sampler s(34);
    EvalModule mod({s.highest_weight(), s.small()});
    const auto uv = s.generic(2, {mod.x()});
    for (int a = 1; a <= 4; ++a) CHECK(check_rtt(a, a, a, a, uv[0], uv[1], ModuleVector::vacuum(), mod));
}

TEST_CASE("coproduct expansion base case and small xi") {
    Sampler s(35);
    EvalModule mod({s.highest_weight(), s.small()});
    const auto vals = s.generic(5, {mod.x()});
    const Gl2Module a({Gl2Site::l(vals[3])}), b({Gl2Site::l(vals[4])});
    for (int xi = 1; xi <= 2; ++xi) {
        const std::vector<Rational> ts(vals.begin(), vals.begin() + xi);
        CHECK(check_coproduct_expansion(ts, a, a.basis({1}), b, b.basis({1})));
    }
    const Gl2Module ver({Gl2Site::verma(0)}, &mod);
    CHECK(check_coproduct_expansion({vals[0], vals[1], vals[2]}, a, a.basis({1}), ver, ver.basis({})));
}

TEST_CASE("exchange formulas") {
    Sampler s(36);
    EvalModule mod({s.highest_weight(), s.small()});
    const auto vals = s.generic(4, {mod.x()});
    const Gl2Module ver({Gl2Site::verma(2)}, &mod);
    CHECK(check_exchange_formulas(vals[0], {vals[1]}, ver, ver.basis({})));
    CHECK(check_exchange_formulas(vals[0], {vals[1], vals[2], vals[3]}, ver, ver.basis({})));
}

TEST_CASE("w1 and w2 subset sums") {
    Sampler s(37);
    EvalModule mod({s.highest_weight(), s.small()});
    const auto vals = s.generic(4, {mod.x()});
    CHECK(check_w1({}, {vals[0]}, mod));
    CHECK(check_w1({vals[0]}, {vals[1]}, mod));
    CHECK(check_w1_w2({vals[0], vals[1]}, {vals[2], vals[3]}, mod));
}

TEST_CASE("w2 layout: the factor labelled z_i carries w1 for i in I") {
    Sampler s(38);
    EvalModule mod({s.highest_weight(), s.small()});
    const auto vals = s.generic(5, {mod.x()});
    const std::vector<Rational> ts{vals[0], vals[1]};
    const std::vector<Rational> zs{vals[2], vals[3], vals[4]};
    CHECK(check_w2(ts, zs, mod, 0, W2Placement::BySiteLabel));
    CHECK_FALSE(check_w2(ts, zs, mod, 0, W2Placement::ByPosition));
}
