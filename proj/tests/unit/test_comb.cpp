#include "bethe/comb.hpp"
#include "bethe/params.hpp"
#include "bethe/symmetrize.hpp"
#include "bethe/yangian.hpp"
#include "doctest.h"

using namespace bethe;

namespace {

std::vector<Rational> rv(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Rational triple_sym(const std::function<Rational(const Variables&)>& g, const Variables& t) {
    Variables cur = t;
    return sym_bar(
        [&](std::span<const Rational> a) {
            cur.group(1).assign(a.begin(), a.end());
            return sym_bar(
                [&](std::span<const Rational> b) {
                    cur.group(2).assign(b.begin(), b.end());
                    return sym_bar(
                        [&](std::span<const Rational> c) {
                            cur.group(3).assign(c.begin(), c.end());
                            return g(cur);
                        },
                        t.group(3));
                },
                t.group(2));
        },
        t.group(1));
}

}  // namespace

TEST_CASE("F and F-tilde") {
    const auto z = rv({3, 10});
    const auto t = rv({-4});
    CHECK(f_weight({}, t, z) == Rational(1));
    CHECK(f_weight({2}, t, z) == Rational(1, -14));
    CHECK(f_weight({1}, t, z) == Rational(1, -7) * Rational(-13, -14));
    CHECK(f_tilde({}, t, z) == Rational(1));
    CHECK(f_tilde({2}, t, z) == Rational(1, 14));
    CHECK(f_tilde({1}, t, z) == Rational(1, 7) * Rational(15, 14));
    CHECK_THROWS_AS(f_weight({1}, rv({3}), z), PoleError);
}

TEST_CASE("V and V-tilde") {
    const auto z = rv({3, 10});
    const Rational y(2);
    CHECK(v_fn({}, rv({1, 5, -6}), z, y) == Rational(1));
    CHECK(v_tilde_fn({}, rv({1, 5}), z, y) == Rational(1));
    CHECK(v_fn({2}, rv({-4}), z, y) == Rational(-6, -14));
    // Two-permutation sum by hand for ξ = 2, I = {k}.
    const Rational a(-4), b(6);
    const Rational expect = (a - y) / (a - 10) * (a - b - 1) / (a - b) + (b - y) / (b - 10) * (b - a - 1) / (b - a);
    CHECK(v_fn({2}, std::vector<Rational>{a, b}, z, y) == expect);
}

TEST_CASE("V transforms under adjacent swaps") {
    Sampler s(41);
    const auto vals = s.generic(6);
    const std::vector<Rational> z(vals.begin(), vals.begin() + 3), t(vals.begin() + 3, vals.begin() + 5);
    CHECK(check_v_transforms({1}, std::vector<Rational>(t.begin(), t.begin() + 1), std::vector<Rational>{z[0], z[1]}, vals[5], 1));
    CHECK(check_v_transforms({}, t, z, vals[5], 2));
    for (const Subset& I : {Subset{1}, Subset{2}, Subset{1, 3}, Subset{2, 3}})
        for (int a = 1; a <= 2; ++a) CHECK(check_v_transforms(I, t, z, vals[5], a));
}

TEST_CASE("pqr triples and monomials") {
    CHECK(pqr_triples({1, 0, 0}).size() == 1);
    CHECK(pqr_triples({1, 2, 1}).size() == 5);
    CHECK(pqr_monomial({1, 2, 1}, {1, 1, 0}).key() == "[0,1,1,0,0,0]");
    CHECK(pqr_monomial({1, 2, 1}, {1, 1, 1}).key() == "[1,0,0,1,0,0]");
}

TEST_CASE("G function") {
    Sampler s(42);
    const auto pt = s.point({1, 2, 1});
    const auto& ctx = pt.context();
    CHECK(g_fn(choice_a({0, 0, 0}), pt.shape, pt.t, ctx.x, ctx.hw[2], ctx.hw[3]) == Rational(1));
    const Rational& t3 = pt.t.group(3)[0];
    CHECK(g_fn({{2}, {}, 0}, pt.shape, pt.t, ctx.x, ctx.hw[2], ctx.hw[3]) ==
          (t3 - ctx.x + ctx.hw[3]) / (t3 - pt.t.group(2)[1]));
}

TEST_CASE("closed-form G for choices (a) and (b) needs x = 0 and a sign flip of Lambda to match the general G") {
    Sampler s(43);
    auto pt = s.point({2, 1, 2});
    const Rational l2 = pt.hw[2], l3 = pt.hw[3];
    for (const auto& pqr : pqr_triples(pt.shape)) {
        CHECK(g_example_a(pqr, pt.shape, pt.t, l2, l3) == g_fn(choice_a(pqr), pt.shape, pt.t, Rational(0), -l2, -l3));
        CHECK(g_example_b(pqr, pt.shape, pt.t, l2, l3) == g_fn(choice_b(pqr), pt.shape, pt.t, Rational(0), -l2, -l3));
    }
    // Setting x = 0 alone is not enough.
    const PqrTriple pqr{1, 0, 0};
    CHECK(g_example_a(pqr, pt.shape, pt.t, l2, l3) != g_fn(choice_a(pqr), pt.shape, pt.t, Rational(0), l2, l3));
}

TEST_CASE("example (b) pairing differs from the general G once q >= 2") {
    Sampler s(44);
    const auto pt = s.point({2, 2, 0});
    const PqrTriple pqr{0, 2, 0};
    CHECK(g_example_b(pqr, pt.shape, pt.t, pt.hw[2], pt.hw[3]) !=
          g_fn_mirrored(choice_b(pqr), pt.shape, pt.t, Rational(0), pt.hw[2], pt.hw[3]));
}

TEST_CASE("mirrored inner t2-range agrees only for xi2 <= 1") {
    Sampler s(45);
    {
        const auto pt = s.point({2, 1, 2});
        const auto ctx = pt.context();
        for (const auto& pqr : pqr_triples(pt.shape))
            for (const auto& ch : all_choices(pqr, pt.shape.xi2))
                CHECK(g_fn(ch, pt.shape, pt.t, ctx.x, ctx.hw[2], ctx.hw[3]) ==
                      g_fn_mirrored(ch, pt.shape, pt.t, ctx.x, ctx.hw[2], ctx.hw[3]));
    }
    // With ξ2 = 2 the mirrored G breaks choice independence at (p,q,r) = (1,1,0).
    const auto pt = s.point({1, 2, 1});
    const auto ctx = pt.context();
    const PqrTriple pqr{1, 1, 0};
    auto mirrored = [&](const ChoiceSequences& ch) {
        return triple_sym([&](const Variables& t) { return g_fn_mirrored(ch, pt.shape, t, ctx.x, ctx.hw[2], ctx.hw[3]); },
                          pt.t);
    };
    CHECK(mirrored(choice_a(pqr)) != mirrored(choice_b(pqr)));
    CHECK(check_choice_independence(pt.shape, pt.t, ctx, choice_a(pqr), choice_b(pqr)));
}

TEST_CASE("engines agree with the direct engine") {
    Sampler s(46);
    for (const XiShape shape : {XiShape{0, 0, 0}, XiShape{1, 0, 0}, XiShape{0, 3, 0}, XiShape{0, 0, 2},
                                XiShape{1, 1, 0}, XiShape{1, 2, 1}, XiShape{2, 1, 0}}) {
        const auto pt = s.point(shape);
        const auto ctx = pt.context();
        EvalModule mod(ctx);
        const auto ref = weight_function_direct(shape, pt.t, mod);
        CHECK(weight_function_presym(shape, pt.t, ctx) == ref);
        CHECK(weight_function_main(shape, pt.t, ctx) == ref);
        CHECK(weight_function_main2(shape, pt.t, ctx) == ref);
        CHECK(weight_function_main(shape, pt.t, ctx, choice_b) == ref);
        CHECK(weight_function_main2(shape, pt.t, ctx, choice_b) == ref);
    }
}

TEST_CASE("coefficients ignore Lambda1 and Lambda4") {
    Sampler s(47);
    auto pt = s.point({1, 2, 1});
    const auto before = weight_function_main2(pt.shape, pt.t, pt.context());
    pt.hw.lam[0] += 13;
    pt.hw.lam[3] -= Rational(5, 7);
    CHECK(weight_function_main2(pt.shape, pt.t, pt.context()) == before);
}

TEST_CASE("choice independence on all pairs at (1,1,1), xi2 = 2") {
    Sampler s(48);
    const auto pt = s.point({1, 2, 1});
    const auto ctx = pt.context();
    const auto choices = all_choices({1, 1, 1}, 2);
    REQUIRE(choices.size() == 2);
    CHECK(check_choice_independence(pt.shape, pt.t, ctx, choices[0], choices[1]));
}

TEST_CASE("subset-pair identity normalization") {
    Sampler s(49);
    const auto vals = s.generic(7);
    const std::vector<Rational> t1{vals[0]}, t3{vals[1]}, z{vals[2], vals[3]};
    const auto rep = subset_pair_report(1, 1, 1, 2, t1, t3, z, vals[4], vals[5]);
    CHECK(rep.orbit_holds);
    CHECK_FALSE(rep.alt_holds.has_value());
    CHECK(check_subset_pair_identity(0, 0, 0, 2, t1, t3, z, vals[4], vals[5]));
    CHECK(check_subset_pair_identity(1, 1, 0, 2, t1, t3, z, vals[4], vals[5]));
    // At (1,1,1,3) both constants are defined, 2! against 0!.
    const std::vector<Rational> z3{vals[2], vals[3], vals[6]};
    const auto rep2 = subset_pair_report(1, 1, 1, 3, t1, t3, z3, vals[4], vals[5]);
    CHECK(rep2.orbit_holds);
    CHECK(rep2.alt_holds == std::optional<bool>(false));
}
