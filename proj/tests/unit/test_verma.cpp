#include "bethe/params.hpp"
#include "bethe/verma.hpp"
#include "doctest.h"

using namespace bethe;

namespace {

ModuleVector random_vector(Sampler& s) {
    ModuleVector v;
    for (int i = 0; i < 4; ++i) {
        PbwMonomial m;
        for (auto& e : m.m) e = std::uniform_int_distribution<int>(0, 1)(s.engine());
        v.add(m, s.nonzero());
    }
    return v;
}

}  // namespace

TEST_CASE("PBW monomial keys") {
    const auto m = PbwMonomial::of(1, 0, 2, 0, 3, 4);
    CHECK(m.key() == "[1,0,2,0,3,4]");
    CHECK(PbwMonomial::parse(m.key()) == m);
    CHECK(m.degree() == 10);
    CHECK_THROWS(PbwMonomial::parse("[1,2]"));
    CHECK_THROWS(PbwMonomial::parse("[1,2,3,4,5,-1]"));
}

TEST_CASE("generator action on the highest vector") {
    const HighestWeight hw{{Rational(3), Rational(1, 2), Rational(-7), Rational(11, 5)}};
    const auto v = ModuleVector::vacuum();
    for (int a = 1; a <= 4; ++a) {
        CHECK(act_generator(a, a, v, hw) == v * hw[a]);
        for (int b = a + 1; b <= 4; ++b) CHECK(act_generator(a, b, v, hw).is_zero());
    }
    const ModuleVector e43(PbwMonomial::of(0, 0, 0, 0, 0, 1), Rational(1));
    CHECK(act_generator(2, 1, e43, hw) == ModuleVector(PbwMonomial::of(0, 0, 0, 0, 1, 1), Rational(1)));
}

TEST_CASE("normal ordering by hand") {
    const HighestWeight hw{{Rational(2), Rational(5), Rational(1, 3), Rational(-4)}};
    CHECK(normal_order({}, hw) == ModuleVector::vacuum());
    // e21 e32 = e32 e21 + [e21, e32] and [e21, e32] = −e31.
    ModuleVector expect(PbwMonomial::of(1, 0, 0, 0, 1, 0), Rational(1));
    expect.add(PbwMonomial::of(0, 1, 0, 0, 0, 0), Rational(-1));
    CHECK(normal_order({{2, 1}, {3, 2}}, hw) == expect);
    CHECK(normal_order({{3, 2}, {1, 2}}, hw).is_zero());
    // e12 e21 v = [e12, e21] v = (Λ1 − Λ2) v.
    CHECK(normal_order({{1, 2}, {2, 1}}, hw) == ModuleVector::vacuum(hw[1] - hw[2]));
}

TEST_CASE("bracket consistency on random vectors") {
    Sampler s(21);
    const HighestWeight hw = s.highest_weight();
    VermaModule mod(hw);
    for (int trial = 0; trial < 3; ++trial) {
        const auto w = random_vector(s);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int c = 1; c <= 4; ++c)
                    for (int d = 1; d <= 4; ++d) {
                        const auto lhs = mod.act(a, b, mod.act(c, d, w)) - mod.act(c, d, mod.act(a, b, w));
                        ModuleVector rhs;
                        for (const auto& [coef, g] : bracket({a, b}, {c, d})) rhs += mod.act(g, w) * Rational(coef);
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("weights") {
    const HighestWeight hw{{Rational(1), Rational(2), Rational(3), Rational(4)}};
    CHECK(weight_of(PbwMonomial{}, hw) == hw.lam);
    CHECK(weight_of(PbwMonomial::of(0, 0, 0, 0, 1, 0), hw) ==
          std::array<Rational, 4>{Rational(0), Rational(3), Rational(3), Rational(4)});
    CHECK(weight_of(PbwMonomial::of(1, 0, 0, 0, 1, 0), hw) ==
          std::array<Rational, 4>{Rational(0), Rational(2), Rational(4), Rational(4)});

    Sampler s(22);
    VermaModule mod(s.highest_weight());
    const ModuleVector w(PbwMonomial::of(1, 0, 1, 0, 1, 0), Rational(1));
    const auto base = weight_of(PbwMonomial::of(1, 0, 1, 0, 1, 0), mod.highest_weight());
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const auto image = mod.act(a, b, w);
            for (const auto& [m, c] : image.terms()) {
                auto expect = base;
                expect[static_cast<std::size_t>(a - 1)] += 1;
                expect[static_cast<std::size_t>(b - 1)] -= 1;
                CHECK(weight_of(m, mod.highest_weight()) == expect);
            }
        }
}

TEST_CASE("distinct monomials stay independent") {
    Sampler s(23);
    VermaModule mod(s.highest_weight());
    // Applying each lowering generator to v in PBW order lands on exactly one basis monomial.
    const auto out = mod.normal_order({{3, 2}, {3, 1}, {4, 2}, {4, 1}, {2, 1}, {4, 3}});
    REQUIRE(out.size() == 1);
    CHECK(out.at(PbwMonomial::of(1, 1, 1, 1, 1, 1)) == Rational(1));
}
