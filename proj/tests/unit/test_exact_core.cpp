#include <set>

#include "bethe/params.hpp"
#include "bethe/permutation.hpp"
#include "bethe/rational.hpp"
#include "bethe/subsets.hpp"
#include "bethe/symmetrize.hpp"
#include "doctest.h"

using namespace bethe;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), PoleError);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(0).inverse("zero"), PoleError);
    CHECK(factorial(5) == Rational(120));
}

TEST_CASE("rational arithmetic is exact") {
    Sampler s(7);
    for (int i = 0; i < 50; ++i) {
        const Rational a = s.small(), c = s.nonzero();
        CHECK((a + c) - c == a);
        CHECK((a * c) / c == a);
    }
}

TEST_CASE("q_factor") {
    CHECK(q_factor(std::vector<Rational>{}) == Rational(1));
    CHECK(q_factor(std::vector<Rational>{Rational(4)}) == Rational(1));
    CHECK(q_factor(std::vector<Rational>{Rational(3), Rational(1)}) == Rational(1, 2));
    CHECK_THROWS_AS(q_factor(std::vector<Rational>{Rational(2), Rational(2)}), PoleError);
}

TEST_CASE("sym and sym_bar") {
    const std::vector<Rational> three{Rational(1), Rational(5), Rational(-2)};
    CHECK(sym([](std::span<const Rational>) { return Rational(4); }, three) == Rational(24));
    const std::vector<Rational> two{Rational(2), Rational(5)};
    CHECK(sym([](std::span<const Rational> t) { return t[0] - t[1]; }, two) == Rational(0));
    CHECK(sym([](std::span<const Rational> t) { return t[0]; }, two) == Rational(7));

    CHECK(sym_bar([](std::span<const Rational>) { return Rational(1); }, std::vector<Rational>{}) == Rational(1));
    // f = 1/(t1 − 7) at (2, 5): Q(2,5) = (−4)/(−3), Q(5,2) = 2/3.
    const Rational expect = Rational(1, -5) * Rational(4, 3) + Rational(1, -2) * Rational(2, 3);
    CHECK(sym_bar([](std::span<const Rational> t) { return (t[0] - 7).inverse(); }, two) == expect);
}

TEST_CASE("factorial identity") {
    CHECK(check_factorial_identity(std::vector<Rational>{Rational(0)}));
    CHECK(check_factorial_identity(std::vector<Rational>{Rational(0), Rational(2)}));
    Sampler s(11);
    CHECK(check_factorial_identity(s.generic(5)));
}

TEST_CASE("subset pairs") {
    CHECK(subset_pairs(0, 0, 0, 3).size() == 1);
    const auto p = subset_pairs(1, 1, 1, 2);
    REQUIRE(p.size() == 2);
    CHECK(p[0].I == Subset{1});
    CHECK(p[0].J == Subset{1});
    CHECK(p[1].I == Subset{2});
    CHECK(p[1].J == Subset{2});
    CHECK(subset_pairs(2, 2, 0, 3).empty());
    for (int k = 0; k <= 5; ++k)
        for (int pp = 0; pp <= k; ++pp)
            for (int q = 0; q <= k; ++q)
                for (int r = 0; r <= std::min(pp, q); ++r) {
                    const long expect = binom(k, r) * binom(k - r, pp - r) * binom(k - pp, q - r);
                    CHECK(static_cast<long>(subset_pairs(pp, q, r, k).size()) == expect);
                }
}

TEST_CASE("subset pairs form one orbit") {
    const int k = 4;
    const auto pairs = subset_pairs(2, 2, 1, k);
    std::set<SubsetPair> orbit;
    for (const auto& sigma : permutations(k)) {
        SubsetPair img{apply(sigma, pairs.front().I), apply(sigma, pairs.front().J), k};
        orbit.insert(img);
    }
    CHECK(orbit == std::set<SubsetPair>(pairs.begin(), pairs.end()));
}

TEST_CASE("permutation enumeration") {
    CHECK(permutations(0).size() == 1);
    CHECK(permutations(3).size() == 6);
    const auto p4 = permutations(4);
    CHECK(std::set<Permutation>(p4.begin(), p4.end()).size() == 24);
}

TEST_CASE("permutation algebra and reduced words") {
    const Permutation a{2, 3, 1};
    const Permutation b{1, 3, 2};
    CHECK((a * b)(2) == a(b(2)));
    CHECK(a * a.inverse() == Permutation::identity(3));
    CHECK(Permutation::longest(4).length() == 6);
    for (const auto& s : permutations(4)) {
        const auto w = reduced_word(s);
        CHECK(static_cast<int>(w.size()) == s.length());
        CHECK(from_word(4, w) == s);
        CHECK(from_word(4, reduced_word_left(s)) == s);
    }
    const std::vector<int> z{10, 20, 30};
    CHECK(permute(z, a) == std::vector<int>{20, 30, 10});
}
