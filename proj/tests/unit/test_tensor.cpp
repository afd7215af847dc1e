#include "bethe/params.hpp"
#include "bethe/tensor.hpp"
#include "doctest.h"

using namespace bethe;

namespace {

struct Scalar {
    Rational v;
    Scalar() = default;
    Scalar(Rational x) : v(std::move(x)) {}  // NOLINT(google-explicit-constructor)
    Scalar& operator+=(const Scalar& o) { v += o.v; return *this; }
    Scalar& operator-=(const Scalar& o) { v -= o.v; return *this; }
    Scalar& operator*=(const Rational& s) { v *= s; return *this; }
    bool is_zero() const { return v.is_zero(); }
    friend bool operator==(const Scalar&, const Scalar&) = default;
};

AuxState<Scalar> random_state(Sampler& s, int n, int rank) {
    AuxState<Scalar> st;
    for (int i = 0; i < 6; ++i) {
        AuxIndex idx;
        for (int p = 0; p < rank; ++p)
            idx.push_back(static_cast<std::uint8_t>(std::uniform_int_distribution<int>(1, n)(s.engine())));
        st.add(idx, Scalar(s.nonzero()));
    }
    return st;
}

}  // namespace

TEST_CASE("r_entry") {
    const Rational u(7, 3);
    CHECK(r_entry(1, 2, 1, 2, u) == Rational(1));
    CHECK(r_entry(1, 2, 2, 1, u) == Rational(3, 7));
    CHECK(r_entry(1, 1, 1, 1, u) == Rational(10, 7));
    CHECK(r_entry(1, 2, 3, 4, u) == Rational(0));
    CHECK_THROWS_AS(r_entry(1, 1, 1, 1, Rational(0)), PoleError);
}

TEST_CASE("apply_r diagonal, zero state and linearity") {
    const Rational u(5, 2);
    const AuxState<Scalar> st(AuxIndex{3, 3}, Scalar(Rational(1)));
    CHECK(apply_r(RFactor{1, 2, u}, st).at({3, 3}).v == Rational(1) + u.inverse());
    CHECK(apply_r(RFactor{1, 2, u}, AuxState<Scalar>{}).is_zero());

    Sampler s(3);
    const auto a = random_state(s, 4, 3), b = random_state(s, 4, 3);
    const Rational al = s.nonzero(), be = s.nonzero();
    const RFactor f{1, 3, u};
    CHECK(apply_r(f, a * al + b * be) == apply_r(f, a) * al + apply_r(f, b) * be);
}

TEST_CASE("apply_r agrees with the dense matrix") {
    Sampler s(4);
    const Rational u = s.nonzero();
    const auto d = r_matrix_dense(4, 2, 1, 2, u);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const auto out = apply_r(RFactor{1, 2, u}, AuxState<Scalar>(AuxIndex{std::uint8_t(a), std::uint8_t(b)},
                                                                         Scalar(Rational(1))));
            for (int c = 1; c <= 4; ++c)
                for (int e = 1; e <= 4; ++e)
                    CHECK(out.at({std::uint8_t(c), std::uint8_t(e)}).v ==
                          d(static_cast<std::size_t>((c - 1) * 4 + e - 1), static_cast<std::size_t>((a - 1) * 4 + b - 1)));
        }
}

TEST_CASE("unitarity R12(u) R21(-u) = (1 - 1/u^2) on the 16x16 level") {
    Sampler s(5);
    for (int n : {2, 4}) {
        const Rational u = s.nonzero();
        const std::size_t dim = static_cast<std::size_t>(n * n);
        const auto prod = r_matrix_dense(n, 2, 1, 2, u) * r_matrix_dense(n, 2, 2, 1, -u);
        DenseMatrix expect = DenseMatrix::identity(dim);
        for (std::size_t i = 0; i < dim; ++i) expect(i, i) = Rational(1) - (u * u).inverse();
        CHECK(prod == expect);

        const auto st = random_state(s, n, 2);
        auto back = apply_r(RFactor{2, 1, -u}, apply_r(RFactor{1, 2, u}, st));
        CHECK(back == st * (Rational(1) - (u * u).inverse()));
    }
}

TEST_CASE("R preserves the index multiset") {
    Sampler s(6);
    const auto st = random_state(s, 4, 4);
    const auto out = apply_r(RFactor{2, 4, Rational(3)}, st);
    for (const auto& [idx, c] : out.terms()) {
        auto sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        bool found = false;
        for (const auto& [src, c0] : st.terms()) {
            auto s2 = src;
            std::sort(s2.begin(), s2.end());
            if (s2 == sorted && src[0] == idx[0] && src[2] == idx[2]) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("Yang-Baxter") {
    CHECK(check_yang_baxter(Rational(5), Rational(2), 4));
    CHECK(check_yang_baxter(Rational(1, 3), Rational(1, 7), 2));
    CHECK_THROWS_AS(check_yang_baxter(Rational(2), Rational(2), 2), PoleError);
    CHECK_THROWS_AS(check_yang_baxter(Rational(2), Rational(1), 3), std::invalid_argument);
}
