#include "bethe/tensor.hpp"

namespace bethe {

Rational r_entry(int a, int b, int c, int d, const Rational& u) {
    const Rational inv_u = u.inverse("spectral parameter u of R(u)");
    Rational e(0);
    if (a == c && b == d) e += 1;
    if (a == d && b == c) e += inv_u;
    return e;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("dense matrix dimension mismatch");
    const std::size_t n = x.dim_;
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& ykj = y(k, j);
                if (!ykj.is_zero()) out(i, j) += xik * ykj;
            }
        }
    return out;
}

namespace {

std::vector<int> digits(std::size_t flat, int n, int rank) {
    std::vector<int> idx(static_cast<std::size_t>(rank));
    for (int p = rank - 1; p >= 0; --p) {
        idx[static_cast<std::size_t>(p)] = static_cast<int>(flat % static_cast<std::size_t>(n)) + 1;
        flat /= static_cast<std::size_t>(n);
    }
    return idx;
}

}  // namespace

DenseMatrix r_matrix_dense(int n, int rank, int pos_i, int pos_j, const Rational& u) {
    std::size_t dim = 1;
    for (int p = 0; p < rank; ++p) dim *= static_cast<std::size_t>(n);
    DenseMatrix m(dim);
    const auto pi = static_cast<std::size_t>(pos_i - 1);
    const auto pj = static_cast<std::size_t>(pos_j - 1);
    for (std::size_t row = 0; row < dim; ++row) {
        const auto r = digits(row, n, rank);
        for (std::size_t col = 0; col < dim; ++col) {
            const auto c = digits(col, n, rank);
            bool spectators_match = true;
            for (std::size_t p = 0; p < r.size(); ++p)
                if (p != pi && p != pj && r[p] != c[p]) spectators_match = false;
            if (!spectators_match) continue;
            m(row, col) = r_entry(r[pi], r[pj], c[pi], c[pj], u);
        }
    }
    return m;
}

bool check_yang_baxter(const Rational& u, const Rational& v, int n) {
    if (n != 2 && n != 4) throw std::invalid_argument("Yang-Baxter check supports n = 2 or 4");
    const Rational uv = u - v;
    const auto r12 = r_matrix_dense(n, 3, 1, 2, uv);
    const auto r13 = r_matrix_dense(n, 3, 1, 3, u);
    const auto r23 = r_matrix_dense(n, 3, 2, 3, v);
    return r12 * r13 * r23 == r23 * r13 * r12;
}

}  // namespace bethe
