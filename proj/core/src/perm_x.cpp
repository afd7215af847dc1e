#include "bethe/perm_x.hpp"

#include <stdexcept>

namespace bethe {

XRow x_row_word(std::span<const int> word, std::span<const Rational> z) {
    const int k = static_cast<int>(z.size());
    XRow row{{Permutation::identity(k), Rational(1)}};
    Permutation rho = Permutation::identity(k);
    for (int a : word) {
        if (a < 1 || a >= k) throw std::invalid_argument("word letter outside 1..k-1");
        const Rational d = z[static_cast<std::size_t>(rho(a) - 1)] - z[static_cast<std::size_t>(rho(a + 1) - 1)];
        const Rational inv = (d - 1).inverse("z_a - z_{a+1} - 1 in s-hat");
        const Rational c_swap = d * inv;
        const Rational c_keep = -inv;
        const auto sa = Permutation::simple(k, a);
        XRow next;
        for (const auto& [tau, x] : row) {
            next[tau * sa] += x * c_swap;
            next[tau] += x * c_keep;
        }
        row.clear();
        for (auto& [tau, x] : next)
            if (!x.is_zero()) row.emplace(tau, std::move(x));
        rho = rho * sa;
    }
    return row;
}

XRow x_row(const Permutation& sigma, std::span<const Rational> z) {
    if (sigma.size() != static_cast<int>(z.size())) throw std::invalid_argument("permutation and z sizes differ");
    const auto word = reduced_word(sigma);
    return x_row_word(word, z);
}

Rational x_coeff(const Permutation& sigma, const Permutation& tau, std::span<const Rational> z) {
    const auto row = x_row(sigma, z);
    auto it = row.find(tau);
    return it == row.end() ? Rational(0) : it->second;
}

Rational phi(std::span<const Rational> z) {
    Rational out(1);
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b) {
            const Rational d = z[a] - z[b];
            out *= ratio(d - 1, d, "z_a - z_b in Phi");
        }
    return out;
}

bool check_x_support(const Permutation& sigma, std::span<const Rational> z) {
    const int k = sigma.size();
    const auto row = x_row(sigma, z);
    for (const auto& [tau, x] : row) {
        if (tau.length() > sigma.length()) return false;
        if (tau.length() == sigma.length() && tau != sigma) return false;
    }
    const auto inv = sigma.inverse();
    Rational diag(1);
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            if (inv(a) > inv(b)) {
                const Rational d = z[static_cast<std::size_t>(a - 1)] - z[static_cast<std::size_t>(b - 1)];
                diag *= ratio(d, d - 1, "z_a - z_b - 1");
            }
    auto it = row.find(sigma);
    const Rational have = it == row.end() ? Rational(0) : it->second;
    return have == diag;
}

bool check_delta_identity(const Permutation& rho, const Permutation& tau, std::span<const Rational> z) {
    const int k = rho.size();
    const auto s0 = Permutation::longest(k);
    Rational sum(0);
    for (const auto& lambda : permutations(k)) {
        const Rational x1 = x_coeff(lambda, rho, z);
        if (x1.is_zero()) continue;
        const auto zl = permute(z, lambda * s0);
        sum += x1 * phi(zl) * x_coeff(s0 * lambda.inverse(), s0 * tau.inverse(), zl);
    }
    return sum == Rational(rho == tau ? 1 : 0);
}

bool check_x_recurrences(const Permutation& mu, const Permutation& sigma, int a, std::span<const Rational> z) {
    const int k = mu.size();
    const auto sa = Permutation::simple(k, a);
    const Rational d = z[static_cast<std::size_t>(a - 1)] - z[static_cast<std::size_t>(a)];

    // X_{μ,σ}(z^{s_a}) = d/(d+1) X_{s_aμ,s_aσ}(z) + 1/(d+1) X_{s_aμ,σ}(z)
    const auto zs = permute(z, sa);
    const Rational lhs1 = x_coeff(mu, sigma, zs);
    const Rational rhs1 = ratio(d, d + 1, "z_a - z_{a+1} + 1") * x_coeff(sa * mu, sa * sigma, z) +
                          (d + 1).inverse("z_a - z_{a+1} + 1") * x_coeff(sa * mu, sigma, z);

    // X_{μ,σ}(w) = d/(d−1) X_{μs_a,σs_a}(w) − 1/(d−1) X_{μs_a,σ}(w), w = z^{s_a μ⁻¹}
    const auto w = permute(z, sa * mu.inverse());
    const Rational lhs2 = x_coeff(mu, sigma, w);
    const Rational rhs2 = ratio(d, d - 1, "z_a - z_{a+1} - 1") * x_coeff(mu * sa, sigma * sa, w) -
                          (d - 1).inverse("z_a - z_{a+1} - 1") * x_coeff(mu * sa, sigma, w);
    return lhs1 == rhs1 && lhs2 == rhs2;
}

bool check_reduced_word_independence(const Permutation& sigma, std::span<const Rational> z) {
    const auto w1 = reduced_word(sigma);
    const auto w2 = reduced_word_left(sigma);
    return x_row_word(w1, z) == x_row_word(w2, z);
}

bool check_x_product(const Permutation& sigma, const Permutation& tau, const Permutation& rho,
                 std::span<const Rational> z) {
    const Rational lhs = x_coeff(sigma * tau, rho, z);
    const auto zs = permute(z, sigma);
    const auto row_sigma = x_row(sigma, z);
    const auto row_tau = x_row(tau, zs);
    Rational rhs(0);
    for (const auto& [pi, x] : row_sigma) {
        auto it = row_tau.find(pi.inverse() * rho);
        if (it != row_tau.end()) rhs += x * it->second;
    }
    return lhs == rhs;
}

}  // namespace bethe
