#pragma once

#include <map>
#include <span>
#include <vector>

#include "bethe/permutation.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// Coefficients τ ↦ X_{σ,τ}(z) of σ̂ = Σ_τ X_{σ,τ}(z) τ̈ σ̇ for one σ.
using XRow = std::map<Permutation, Rational>;

/// Expands ŝ_{a_1} ⋯ ŝ_{a_ℓ} left to right, where
///   ŝ_a = ((z_a − z_{a+1})/(z_a − z_{a+1} − 1) s̈_a − 1/(z_a − z_{a+1} − 1)) ṡ_a
/// and ρ̇ f(z) = f(z^ρ) ρ̇ moves coefficients past the accumulated prefix ρ.
XRow x_row_word(std::span<const int> word, std::span<const Rational> z);

/// Row of σ via reduced_word(σ).
XRow x_row(const Permutation& sigma, std::span<const Rational> z);

/// X_{σ,τ}(z).
Rational x_coeff(const Permutation& sigma, const Permutation& tau, std::span<const Rational> z);

/// Φ(z) = ∏_{a<b} (z_a − z_b − 1)/(z_a − z_b).
Rational phi(std::span<const Rational> z);

/// Support bound, diagonal-only at equal length, and the product formula
/// for X_{σ,σ}, all for one σ.
bool check_x_support(const Permutation& sigma, std::span<const Rational> z);

/// Σ_λ X_{λ,ρ}(z) Φ(z^{λσ0}) X_{σ0λ⁻¹, σ0τ⁻¹}(z^{λσ0}) == δ_{ρ,τ}.
bool check_delta_identity(const Permutation& rho, const Permutation& tau, std::span<const Rational> z);

/// The two one-step recurrences relating X at z^{s_a} (resp. z^{s_a μ⁻¹})
/// to X at s_aμ / μs_a.
bool check_x_recurrences(const Permutation& mu, const Permutation& sigma, int a, std::span<const Rational> z);

/// X_{σ,·}(z) agrees for the two reduced words of σ.
bool check_reduced_word_independence(const Permutation& sigma, std::span<const Rational> z);

/// X_{στ,ρ}(z) == Σ_π X_{σ,π}(z) X_{τ,π⁻¹ρ}(z^σ).
bool check_x_product(const Permutation& sigma, const Permutation& tau, const Permutation& rho,
                 std::span<const Rational> z);

}  // namespace bethe
