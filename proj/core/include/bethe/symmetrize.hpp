#pragma once

#include <concepts>
#include <span>
#include <type_traits>
#include <vector>

#include "bethe/permutation.hpp"
#include "bethe/rational.hpp"

namespace bethe {

/// Q_m(t) = ∏_{i<j} (t_i − t_j − 1)/(t_i − t_j). Throws PoleError on
/// coincident entries.
Rational q_factor(std::span<const Rational> ts);

/// Anything that can be accumulated and scaled by a Rational: Rational
/// itself, ModuleVector, AuxState<…>.
template <class V>
concept RationalModule = std::default_initializable<V> && requires(V a, const V& b, const Rational& c) {
    { a += b } -> std::same_as<V&>;
    { a *= c } -> std::same_as<V&>;
};

/// Σ_{σ ∈ S_m} f(t_{σ(1)}, …, t_{σ(m)}). `f` receives the permuted tuple.
template <class F>
auto sym(F&& f, std::span<const Rational> ts) {
    using V = std::decay_t<std::invoke_result_t<F&, std::span<const Rational>>>;
    static_assert(RationalModule<V>);
    V total{};
    PermutationStream s(static_cast<int>(ts.size()));
    do {
        const auto perm = permute(ts, s.current());
        total += f(std::span<const Rational>(perm));
    } while (s.next());
    return total;
}

/// Σ_σ f(t^σ) · Q_m(t^σ).
template <class F>
auto sym_bar(F&& f, std::span<const Rational> ts) {
    using V = std::decay_t<std::invoke_result_t<F&, std::span<const Rational>>>;
    static_assert(RationalModule<V>);
    V total{};
    PermutationStream s(static_cast<int>(ts.size()));
    do {
        const auto perm = permute(ts, s.current());
        const std::span<const Rational> view(perm);
        V term = f(view);
        term *= q_factor(view);
        total += term;
    } while (s.next());
    return total;
}

template <class F>
auto sym(F&& f, const std::vector<Rational>& ts) {
    return sym(std::forward<F>(f), std::span<const Rational>(ts));
}

template <class F>
auto sym_bar(F&& f, const std::vector<Rational>& ts) {
    return sym_bar(std::forward<F>(f), std::span<const Rational>(ts));
}

/// True iff Σ_{τ∈S_n} ∏_{i<j} (x_{τ(i)} − x_{τ(j)} − 1)/(x_{τ(i)} − x_{τ(j)}) = n!.
bool check_factorial_identity(std::span<const Rational> xs);

}  // namespace bethe
