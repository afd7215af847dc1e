#pragma once

#include <cstddef>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// Element of the symmetric group S_k, stored by its images σ(1), …, σ(k).
///
/// All indices are 1-based to match the usual notation. Composition is
/// (σ·τ)(i) = σ(τ(i)), and for a tuple z the permuted tuple z^σ has
/// entries (z^σ)_i = z_{σ(i)}, so (z^σ)^τ = z^{στ}.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection of {1..k}.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int k);
    /// The longest element σ0(i) = k − i + 1.
    static Permutation longest(int k);
    /// The simple transposition s_a exchanging a and a+1, 1 ≤ a < k.
    static Permutation simple(int k, int a);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// Number of inversions.
    int length() const;
    bool is_identity() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string str() const;

private:
    std::vector<int> images_;
};

/// z^σ with (z^σ)_i = z_{σ(i)}.
template <class T>
std::vector<T> permute(std::span<const T> z, const Permutation& sigma) {
    std::vector<T> out;
    out.reserve(z.size());
    for (int i = 1; i <= sigma.size(); ++i) out.push_back(z[static_cast<std::size_t>(sigma(i) - 1)]);
    return out;
}

template <class T>
std::vector<T> permute(const std::vector<T>& z, const Permutation& sigma) {
    return permute(std::span<const T>(z), sigma);
}

/// Streams all k! permutations of S_k by adjacent transpositions
/// (Steinhaus–Johnson–Trotter with Even's speedup). Non-recursive; the
/// order is fixed, so runs are reproducible.
class PermutationStream {
public:
    explicit PermutationStream(int k);

    const Permutation& current() const { return current_; }
    /// Advances to the next permutation; false once all k! have been produced.
    bool next();

private:
    Permutation current_;
    std::vector<int> perm_;   // values 1..k
    std::vector<int> dir_;    // -1 left, +1 right, 0 stuck
    bool done_ = false;
};

/// All permutations of S_k in stream order.
std::vector<Permutation> permutations(int k);

/// A reduced word for σ: indices a_1 … a_ℓ with σ = s_{a_1} ⋯ s_{a_ℓ} and
/// ℓ = length(σ). Built by peeling right descents (σ(a) > σ(a+1)).
std::vector<int> reduced_word(const Permutation& sigma);

/// A second reduced word for σ, built by peeling left descents
/// (σ⁻¹(a) > σ⁻¹(a+1)). Generally differs from reduced_word().
std::vector<int> reduced_word_left(const Permutation& sigma);

/// Product s_{a_1} ⋯ s_{a_ℓ} in S_k.
Permutation from_word(int k, std::span<const int> word);

}  // namespace bethe
