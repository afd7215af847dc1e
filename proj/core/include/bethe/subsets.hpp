#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bethe/permutation.hpp"

namespace bethe {

/// Sorted subset of {1..k}.
using Subset = std::vector<int>;

/// A pair (I, J) of sorted subsets of {1..k}.
struct SubsetPair {
    Subset I;
    Subset J;
    int k = 0;

    friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
    friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
};

/// All sorted subsets of {1..k} of size m, in lexicographic order.
std::vector<Subset> subsets_of_size(int k, int m);

/// All pairs (I, J) with |I| = p, |J| = q, |I ∩ J| = r. Empty when the
/// constraints cannot be met.
std::vector<SubsetPair> subset_pairs(int p, int q, int r, int k);

/// σ(I) = {σ(i) : i ∈ I}, returned sorted.
Subset apply(const Permutation& sigma, const Subset& I);

/// Ǐ = {k − i + 1 : i ∈ I}, returned sorted.
Subset reversed_subset(const Subset& I, int k);

int intersection_size(const Subset& a, const Subset& b);

std::string to_string(const Subset& s);

}  // namespace bethe
