#include "bethe/subsets.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace bethe {

std::vector<Subset> subsets_of_size(int k, int m) {
    std::vector<Subset> out;
    if (m < 0 || m > k) return out;
    Subset cur(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == k - m + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int intersection_size(const Subset& a, const Subset& b) {
    Subset both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
}

std::vector<SubsetPair> subset_pairs(int p, int q, int r, int k) {
    std::vector<SubsetPair> out;
    if (p < 0 || q < 0 || r < 0 || k < 0) return out;
    const auto Is = subsets_of_size(k, p);
    const auto Js = subsets_of_size(k, q);
    for (const auto& I : Is)
        for (const auto& J : Js)
            if (intersection_size(I, J) == r) out.push_back({I, J, k});
    return out;
}

Subset apply(const Permutation& sigma, const Subset& I) {
    Subset out;
    out.reserve(I.size());
    for (int i : I) {
        if (i < 1 || i > sigma.size()) throw std::invalid_argument("subset element outside permutation range");
        out.push_back(sigma(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subset reversed_subset(const Subset& I, int k) {
    Subset out;
    out.reserve(I.size());
    for (int i : I) out.push_back(k - i + 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

}  // namespace bethe
