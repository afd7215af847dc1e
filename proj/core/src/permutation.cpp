#include "bethe/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bethe {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..k: " + str());
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::longest(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) im[static_cast<std::size_t>(i)] = k - i;
    return Permutation(std::move(im));
}

Permutation Permutation::simple(int k, int a) {
    if (a < 1 || a >= k) throw std::invalid_argument("simple transposition index out of range");
    auto p = identity(k);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(a)]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

int Permutation::length() const {
    int n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++n;
    return n;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different size");
    Permutation p;
    p.images_.resize(b.images_.size());
    for (int i = 1; i <= b.size(); ++i) p.images_[static_cast<std::size_t>(i - 1)] = a(b(i));
    return p;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

PermutationStream::PermutationStream(int k) {
    if (k < 0) throw std::invalid_argument("negative permutation size");
    perm_.resize(static_cast<std::size_t>(k));
    std::iota(perm_.begin(), perm_.end(), 1);
    dir_.assign(static_cast<std::size_t>(k), -1);
    if (k > 0) dir_[0] = 0;
    current_ = Permutation(perm_);
}

bool PermutationStream::next() {
    if (done_) return false;
    const std::size_t n = perm_.size();
    // Largest element with a nonzero direction moves one step.
    std::size_t pos = n;
    for (std::size_t i = 0; i < n; ++i)
        if (dir_[i] != 0 && (pos == n || perm_[i] > perm_[pos])) pos = i;
    if (pos == n) {
        done_ = true;
        return false;
    }
    const std::size_t to = dir_[pos] < 0 ? pos - 1 : pos + 1;
    std::swap(perm_[pos], perm_[to]);
    std::swap(dir_[pos], dir_[to]);
    const int moved = perm_[to];
    if (to == 0 || to == n - 1 ||
        perm_[dir_[to] < 0 ? to - 1 : to + 1] > moved)
        dir_[to] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (perm_[i] > moved) dir_[i] = i < to ? 1 : -1;
    }
    current_ = Permutation(perm_);
    return true;
}

std::vector<Permutation> permutations(int k) {
    std::vector<Permutation> out;
    PermutationStream s(k);
    do out.push_back(s.current());
    while (s.next());
    return out;
}

std::vector<int> reduced_word(const Permutation& sigma) {
    std::vector<int> word;
    auto p = sigma;
    const int k = p.size();
    // σ = (σ s_a) s_a when σ(a) > σ(a+1); collect letters right to left.
    for (bool found = true; found;) {
        found = false;
        for (int a = 1; a < k; ++a) {
            if (p(a) > p(a + 1)) {
                word.push_back(a);
                p = p * Permutation::simple(k, a);
                found = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> reduced_word_left(const Permutation& sigma) {
    std::vector<int> word;
    auto p = sigma;
    const int k = p.size();
    // σ = s_a (s_a σ) when σ⁻¹(a) > σ⁻¹(a+1); peel from the right end of {1..k}.
    for (bool found = true; found;) {
        found = false;
        const auto inv = p.inverse();
        for (int a = k - 1; a >= 1; --a) {
            if (inv(a) > inv(a + 1)) {
                word.push_back(a);
                p = Permutation::simple(k, a) * p;
                found = true;
                break;
            }
        }
    }
    return word;
}

Permutation from_word(int k, std::span<const int> word) {
    auto p = Permutation::identity(k);
    for (int a : word) p = p * Permutation::simple(k, a);
    return p;
}

}  // namespace bethe
