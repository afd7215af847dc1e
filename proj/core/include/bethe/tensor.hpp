#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bethe/rational.hpp"
#include "bethe/symmetrize.hpp"

namespace bethe {

/// Multi-index labelling a basis vector of (ℂⁿ)^{⊗N}; entries are 1..n.
using AuxIndex = std::vector<std::uint8_t>;

/// Coefficient types an AuxState can carry.
template <class C>
concept AuxCoefficient = RationalModule<C> && requires(const C& c) {
    { c.is_zero() } -> std::convertible_to<bool>;
};

/// Sparse vector in (ℂⁿ)^{⊗N} ⊗ M, stored as AuxIndex → C with no zero
/// coefficients. C is Rational for scalar work and ModuleVector when the
/// auxiliary space is tensored with a module.
template <AuxCoefficient C>
class AuxState {
public:
    using Map = std::map<AuxIndex, C>;

    AuxState() = default;
    AuxState(AuxIndex idx, C c) { add(std::move(idx), std::move(c)); }

    void add(const AuxIndex& idx, const C& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficient at `idx`, or zero.
    C at(const AuxIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? C{} : it->second;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    AuxState& operator+=(const AuxState& o) {
        for (const auto& [idx, c] : o.terms_) add(idx, c);
        return *this;
    }
    AuxState& operator-=(const AuxState& o) {
        for (const auto& [idx, c] : o.terms_) {
            C neg = c;
            neg *= Rational(-1);
            add(idx, neg);
        }
        return *this;
    }
    AuxState& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [idx, c] : terms_) c *= s;
        return *this;
    }

    friend AuxState operator+(AuxState a, const AuxState& b) { return a += b; }
    friend AuxState operator-(AuxState a, const AuxState& b) { return a -= b; }
    friend AuxState operator*(AuxState a, const Rational& s) { return a *= s; }
    friend AuxState operator*(const Rational& s, AuxState a) { return a *= s; }
    friend bool operator==(const AuxState& a, const AuxState& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

/// R^{(i,j)}(u) acting on tensor positions i and j (1-based).
struct RFactor {
    int pos_i = 0;
    int pos_j = 0;
    Rational u;
};

/// R^{ab}_{cd}(u) = δ_{ac}δ_{bd} + δ_{ad}δ_{bc}/u.
Rational r_entry(int a, int b, int c, int d, const Rational& u);

/// Applies R^{(i,j)}(u) = 1 + P^{(ij)}/u to `state`.
template <AuxCoefficient C>
AuxState<C> apply_r(const RFactor& f, const AuxState<C>& state) {
    if (f.pos_i == f.pos_j) throw std::invalid_argument("R-factor positions must differ");
    const Rational inv_u = f.u.inverse("spectral parameter u of R(u)");
    AuxState<C> out;
    const auto pi = static_cast<std::size_t>(f.pos_i - 1);
    const auto pj = static_cast<std::size_t>(f.pos_j - 1);
    for (const auto& [idx, c] : state.terms()) {
        if (pi >= idx.size() || pj >= idx.size())
            throw std::out_of_range("R-factor position beyond tensor rank");
        out.add(idx, c);
        AuxIndex swapped = idx;
        std::swap(swapped[pi], swapped[pj]);
        C scaled = c;
        scaled *= inv_u;
        out.add(swapped, scaled);
    }
    return out;
}

/// Dense square matrix of Rationals, used for small matrix-level identities.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
    friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) { return x.dim_ == y.dim_ && x.a_ == y.a_; }

private:
    std::size_t dim_;
    std::vector<Rational> a_;
};

/// Dense matrix of R^{(i,j)}(u) on (ℂⁿ)^{⊗rank}, built entrywise from r_entry.
/// Row/column index = Σ (idx_p − 1)·n^{rank−p}.
DenseMatrix r_matrix_dense(int n, int rank, int pos_i, int pos_j, const Rational& u);

/// R¹²(u−v)R¹³(u)R²³(v) == R²³(v)R¹³(u)R¹²(u−v) as n³×n³ matrices.
bool check_yang_baxter(const Rational& u, const Rational& v, int n);

}  // namespace bethe
