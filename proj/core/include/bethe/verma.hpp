#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// gl4 highest weight (Λ¹, Λ², Λ³, Λ⁴), stored 0-based.
struct HighestWeight {
    std::array<Rational, 4> lam;

    const Rational& operator[](int a) const { return lam[static_cast<std::size_t>(a - 1)]; }
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// A generator e_ab of gl4, 1 ≤ a, b ≤ 4.
struct Generator {
    int a = 1;
    int b = 1;
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Lowering generators in basis order: e32, e31, e42, e41, e21, e43.
inline constexpr std::array<Generator, 6> kPbwOrder{{{3, 2}, {3, 1}, {4, 2}, {4, 1}, {2, 1}, {4, 3}}};

/// Slot of a lowering generator in kPbwOrder, or -1 for any other e_ab.
int pbw_rank(Generator g);

/// Exponents (m32, m31, m42, m41, m21, m43) of
/// e32^m32 e31^m31 e42^m42 e41^m41 e21^m21 e43^m43 v.
struct PbwMonomial {
    std::array<int, 6> m{};

    int degree() const;
    bool is_vacuum() const { return degree() == 0; }
    /// "[m32,m31,m42,m41,m21,m43]"
    std::string key() const;
    static PbwMonomial parse(const std::string& key);
    static PbwMonomial of(int m32, int m31, int m42, int m41, int m21, int m43) {
        return PbwMonomial{{m32, m31, m42, m41, m21, m43}};
    }

    friend bool operator==(const PbwMonomial&, const PbwMonomial&) = default;
    friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

struct PbwMonomialHash {
    std::size_t operator()(const PbwMonomial& p) const noexcept;
};

/// Sparse element of the Verma module: PbwMonomial → Rational, no zeros.
class ModuleVector {
public:
    using Map = std::map<PbwMonomial, Rational>;

    ModuleVector() = default;
    ModuleVector(const PbwMonomial& mono, const Rational& c) { add(mono, c); }
    /// c·v
    static ModuleVector vacuum(const Rational& c = Rational(1)) { return ModuleVector(PbwMonomial{}, c); }

    void add(const PbwMonomial& mono, const Rational& c);
    Rational at(const PbwMonomial& mono) const;

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    ModuleVector& operator*=(const Rational& s);

    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(ModuleVector a, const Rational& s) { return a *= s; }
    friend ModuleVector operator*(const Rational& s, ModuleVector a) { return a *= s; }
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

    std::string str() const;

private:
    Map terms_;
};

/// gl4 weight of mono·v.
std::array<Rational, 4> weight_of(const PbwMonomial& mono, const HighestWeight& hw);

/// [e_ab, e_cd] = δ_bc e_ad − δ_ad e_cb, as a list of (coefficient, generator).
std::vector<std::pair<int, Generator>> bracket(Generator x, Generator y);

/// The Verma module M(Λ) with a memoized generator action on PBW monomials.
/// Not thread-safe: the cache is filled lazily.
class VermaModule {
public:
    explicit VermaModule(HighestWeight hw) : hw_(std::move(hw)) {}

    const HighestWeight& highest_weight() const { return hw_; }

    /// e_ab · vec re-expressed in the PBW basis.
    ModuleVector act(Generator g, const ModuleVector& vec);
    ModuleVector act(int a, int b, const ModuleVector& vec) { return act(Generator{a, b}, vec); }

    /// letters[0] · letters[1] ⋯ letters[n−1] · v.
    ModuleVector normal_order(const std::vector<Generator>& letters);

    std::size_t cache_size() const { return cache_.size(); }

private:
    const ModuleVector& act_mono(Generator g, const PbwMonomial& mono);

    struct Key {
        int g;
        PbwMonomial mono;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    HighestWeight hw_;
    std::unordered_map<Key, ModuleVector, KeyHash> cache_;
};

/// Free-function form; builds a throwaway module, so prefer VermaModule for
/// repeated use.
ModuleVector act_generator(int a, int b, const ModuleVector& vec, const HighestWeight& hw);
ModuleVector normal_order(const std::vector<Generator>& word, const HighestWeight& hw);

}  // namespace bethe
