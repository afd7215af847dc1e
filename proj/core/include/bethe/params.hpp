#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bethe/rational.hpp"
#include "bethe/verma.hpp"
#include "bethe/yangian.hpp"

namespace bethe {

/// Exact values for t, x and Λ at which every engine is pole-free.
struct ParamPoint {
    XiShape shape;
    Variables t;
    Rational x;
    HighestWeight hw;

    EvalModuleContext context() const { return {hw, x}; }
    /// All t-entries followed by x.
    std::vector<Rational> spectral_values() const;
};

/// True iff no two of `values` differ by 0 or ±1.
bool generic_position(const std::vector<Rational>& values);

/// Seeded source of small-height rationals. Same seed, same sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// num/den with |num| ≤ 40, 1 ≤ den ≤ 6.
    Rational small();
    /// Nonzero small() value.
    Rational nonzero();
    /// A generic weight entry, |num| ≤ 9999, 1 ≤ den ≤ 97.
    Rational weight();
    HighestWeight highest_weight();
    /// n values, pairwise differences outside {0, ±1}, also away from `avoid`.
    std::vector<Rational> generic(std::size_t n, const std::vector<Rational>& avoid = {});
    /// A point for `shape`: t and x jointly in generic position.
    ParamPoint point(const XiShape& shape);

    std::mt19937_64& engine() { return rng_; }

private:
    long uniform(long lo, long hi);
    std::mt19937_64 rng_;
};

}  // namespace bethe
