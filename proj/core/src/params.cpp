#include "bethe/params.hpp"

namespace bethe {

std::vector<Rational> ParamPoint::spectral_values() const {
    std::vector<Rational> out;
    for (int a = 1; a <= 3; ++a) out.insert(out.end(), t.group(a).begin(), t.group(a).end());
    out.push_back(x);
    return out;
}

bool generic_position(const std::vector<Rational>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const Rational d = values[i] - values[j];
            if (d.is_zero() || d == Rational(1) || d == Rational(-1)) return false;
        }
    return true;
}

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::small() { return Rational(uniform(-40, 40), uniform(1, 6)); }

Rational Sampler::nonzero() {
    for (;;) {
        Rational r = small();
        if (!r.is_zero()) return r;
    }
}

Rational Sampler::weight() { return Rational(uniform(-9999, 9999), uniform(1, 97)); }

HighestWeight Sampler::highest_weight() {
    HighestWeight hw;
    for (auto& l : hw.lam) l = weight();
    return hw;
}

std::vector<Rational> Sampler::generic(std::size_t n, const std::vector<Rational>& avoid) {
    for (;;) {
        std::vector<Rational> all = avoid;
        std::vector<Rational> fresh;
        for (std::size_t i = 0; i < n; ++i) fresh.push_back(small());
        all.insert(all.end(), fresh.begin(), fresh.end());
        if (generic_position(all)) return fresh;
    }
}

ParamPoint Sampler::point(const XiShape& shape) {
    shape.validate();
    ParamPoint p;
    p.shape = shape;
    p.hw = highest_weight();
    auto vals = generic(static_cast<std::size_t>(shape.total()) + 1);
    p.x = vals.back();
    std::size_t n = 0;
    for (int a = 1; a <= 3; ++a)
        for (int i = 0; i < shape[a]; ++i) p.t.group(a).push_back(vals[n++]);
    return p;
}

}  // namespace bethe
