#include "bethe/symmetrize.hpp"

namespace bethe {

Rational q_factor(std::span<const Rational> ts) {
    Rational q(1);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            const Rational d = ts[i] - ts[j];
            q *= ratio(d - 1, d, "t_i - t_j in Q_m");
        }
    return q;
}

bool check_factorial_identity(std::span<const Rational> xs) {
    const Rational total = sym_bar([](std::span<const Rational>) { return Rational(1); }, xs);
    return total == factorial(static_cast<int>(xs.size()));
}

}  // namespace bethe
