#include "bethe/rational.hpp"

#include <ostream>

namespace bethe {

Rational::Rational(long num, long den) {
    if (den == 0) throw PoleError("zero denominator in rational literal");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string part) {
        if (!part.empty() && part[0] == '+') part.erase(0, 1);
        return part;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw std::invalid_argument("malformed rational: '" + s + "'");
        return Rational(mpq_class(mpz_class(strip_plus(s), 10)));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("malformed rational: '" + s + "'");
    mpz_class d(strip_plus(den), 10);
    if (d == 0) throw PoleError("zero denominator in '" + s + "'");
    return Rational(mpq_class(mpz_class(strip_plus(num), 10), d));
}

Rational Rational::inverse(const char* what) const {
    if (is_zero()) throw PoleError(std::string(what) + " vanishes");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), v_.get_mpq_t());
    return Rational(inv);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PoleError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(f));
}

}  // namespace bethe
