#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bethe {

/// Raised whenever a formula would divide by zero at the requested point.
/// The message names the vanishing denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class; every constructor and
/// arithmetic operation leaves the value canonicalized, so equality is
/// plain canonical-form equality.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<long>(n)) {}     // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q" (base 10). Throws std::invalid_argument
    /// on malformed input and PoleError when q is zero.
    static Rational parse(std::string_view text);

    /// Canonical "p/q" form, with "/q" omitted when q == 1.
    std::string str() const { return v_.get_str(10); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    /// 1/x; throws PoleError naming `what` when x is zero.
    Rational inverse(const char* what = "value") const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Returns `num / den`, throwing PoleError labelled `what` when den is zero.
inline Rational ratio(const Rational& num, const Rational& den, const char* what) {
    return num * den.inverse(what);
}

/// n! as a Rational. n must be nonnegative.
Rational factorial(int n);

}  // namespace bethe
