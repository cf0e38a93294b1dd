#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rgrec {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(long num, long den);
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(const mpz_class& integer) : value_(integer) {}
    explicit BigRational(mpq_class value);

    /// Accepts "a", "-a" and "a/b" in decimal.
    static BigRational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    /// Canonical "num/den" form; the denominator is always written.
    [[nodiscard]] std::string to_string() const;
    /// "num" for integers, "num/den" otherwise.
    [[nodiscard]] std::string to_short_string() const;

    [[nodiscard]] BigRational abs() const { return BigRational(mpq_class(::abs(value_))); }
    [[nodiscard]] BigRational pow(int exponent) const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Fused a += b * c without temporaries escaping to the caller.
    void add_product(const BigRational& b, const BigRational& c);

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace rgrec
