#include "rgrec/rational.hpp"

#include <cctype>

#include "rgrec/errors.hpp"

namespace rgrec {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_decimal_integer(s)) throw ParseError("not a decimal integer: '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

BigRational::BigRational(long num, long den) : value_(num, den)
{
    if (den == 0) throw DomainError("zero denominator");
    value_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : value_(num, den)
{
    if (den == 0) throw DomainError("zero denominator");
    value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    const mpz_class num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("signed denominator: '" + std::string(text) + "'");
    const mpz_class den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return BigRational(num, den);
}

std::string BigRational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_short_string() const
{
    return is_integer() ? value_.get_num().get_str() : to_string();
}

BigRational BigRational::pow(int exponent) const
{
    if (exponent < 0) {
        if (is_zero()) throw DomainError("negative power of zero");
        return BigRational(1) / pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero()) throw DomainError("division by zero");
    mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

void BigRational::add_product(const BigRational& b, const BigRational& c)
{
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), b.value_.get_mpq_t(), c.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const BigRational& q)
{
    return os << q.to_short_string();
}

mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace rgrec
