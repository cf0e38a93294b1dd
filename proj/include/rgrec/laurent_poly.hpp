#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rgrec/rational.hpp"

namespace rgrec {

/// Exponent tuple of one Laurent monomial. Storage is inline; the number
/// of variables is bounded by kMaxVars.
class ExponentVector {
public:
    static constexpr std::size_t kMaxVars = 16;
    using value_type = std::int32_t;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t nvars);
    ExponentVector(std::initializer_list<value_type> exps);
    explicit ExponentVector(std::span<const value_type> exps);

    [[nodiscard]] std::size_t size() const { return size_; }
    value_type& operator[](std::size_t i) { return exps_[i]; }
    const value_type& operator[](std::size_t i) const { return exps_[i]; }

    [[nodiscard]] std::span<const value_type> view() const { return {exps_.data(), size_}; }
    [[nodiscard]] value_type total_degree() const;

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector& a, const ExponentVector& b)
    {
        return a.size_ == b.size_ && a.exps_ == b.exps_;
    }
    // Lexicographic over the slots; shorter vectors first.
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

    [[nodiscard]] std::size_t hash() const;

private:
    std::array<value_type, kMaxVars> exps_{};
    std::size_t size_ = 0;
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

/// Sparse multivariate Laurent polynomial over BigRational. Variables are
/// addressed by zero-based slot. No zero coefficient is ever stored, and
/// terms iterate in lexicographic exponent order.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, BigRational>;

    explicit LaurentPoly(std::size_t nvars = 1);

    static LaurentPoly constant(std::size_t nvars, const BigRational& c);
    static LaurentPoly monomial(const ExponentVector& exps, const BigRational& c = 1);
    /// The single variable t_slot.
    static LaurentPoly variable(std::size_t nvars, std::size_t slot);
    /// Sum of c * t_slot^k over the given (k, c) pairs.
    static LaurentPoly univariate(std::size_t nvars, std::size_t slot,
                                  std::initializer_list<std::pair<int, BigRational>> terms);

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }

    /// Accumulates c into the coefficient of exps.
    void add_term(const ExponentVector& exps, const BigRational& c);
    [[nodiscard]] BigRational coefficient(const ExponentVector& exps) const;

    [[nodiscard]] int max_total_degree() const;
    [[nodiscard]] int min_total_degree() const;
    /// Terms of exactly the given total degree.
    [[nodiscard]] LaurentPoly homogeneous_part(int degree) const;

    /// Full evaluation; throws PoleError on 0 raised to a negative power.
    [[nodiscard]] BigRational evaluate(std::span<const BigRational> point) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const BigRational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
    friend LaurentPoly operator*(const BigRational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Human-readable form, e.g. "-1/16*t1*t2*t3 + ...".
    [[nodiscard]] std::string to_string() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

enum class ArithOp { add, sub, mul };
/// a op b; throws VariableCountError when the variable counts differ.
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

/// d/dt_slot, termwise.
LaurentPoly differentiate(const LaurentPoly& p, std::size_t slot);

/// Termwise antiderivative in t_slot with zero constant of integration.
/// Throws LogTermError if any monomial carries t_slot^{-1}.
LaurentPoly antiderivative(const LaurentPoly& p, std::size_t slot);

/// Substitutes t_slot := value. The result has nvars - 1 variables (slots
/// above `slot` shift down by one). For a univariate p the result is a
/// one-variable constant polynomial.
LaurentPoly evaluate_partial(const LaurentPoly& p, std::size_t slot, const BigRational& value);

/// Moves old slot i to new slot slot_map[i] in a frame of new_nvars
/// variables. slot_map must be injective.
LaurentPoly relabel(const LaurentPoly& p, std::span<const std::size_t> slot_map, std::size_t new_nvars);

/// Identifies t_from with t_into (exponents add) and drops slot `from`.
LaurentPoly merge_slots(const LaurentPoly& p, std::size_t from, std::size_t into);

/// Replaces every t_j by 1/t_j.
LaurentPoly invert_variables(const LaurentPoly& p);

/// Exact (A(x) - A(y)) / (x^2 - y^2) where A(y) is A with its x-dependence
/// moved to slot y. Each term of A must have an even exponent in x and
/// exponent 0 in y; otherwise OddExponentError.
LaurentPoly divided_difference_even(const LaurentPoly& a, std::size_t x, std::size_t y);

/// Exact quotient p / (t_i + t_j) for i != j, by synthetic division in t_i.
/// Throws NonLaurentError on a nonzero remainder.
LaurentPoly divide_by_variable_sum(const LaurentPoly& p, std::size_t i, std::size_t j);

}  // namespace rgrec

template <>
struct std::hash<rgrec::ExponentVector> {
    std::size_t operator()(const rgrec::ExponentVector& e) const { return e.hash(); }
};
