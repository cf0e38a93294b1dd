#pragma once

#include <cstddef>
#include <map>

#include "rgrec/laurent_poly.hpp"

namespace rgrec {

/// Multivariate power series in x_1..x_n truncated independently in each
/// variable: only exponents 0..order per slot are kept.
class TruncatedSeries {
public:
    using TermMap = std::map<ExponentVector, BigRational>;

    TruncatedSeries(std::size_t nvars, unsigned order);

    static TruncatedSeries constant(std::size_t nvars, unsigned order, const BigRational& c);

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] unsigned order() const { return order_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Terms beyond the truncation order are silently dropped.
    void add_term(const ExponentVector& exps, const BigRational& c);
    [[nodiscard]] BigRational coefficient(const ExponentVector& exps) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

private:
    [[nodiscard]] bool in_range(const ExponentVector& e) const;

    std::size_t nvars_;
    unsigned order_;
    TermMap terms_;
};

/// Expands p under t_j = (1 + x_j)/(x_j - 1) around x = 0, keeping x_j^k
/// for k <= order in every slot.
TruncatedSeries series_from_rational_subst(const LaurentPoly& p, unsigned order);

}  // namespace rgrec
