#include "rgrec/truncated_series.hpp"

#include <unordered_map>
#include <vector>

#include "rgrec/errors.hpp"

namespace rgrec {

namespace {

using Univariate = std::vector<BigRational>;  // coefficients of x^0..x^order

Univariate uni_mul(const Univariate& a, const Univariate& b)
{
    Univariate r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j].add_product(a[i], b[j]);
    }
    return r;
}

// Taylor coefficients of ((1+x)/(x-1))^k for k in [kmin, kmax].
class PowerTable {
public:
    PowerTable(unsigned order, int kmin, int kmax) : kmin_(kmin)
    {
        const std::size_t len = order + 1;
        // 1/(x-1) = -sum x^k and 1/(1+x) = sum (-x)^k.
        Univariate inv_xm1(len), inv_xp1(len), one_plus_x(len), x_minus_1(len);
        for (std::size_t k = 0; k < len; ++k) {
            inv_xm1[k] = -1;
            inv_xp1[k] = (k % 2 == 0) ? 1 : -1;
        }
        one_plus_x[0] = 1;
        x_minus_1[0] = -1;
        if (len > 1) {
            one_plus_x[1] = 1;
            x_minus_1[1] = 1;
        }
        const Univariate t = uni_mul(one_plus_x, inv_xm1);
        const Univariate t_inv = uni_mul(x_minus_1, inv_xp1);

        Univariate unit(len);
        unit[0] = 1;
        table_.assign(static_cast<std::size_t>(kmax - kmin + 1), Univariate{});
        Univariate up = unit;
        for (int k = 0; k <= kmax; ++k) {
            if (k >= kmin) table_[static_cast<std::size_t>(k - kmin)] = up;
            up = uni_mul(up, t);
        }
        Univariate down = t_inv;
        for (int k = -1; k >= kmin; --k) {
            if (k <= kmax) table_[static_cast<std::size_t>(k - kmin)] = down;
            down = uni_mul(down, t_inv);
        }
    }

    [[nodiscard]] const Univariate& power(int k) const { return table_[static_cast<std::size_t>(k - kmin_)]; }

private:
    int kmin_;
    std::vector<Univariate> table_;
};

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t nvars, unsigned order) : nvars_(nvars), order_(order)
{
    if (nvars == 0 || nvars > ExponentVector::kMaxVars) throw VariableCountError("bad variable count for series");
}

TruncatedSeries TruncatedSeries::constant(std::size_t nvars, unsigned order, const BigRational& c)
{
    TruncatedSeries s(nvars, order);
    s.add_term(ExponentVector(nvars), c);
    return s;
}

bool TruncatedSeries::in_range(const ExponentVector& e) const
{
    for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i] < 0 || e[i] > static_cast<int>(order_)) return false;
    return true;
}

void TruncatedSeries::add_term(const ExponentVector& exps, const BigRational& c)
{
    if (exps.size() != nvars_) throw VariableCountError("exponent vector length does not match nvars");
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exps[i] < 0) throw DomainError("power series exponents must be nonnegative");
    if (c.is_zero() || !in_range(exps)) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigRational TruncatedSeries::coefficient(const ExponentVector& exps) const
{
    const auto it = terms_.find(exps);
    return it == terms_.end() ? BigRational(0) : it->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    if (nvars_ != rhs.nvars_ || order_ != rhs.order_) throw VariableCountError("series frame mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.nvars_ != b.nvars_ || a.order_ != b.order_) throw VariableCountError("series frame mismatch");
    std::unordered_map<ExponentVector, BigRational, ExponentHash> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            const ExponentVector e = ea + eb;
            if (!a.in_range(e)) continue;
            acc[e].add_product(ca, cb);
        }
    TruncatedSeries out(a.nvars_, a.order_);
    for (auto& [e, c] : acc) out.add_term(e, c);
    return out;
}

TruncatedSeries series_from_rational_subst(const LaurentPoly& p, unsigned order)
{
    const std::size_t n = p.nvars();
    TruncatedSeries out(n, order);
    if (p.is_zero()) return out;

    int kmin = 0, kmax = 0;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) {
            kmin = std::min(kmin, static_cast<int>(e[i]));
            kmax = std::max(kmax, static_cast<int>(e[i]));
        }
    const PowerTable table(order, kmin, kmax);

    std::unordered_map<ExponentVector, BigRational, ExponentHash> acc;
    ExponentVector idx(n);
    for (const auto& [e, c] : p.terms()) {
        // Outer product of the univariate expansions of each t_i^{e_i}.
        std::vector<const Univariate*> factors(n);
        for (std::size_t i = 0; i < n; ++i) factors[i] = &table.power(e[i]);
        std::vector<BigRational> partial(n + 1);
        partial[0] = c;
        std::size_t depth = 0;
        idx[0] = -1;
        while (true) {
            if (++idx[depth] > static_cast<int>(order)) {
                if (depth == 0) break;
                --depth;
                continue;
            }
            const BigRational& f = (*factors[depth])[static_cast<std::size_t>(idx[depth])];
            if (f.is_zero()) continue;
            partial[depth + 1] = partial[depth] * f;
            if (depth + 1 == n) {
                acc[idx] += partial[n];
            } else {
                ++depth;
                idx[depth] = -1;
            }
        }
    }
    for (auto& [e, c] : acc) out.add_term(e, c);
    return out;
}

}  // namespace rgrec
