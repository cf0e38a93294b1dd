#include "rgrec/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "rgrec/errors.hpp"

namespace rgrec {

namespace {

void check_nvars(std::size_t nvars)
{
    if (nvars == 0 || nvars > ExponentVector::kMaxVars)
        throw VariableCountError("variable count " + std::to_string(nvars) + " outside [1, " +
                                 std::to_string(ExponentVector::kMaxVars) + "]");
}

void check_same_frame(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.nvars() != b.nvars())
        throw VariableCountError("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                                 std::to_string(b.nvars()));
}

void check_slot(const LaurentPoly& p, std::size_t slot)
{
    if (slot >= p.nvars())
        throw VariableCountError("slot " + std::to_string(slot) + " out of range for " +
                                 std::to_string(p.nvars()) + " variables");
}

using Accumulator = std::unordered_map<ExponentVector, BigRational, ExponentHash>;

LaurentPoly from_accumulator(std::size_t nvars, Accumulator&& acc)
{
    LaurentPoly out(nvars);
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.add_term(e, c);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::size_t nvars) : size_(nvars)
{
    check_nvars(nvars);
}

ExponentVector::ExponentVector(std::initializer_list<value_type> exps) : size_(exps.size())
{
    check_nvars(size_);
    std::copy(exps.begin(), exps.end(), exps_.begin());
}

ExponentVector::ExponentVector(std::span<const value_type> exps) : size_(exps.size())
{
    check_nvars(size_);
    std::copy(exps.begin(), exps.end(), exps_.begin());
}

ExponentVector::value_type ExponentVector::total_degree() const
{
    return std::accumulate(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(size_), value_type{0});
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.size_; ++i) r.exps_[i] += b.exps_[i];
    return r;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b)
{
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.size_; ++i)
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    return std::strong_ordering::equal;
}

std::size_t ExponentVector::hash() const
{
    // FNV-1a over the active slots.
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < size_; ++i) {
        h ^= static_cast<std::uint32_t>(exps_[i]);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars)
{
    check_nvars(nvars);
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigRational& c)
{
    LaurentPoly p(nvars);
    p.add_term(ExponentVector(nvars), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exps, const BigRational& c)
{
    LaurentPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t slot)
{
    ExponentVector e(nvars);
    if (slot >= nvars) throw VariableCountError("slot out of range");
    e[slot] = 1;
    return monomial(e);
}

LaurentPoly LaurentPoly::univariate(std::size_t nvars, std::size_t slot,
                                    std::initializer_list<std::pair<int, BigRational>> terms)
{
    if (slot >= nvars) throw VariableCountError("slot out of range");
    LaurentPoly p(nvars);
    for (const auto& [k, c] : terms) {
        ExponentVector e(nvars);
        e[slot] = k;
        p.add_term(e, c);
    }
    return p;
}

void LaurentPoly::add_term(const ExponentVector& exps, const BigRational& c)
{
    if (exps.size() != nvars_) throw VariableCountError("exponent vector length does not match nvars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigRational LaurentPoly::coefficient(const ExponentVector& exps) const
{
    const auto it = terms_.find(exps);
    return it == terms_.end() ? BigRational(0) : it->second;
}

int LaurentPoly::max_total_degree() const
{
    int best = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e.total_degree()));
    return best;
}

int LaurentPoly::min_total_degree() const
{
    int best = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, static_cast<int>(e.total_degree()));
    return best;
}

LaurentPoly LaurentPoly::homogeneous_part(int degree) const
{
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (e.total_degree() == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

BigRational LaurentPoly::evaluate(std::span<const BigRational> point) const
{
    if (point.size() != nvars_) throw VariableCountError("evaluation point has wrong dimension");
    BigRational total;
    for (const auto& [e, c] : terms_) {
        BigRational term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (point[i].is_zero()) {
                if (e[i] < 0) throw PoleError("zero substituted into a negative power of t" + std::to_string(i + 1));
                term = BigRational(0);
                break;
            }
            term *= point[i].pow(e[i]);
        }
        total += term;
    }
    return total;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    check_same_frame(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
    check_same_frame(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    check_same_frame(a, b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars());
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 22));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            auto [it, inserted] = acc.try_emplace(ea + eb);
            it->second.add_product(ca, cb);
        }
    }
    return from_accumulator(a.nvars(), std::move(acc));
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational shown = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                shown = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) shown = -c;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << "t" << (i + 1);
            if (e[i] != 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << shown;
        } else if (shown == BigRational(1)) {
            os << vars.str();
        } else {
            os << shown << "*" << vars.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Free operations

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    }
    throw Error("unknown arithmetic operation");
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent)
{
    LaurentPoly result = LaurentPoly::constant(p.nvars(), 1);
    LaurentPoly base = p;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

LaurentPoly differentiate(const LaurentPoly& p, std::size_t slot)
{
    check_slot(p, slot);
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[slot] == 0) continue;
        ExponentVector d = e;
        d[slot] -= 1;
        out.add_term(d, c * BigRational(e[slot]));
    }
    return out;
}

LaurentPoly antiderivative(const LaurentPoly& p, std::size_t slot)
{
    check_slot(p, slot);
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[slot] == -1)
            throw LogTermError("antiderivative of t" + std::to_string(slot + 1) +
                               "^-1 term would be logarithmic");
        ExponentVector d = e;
        d[slot] += 1;
        out.add_term(d, c / BigRational(d[slot]));
    }
    return out;
}

LaurentPoly evaluate_partial(const LaurentPoly& p, std::size_t slot, const BigRational& value)
{
    check_slot(p, slot);
    const std::size_t out_vars = p.nvars() == 1 ? 1 : p.nvars() - 1;
    Accumulator acc;
    for (const auto& [e, c] : p.terms()) {
        const int k = e[slot];
        BigRational factor;
        if (k == 0) {
            factor = 1;
        } else if (value.is_zero()) {
            if (k < 0) throw PoleError("zero substituted into a negative power of t" + std::to_string(slot + 1));
            continue;
        } else {
            factor = value.pow(k);
        }
        ExponentVector r(out_vars);
        if (p.nvars() > 1) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < p.nvars(); ++i)
                if (i != slot) r[w++] = e[i];
        }
        acc[r].add_product(c, factor);
    }
    return from_accumulator(out_vars, std::move(acc));
}

LaurentPoly relabel(const LaurentPoly& p, std::span<const std::size_t> slot_map, std::size_t new_nvars)
{
    if (slot_map.size() != p.nvars()) throw VariableCountError("slot map length does not match nvars");
    std::vector<bool> used(new_nvars, false);
    for (std::size_t target : slot_map) {
        if (target >= new_nvars) throw VariableCountError("slot map target out of range");
        if (used[target]) throw NonInjectiveMapError("slot map is not injective");
        used[target] = true;
    }
    LaurentPoly out(new_nvars);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector r(new_nvars);
        for (std::size_t i = 0; i < p.nvars(); ++i) r[slot_map[i]] = e[i];
        out.add_term(r, c);
    }
    return out;
}

LaurentPoly merge_slots(const LaurentPoly& p, std::size_t from, std::size_t into)
{
    check_slot(p, from);
    check_slot(p, into);
    if (from == into) throw VariableCountError("cannot merge a slot into itself");
    const std::size_t out_vars = p.nvars() - 1;
    const std::size_t target = into > from ? into - 1 : into;
    Accumulator acc;
    for (const auto& [e, c] : p.terms()) {
        ExponentVector r(out_vars);
        std::size_t w = 0;
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (i != from) r[w++] = e[i];
        r[target] += e[from];
        acc[r] += c;
    }
    return from_accumulator(out_vars, std::move(acc));
}

LaurentPoly invert_variables(const LaurentPoly& p)
{
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector r(p.nvars());
        for (std::size_t i = 0; i < p.nvars(); ++i) r[i] = -e[i];
        out.add_term(r, c);
    }
    return out;
}

LaurentPoly divided_difference_even(const LaurentPoly& a, std::size_t x, std::size_t y)
{
    check_slot(a, x);
    check_slot(a, y);
    if (x == y) throw VariableCountError("divided difference needs two distinct slots");
    Accumulator acc;
    for (const auto& [e, c] : a.terms()) {
        if (e[x] % 2 != 0)
            throw OddExponentError("divided difference: odd exponent " + std::to_string(e[x]) + " in t" +
                                   std::to_string(x + 1));
        if (e[y] != 0)
            throw OddExponentError("divided difference: t" + std::to_string(y + 1) + " already present");
        const int half = e[x] / 2;
        if (half == 0) continue;
        // (x^{2a} - y^{2a}) / (x^2 - y^2) = sum_{k<a} x^{2k} y^{2(a-1-k)}, and for a = -b < 0
        // the same sum for b scaled by -x^{-2b} y^{-2b}.
        const int b = half > 0 ? half : -half;
        const int shift = half > 0 ? 0 : -2 * b;
        const BigRational coeff = half > 0 ? c : -c;
        for (int k = 0; k < b; ++k) {
            ExponentVector r = e;
            r[x] = 2 * k + shift;
            r[y] = 2 * (b - 1 - k) + shift;
            acc[r] += coeff;
        }
    }
    return from_accumulator(a.nvars(), std::move(acc));
}

LaurentPoly divide_by_variable_sum(const LaurentPoly& p, std::size_t i, std::size_t j)
{
    check_slot(p, i);
    check_slot(p, j);
    if (i == j) throw VariableCountError("divide_by_variable_sum needs distinct slots");
    const std::size_t n = p.nvars();
    if (p.is_zero()) return LaurentPoly(n);

    // Group by the exponent of t_i; each group is a coefficient in the other variables.
    std::map<int, LaurentPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        ExponentVector r = e;
        r[i] = 0;
        groups.try_emplace(e[i], n).first->second.add_term(r, c);
    }
    const int kmin = groups.begin()->first;
    const int kmax = groups.rbegin()->first;
    const LaurentPoly tj = LaurentPoly::variable(n, j);

    // sum_k c_k X^k = (X + t_j) sum_k q_k X^k, with q_{k-1} = c_k - t_j q_k.
    LaurentPoly quotient(n);
    LaurentPoly q(n);
    for (int k = kmax; k > kmin; --k) {
        const auto it = groups.find(k);
        LaurentPoly ck = it == groups.end() ? LaurentPoly(n) : it->second;
        q = ck - tj * q;
        for (const auto& [e, c] : q.terms()) {
            ExponentVector r = e;
            r[i] = k - 1;
            quotient.add_term(r, c);
        }
    }
    const LaurentPoly remainder = groups.at(kmin) - tj * q;
    if (!remainder.is_zero())
        throw NonLaurentError("polynomial is not divisible by (t" + std::to_string(i + 1) + " + t" +
                              std::to_string(j + 1) + ")");
    return quotient;
}

}  // namespace rgrec
