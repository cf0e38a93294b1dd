#include "rgrec/analysis.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "rgrec/errors.hpp"
#include "rgrec/lattice_count.hpp"
#include "rgrec/recursion.hpp"
#include "rgrec/truncated_series.hpp"

namespace rgrec::analysis {

namespace {

std::string format_exponents(const ExponentVector& e)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
}

std::string format_d(const std::vector<int>& d)
{
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << "tau_" << d[i];
    os << ">";
    return os.str();
}

CheckResult pass(std::string check, int g, int n, std::string detail = {})
{
    return {std::move(check), g, n, true, std::move(detail)};
}

CheckResult fail(std::string check, int g, int n, std::string detail)
{
    return {std::move(check), g, n, false, std::move(detail)};
}

// prod_j (2d_j)! / (d_j! 2^{2d_j+1})
BigRational leading_weight(const std::vector<int>& d)
{
    BigRational w(1);
    for (int dj : d) {
        const auto u = static_cast<unsigned long>(dj);
        w *= BigRational(factorial(2 * u), factorial(u)) / BigRational(2).pow(2 * dj + 1);
    }
    return w;
}

CheckResult check_symmetry(int g, int n, const LaurentPoly& F)
{
    const auto nv = static_cast<std::size_t>(n);
    for (std::size_t k = 0; k + 1 < nv; ++k) {
        std::vector<std::size_t> map(nv);
        std::iota(map.begin(), map.end(), 0);
        std::swap(map[k], map[k + 1]);
        const LaurentPoly swapped = relabel(F, map, nv);
        if (swapped == F) continue;
        for (const auto& [e, c] : F.terms()) {
            ExponentVector image = e;
            std::swap(image[k], image[k + 1]);
            if (F.coefficient(image) != c)
                return fail("symmetry", g, n,
                            "transposition of slots " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                                " changes the coefficient of " + format_exponents(e));
        }
        return fail("symmetry", g, n, "not invariant under slots " + std::to_string(k + 1) + "," + std::to_string(k + 2));
    }
    return pass("symmetry", g, n);
}

CheckResult check_vanishing(int g, int n, const LaurentPoly& F)
{
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        const LaurentPoly restricted = evaluate_partial(F, j, BigRational(-1));
        if (!restricted.is_zero())
            return fail("vanishing_at_minus_one", g, n,
                        "t" + std::to_string(j + 1) + " = -1 leaves " + std::to_string(restricted.size()) + " terms");
    }
    return pass("vanishing_at_minus_one", g, n);
}

CheckResult check_odd_leading_parts(int g, int n, const LaurentPoly& F)
{
    const int top = 3 * (2 * g - 2 + n);
    for (int degree : {top, -top}) {
        const LaurentPoly part = F.homogeneous_part(degree);
        for (const auto& [e, c] : part.terms())
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] % 2 == 0)
                    return fail("odd_leading_parts", g, n, "extreme-degree monomial " + format_exponents(e) + " has an even exponent");
    }
    return pass("odd_leading_parts", g, n);
}

CheckResult check_degrees(int g, int n, const LaurentPoly& F)
{
    const int expected = 3 * (2 * g - 2 + n);
    if (F.is_zero()) return fail("degree_bounds", g, n, "polynomial is zero");
    const int hi = F.max_total_degree();
    const int lo = F.min_total_degree();
    if (hi != expected || lo != -expected)
        return fail("degree_bounds", g, n,
                    "degrees [" + std::to_string(lo) + "," + std::to_string(hi) + "], expected +-" + std::to_string(expected));
    return pass("degree_bounds", g, n, "+-" + std::to_string(expected));
}

CheckResult check_inversion(int g, int n, const LaurentPoly& F)
{
    const LaurentPoly inverted = invert_variables(F);
    if (inverted == F) return pass("inversion_invariance", g, n);
    for (const auto& [e, c] : F.terms())
        if (inverted.coefficient(e) != c)
            return fail("inversion_invariance", g, n, "coefficient of " + format_exponents(e) + " changes under t -> 1/t");
    return fail("inversion_invariance", g, n, "polynomial changes under t -> 1/t");
}

}  // namespace

// ---------------------------------------------------------------------------

CheckResult check_odd_exponents(int g, int n, const LaurentPoly& F)
{
    for (const auto& [e, c] : F.terms())
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] % 2 == 0) return fail("odd_exponents", g, n, "monomial " + format_exponents(e) + " has an even exponent");
    return pass("odd_exponents", g, n);
}

void Report::append(const Report& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::first_failure() const
{
    const auto it = std::find_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; });
    return it == checks_.end() ? nullptr : &*it;
}

std::string Report::to_json() const
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json entry;
        entry["check"] = c.check;
        entry["gn"] = {c.g, c.n};
        entry["status"] = c.passed ? "pass" : "fail";
        entry["detail"] = c.detail;
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

// ---------------------------------------------------------------------------

BigRational bernoulli(unsigned r)
{
    static std::mutex mutex;
    static std::vector<BigRational> cache{BigRational(1)};
    std::lock_guard lock(mutex);
    while (cache.size() <= r) {
        const auto m = static_cast<unsigned long>(cache.size());
        BigRational s;
        for (unsigned long k = 0; k < m; ++k) s += BigRational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-s / BigRational(static_cast<long>(m + 1)));
    }
    return cache[r];
}

BigRational euler_char_HZ(int g, int n)
{
    recursion::FgnKey::make(g, n);
    const BigRational ratio(factorial(static_cast<unsigned long>(2 * g - 3 + n)), factorial(static_cast<unsigned long>(2 * g)));
    const BigRational sign(n % 2 == 0 ? 1 : -1);
    return sign * ratio * BigRational(2 * g - 1) * bernoulli(static_cast<unsigned>(2 * g));
}

BigRational euler_char_HZ_zeta_form(int g, int n)
{
    recursion::FgnKey::make(g, n);
    if (g < 1) throw DomainError("the zeta form needs g >= 1");
    const BigRational zeta = -bernoulli(static_cast<unsigned>(2 * g)) / BigRational(2 * g);
    const BigRational ratio(factorial(static_cast<unsigned long>(2 * g - 3 + n)), factorial(static_cast<unsigned long>(2 * g - 2)));
    const BigRational sign((n - 1) % 2 == 0 ? 1 : -1);
    return sign * ratio * zeta;
}

CheckResult verify_euler(int g, int n, const LaurentPoly& F)
{
    const std::vector<BigRational> ones(static_cast<std::size_t>(n), BigRational(1));
    const BigRational value = F.evaluate(ones);
    const BigRational expected = BigRational(n % 2 == 0 ? 1 : -1) * euler_char_HZ(g, n);
    if (value == expected) return pass("euler", g, n, value.to_short_string());
    return fail("euler", g, n, "F(1,...,1) = " + value.to_short_string() + ", expected " + expected.to_short_string());
}

CheckResult verify_laplace(int g, int n, const LaurentPoly& F, lattice::LatticeCounter& counter, unsigned order)
{
    const TruncatedSeries series = series_from_rational_subst(F, order);
    for (const auto& [e, c] : series.terms()) {
        const auto view = e.view();
        if (std::find(view.begin(), view.end(), 0) != view.end())
            return fail("laplace", g, n, "coefficient of x^" + format_exponents(e) + " is " + c.to_short_string() + ", expected 0");
    }
    std::size_t compared = 0;
    for (const auto& p : lattice::perimeter_box(n, static_cast<int>(order))) {
        ExponentVector e(static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < p.size(); ++j) e[j] = p[j];
        const BigRational coefficient = series.coefficient(e);
        const BigRational count = counter.compute(g, n, p);
        if (coefficient != count)
            return fail("laplace", g, n,
                        "coefficient of x^" + format_exponents(e) + " is " + coefficient.to_short_string() +
                            ", N = " + count.to_short_string());
        ++compared;
    }
    return pass("laplace", g, n, std::to_string(compared) + " coefficients up to order " + std::to_string(order));
}

// ---------------------------------------------------------------------------

void IntersectionTable::set(int g, std::vector<int> d, const BigRational& value)
{
    const int sum = std::accumulate(d.begin(), d.end(), 0);
    if (sum != 3 * g - 3 + static_cast<int>(d.size()))
        throw DomainError("intersection index " + format_d(d) + " does not satisfy sum d = 3g-3+n");
    std::sort(d.begin(), d.end());
    entries_.insert_or_assign({g, std::move(d)}, value);
}

std::optional<BigRational> IntersectionTable::get(int g, std::vector<int> d) const
{
    std::sort(d.begin(), d.end());
    const auto it = entries_.find({g, d});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void IntersectionTable::merge(const IntersectionTable& other)
{
    for (const auto& [key, value] : other.entries_) entries_.insert_or_assign(key, value);
    populated_.insert(other.populated_.begin(), other.populated_.end());
}

std::string IntersectionTable::to_tsv() const
{
    std::ostringstream os;
    for (const auto& [key, value] : entries_) {
        os << key.first;
        for (int d : key.second) os << '\t' << d;
        os << '\t' << value.to_string() << '\n';
    }
    return os.str();
}

IntersectionTable extract_intersection_numbers(int g, int n, const LaurentPoly& F)
{
    const auto key = recursion::FgnKey::make(g, n);
    if (F.nvars() != static_cast<std::size_t>(n)) throw VariableCountError("F has the wrong number of variables");
    const LaurentPoly top = F.homogeneous_part(3 * key.level());
    // (-1)^n 2^{5g-5+2n}
    const BigRational scale = BigRational(n % 2 == 0 ? 1 : -1) * BigRational(2).pow(5 * g - 5 + 2 * n);

    IntersectionTable table;
    std::map<std::vector<int>, std::pair<BigRational, ExponentVector>> seen;
    for (const auto& [e, c] : top.terms()) {
        std::vector<int> d;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 1 || e[j] % 2 == 0)
                throw DomainError("leading monomial " + format_exponents(e) + " is not a product of positive odd powers");
            d.push_back((e[j] - 1) / 2);
        }
        const BigRational value = c * scale / leading_weight(d);
        std::vector<int> sorted = d;
        std::sort(sorted.begin(), sorted.end());
        const auto it = seen.find(sorted);
        if (it != seen.end()) {
            if (it->second.first != value)
                throw InconsistentOrbit(format_d(sorted) + " is " + it->second.first.to_short_string() + " from " +
                                        format_exponents(it->second.second) + " but " + value.to_short_string() +
                                        " from " + format_exponents(e));
            continue;
        }
        seen.emplace(sorted, std::make_pair(value, e));
        table.set(g, sorted, value);
    }
    table.mark_populated(g, n);
    return table;
}

Report string_dilaton_check(const IntersectionTable& table)
{
    Report report;
    const auto lookup = [&](int g, const std::vector<int>& d) {
        return table.get(g, d).value_or(BigRational(0));
    };
    for (const auto& [key, value] : table.entries()) {
        const int g = key.first;
        const std::vector<int>& d = key.second;
        const int n = static_cast<int>(d.size());
        const int lower_n = n - 1;
        if (!recursion::FgnKey::stable(g, lower_n) || !table.populated(g, lower_n)) continue;

        if (const auto zero = std::find(d.begin(), d.end(), 0); zero != d.end()) {
            std::vector<int> rest(d.begin(), zero);
            rest.insert(rest.end(), zero + 1, d.end());
            BigRational expected;
            for (std::size_t j = 0; j < rest.size(); ++j) {
                if (rest[j] == 0) continue;
                std::vector<int> lowered = rest;
                --lowered[j];
                expected += lookup(g, lowered);
            }
            if (expected == value)
                report.add(pass("string", g, n, format_d(d) + " = " + value.to_short_string()));
            else
                report.add(fail("string", g, n, format_d(d) + " = " + value.to_short_string() + ", sum = " + expected.to_short_string()));
        }

        if (const auto one = std::find(d.begin(), d.end(), 1); one != d.end()) {
            std::vector<int> rest(d.begin(), one);
            rest.insert(rest.end(), one + 1, d.end());
            const BigRational expected = BigRational(2 * g - 2 + lower_n) * lookup(g, rest);
            if (expected == value)
                report.add(pass("dilaton", g, n, format_d(d) + " = " + value.to_short_string()));
            else
                report.add(fail("dilaton", g, n, format_d(d) + " = " + value.to_short_string() + ", expected " + expected.to_short_string()));
        }
    }
    return report;
}

Report run_invariant_suite(int g, int n, const LaurentPoly& F)
{
    recursion::FgnKey::make(g, n);
    Report report;
    if (F.nvars() != static_cast<std::size_t>(n)) {
        report.add(fail("variable_count", g, n, std::to_string(F.nvars()) + " variables"));
        return report;
    }
    report.add(check_symmetry(g, n, F));
    report.add(check_vanishing(g, n, F));
    report.add(check_odd_leading_parts(g, n, F));
    report.add(check_degrees(g, n, F));
    report.add(check_inversion(g, n, F));
    report.add(verify_euler(g, n, F));
    return report;
}

std::optional<std::vector<BigRational>> to_z_polynomial(const LaurentPoly& F)
{
    if (F.nvars() != 1) return std::nullopt;
    LaurentPoly rest = F;
    std::vector<BigRational> coeffs;
    const LaurentPoly z = recursion::z_diagonal(0, 1);
    while (!rest.is_zero()) {
        const int top = rest.max_total_degree();
        if (top < 0) return std::nullopt;
        if (coeffs.empty()) coeffs.resize(static_cast<std::size_t>(top) + 1);
        const BigRational c = rest.coefficient(ExponentVector{top}) * BigRational(4).pow(top);
        coeffs[static_cast<std::size_t>(top)] = c;
        rest -= pow(z, static_cast<unsigned>(top)) * c;
    }
    return coeffs;
}

}  // namespace rgrec::analysis
