#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgrec/laurent_poly.hpp"
#include "rgrec/rational.hpp"

namespace rgrec::lattice {
class LatticeCounter;
}

namespace rgrec::analysis {

struct CheckResult {
    std::string check;
    int g = 0;
    int n = 0;
    bool passed = false;
    std::string detail;
};

/// Ordered list of check outcomes; serializes to a JSON array of
/// {check, gn, status, detail} objects.
class Report {
public:
    void add(CheckResult result) { checks_.push_back(std::move(result)); }
    void append(const Report& other);
    [[nodiscard]] bool passed() const;
    [[nodiscard]] const std::vector<CheckResult>& checks() const { return checks_; }
    /// First failing check, or nullptr.
    [[nodiscard]] const CheckResult* first_failure() const;
    [[nodiscard]] std::string to_json() const;

private:
    std::vector<CheckResult> checks_;
};

/// b_r with x/(e^x - 1) = sum b_r x^r / r!, so b_1 = -1/2.
BigRational bernoulli(unsigned r);

/// chi(M_{g,n}) = (-1)^n (2g-3+n)!/(2g)! (2g-1) b_{2g}.
BigRational euler_char_HZ(int g, int n);
/// The zeta form (-1)^{n-1} (2g-3+n)!/(2g-2)! zeta(1-2g) with
/// zeta(1-2g) = -b_{2g}/(2g). Defined for g >= 1.
BigRational euler_char_HZ_zeta_form(int g, int n);

/// F(1,...,1) == (-1)^n chi(M_{g,n}).
CheckResult verify_euler(int g, int n, const LaurentPoly& F);

/// Compares the x-expansion of F under t_j = (1+x_j)/(x_j-1) against the
/// lattice counts on the box 1 <= p_j <= order; coefficients with some
/// p_j = 0 must vanish.
CheckResult verify_laplace(int g, int n, const LaurentPoly& F, lattice::LatticeCounter& counter, unsigned order);

/// psi-class intersection numbers <tau_{d_1} ... tau_{d_n}>_g, keyed by
/// genus and the d-vector written in nondecreasing order.
class IntersectionTable {
public:
    using Key = std::pair<int, std::vector<int>>;

    /// Throws DomainError unless sum d = 3g - 3 + d.size().
    void set(int g, std::vector<int> d, const BigRational& value);
    /// Value for an arbitrary ordering of d; nullopt if absent.
    [[nodiscard]] std::optional<BigRational> get(int g, std::vector<int> d) const;
    void mark_populated(int g, int n) { populated_.insert({g, n}); }
    [[nodiscard]] bool populated(int g, int n) const { return populated_.contains({g, n}); }
    void merge(const IntersectionTable& other);

    [[nodiscard]] const std::map<Key, BigRational>& entries() const { return entries_; }
    [[nodiscard]] const std::set<std::pair<int, int>>& populated_types() const { return populated_; }
    /// Rows "g<TAB>d_1<TAB>...<TAB>d_n<TAB>num/den".
    [[nodiscard]] std::string to_tsv() const;

private:
    std::map<Key, BigRational> entries_;
    std::set<std::pair<int, int>> populated_;
};

/// Inverts the leading-term relation
///   [prod t_j^{2d_j+1}] F^top = (-1)^n / 2^{5g-5+2n} <tau_d> prod (2d_j)!/(d_j! 2^{2d_j+1})
/// monomial by monomial. Throws InconsistentOrbit if two permutations of
/// the same d-vector disagree.
IntersectionTable extract_intersection_numbers(int g, int n, const LaurentPoly& F);

/// String and dilaton equations on every entry whose lower-order
/// counterpart table is populated.
Report string_dilaton_check(const IntersectionTable& table);

/// Every exponent of every monomial is odd.
CheckResult check_odd_exponents(int g, int n, const LaurentPoly& F);

/// Symmetry, vanishing at t_j = -1, odd exponents in the extreme-degree
/// homogeneous parts, degree bounds, t -> 1/t invariance and the Euler value.
Report run_invariant_suite(int g, int n, const LaurentPoly& F);

/// Rewrites a one-variable polynomial as a polynomial in z = (t+1)^2/(4t).
/// Returns coefficients indexed by the power of z, or nullopt if F is not
/// in the image.
std::optional<std::vector<BigRational>> to_z_polynomial(const LaurentPoly& F);

}  // namespace rgrec::analysis
