// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "golden.hpp"
#include "rgrec/analysis.hpp"
#include "rgrec/errors.hpp"
#include "rgrec/lattice_count.hpp"
#include "rgrec/recursion.hpp"
#include "rgrec/ribbon_graph.hpp"

using namespace rgrec;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) passed = false;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

recursion::RecursionEngine& engine()
{
    static recursion::RecursionEngine e;
    return e;
}

std::vector<std::pair<int, int>> types_up_to(int level)
{
    std::vector<std::pair<int, int>> out;
    for (int g = 0; 2 * g - 1 <= level; ++g)
        for (int n = 1; 2 * g - 2 + n <= level; ++n)
            if (recursion::FgnKey::stable(g, n)) out.emplace_back(g, n);
    return out;
}

std::string gn(int g, int n)
{
    return "(" + std::to_string(g) + "," + std::to_string(n) + ")";
}

BigRational sign(int n)
{
    return BigRational(n % 2 == 0 ? 1 : -1);
}

Outcome golden_polynomials()
{
    Outcome o;
    o.require(*engine().compute(0, 4) == golden::F04(), "F(0,4) equals the reference product form");
    o.require(*engine().compute(1, 2) == golden::F12(), "F(1,2) equals the reference Laurent form");
    const LaurentPoly& F21 = *engine().compute(2, 1);
    o.require(F21 == golden::F21_t_form() && F21 == golden::F21_z_form(), "F(2,1) equals both reference forms");
    const LaurentPoly& F31 = *engine().compute(3, 1);
    o.require(F31 == golden::F31_t_form() && F31 == golden::F31_z_form(), "F(3,1) equals both reference forms");
    const auto z = analysis::to_z_polynomial(F31);
    o.require(z && z->size() == 16 && (*z)[15] == BigRational(-5005, 3), "F(3,1) z^15 coefficient is -5005/3");
    // Bracket coefficient of t^{+-1}: divide out -(t+1)^12 / (2^30 t^6).
    const LaurentPoly bracket = golden::palindrome({golden::q(5005, 3), golden::q(-20020), golden::q(112343),
                                                    golden::q(-1181488, 3), golden::q(975692), golden::q(-1842448),
                                                    golden::q(25312028, 9), golden::q(-10959056, 3),
                                                    golden::q(88361050, 21), golden::q(-277329032, 63)});
    o.require(bracket.coefficient(ExponentVector{1}) == BigRational(88361050, 21) &&
                  bracket.coefficient(ExponentVector{-1}) == BigRational(88361050, 21) &&
                  pow(golden::t_plus_one(1, 0), 12) * LaurentPoly::monomial(ExponentVector{-6}, BigRational(-1, 1073741824)) *
                          bracket == F31,
              "F(3,1) bracket has 88361050/21 at t^{+-1}");
    return o;
}

Outcome euler_suite()
{
    Outcome o;
    std::size_t checked = 0;
    std::string failures;
    for (auto [g, n] : types_up_to(5)) {
        const LaurentPoly& F = *engine().compute(g, n);
        const std::vector<BigRational> ones(static_cast<std::size_t>(n), BigRational(1));
        if (F.evaluate(ones) != sign(n) * analysis::euler_char_HZ(g, n)) failures += " " + gn(g, n);
        ++checked;
    }
    o.require(failures.empty(), "F(1,...,1) = (-1)^n chi for " + std::to_string(checked) + " types" + failures);
    const auto value = [](int g, int n) {
        const std::vector<BigRational> ones(static_cast<std::size_t>(n), BigRational(1));
        return engine().compute(g, n)->evaluate(ones);
    };
    o.require(value(1, 1) == BigRational(1, 12), "F(1,1)(1) = 1/12");
    o.require(value(2, 1) == BigRational(-1, 120), "F(2,1)(1) = -1/120");
    o.require(value(1, 2) == BigRational(1, 12), "F(1,2)(1,1) = 1/12");
    o.require(value(0, 4) == BigRational(-1), "F(0,4)(1,1,1,1) = -1");
    o.require(value(3, 1) == BigRational(1, 252), "F(3,1)(1) = 1/252");
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    lattice::LatticeCounter counter;
    constexpr int kMaxSum = 20;
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}}) {
        const auto records = graphs::enumerate_ribbon_graphs(g, n);
        o.require(graphs::oracle_F(records, n) == *engine().compute(g, n),
                  "oracle F = recursion F for " + gn(g, n) + " over " + std::to_string(records.size()) + " graphs");
        o.require(graphs::oracle_euler(records) == sign(n) * analysis::euler_char_HZ(g, n),
                  "graph Euler sum matches the closed form for " + gn(g, n));
        const auto table = graphs::oracle_N_table(records, kMaxSum);
        std::size_t compared = 0;
        std::string mismatch;
        for (const auto& p : lattice::perimeter_box(n, kMaxSum - n + 1)) {
            if (std::accumulate(p.begin(), p.end(), 0) > kMaxSum) continue;
            const auto it = table.find(p);
            const BigRational brute = it == table.end() ? BigRational(0) : it->second;
            if (brute != counter.compute(g, n, p) && mismatch.empty()) mismatch = " first mismatch " + lattice::CountKey{g, n, p}.to_string();
            ++compared;
        }
        o.require(mismatch.empty(), "oracle N = recursion N for " + gn(g, n) + " on " + std::to_string(compared) +
                                        " vectors with sum <= 20" + mismatch);
    }
    return o;
}

Outcome laplace_identity()
{
    Outcome o;
    lattice::LatticeCounter counter;
    for (auto [g, n] : {std::pair{0, 3}, {1, 1}, {0, 4}, {1, 2}, {2, 1}}) {
        const auto r = analysis::verify_laplace(g, n, *engine().compute(g, n), counter, 10);
        o.require(r.passed, "series of " + gn(g, n) + ": " + r.detail);
    }
    return o;
}

Outcome intersection_numbers()
{
    Outcome o;
    const auto t03 = analysis::extract_intersection_numbers(0, 3, *engine().compute(0, 3));
    const auto t11 = analysis::extract_intersection_numbers(1, 1, *engine().compute(1, 1));
    const auto t21 = analysis::extract_intersection_numbers(2, 1, *engine().compute(2, 1));
    o.require(t03.get(0, {0, 0, 0}) == BigRational(1), "<tau_0^3>_0 = 1");
    o.require(t11.get(1, {1}) == BigRational(1, 24), "<tau_1>_1 = 1/24");
    o.require(t21.get(2, {4}) == BigRational(1, 1152), "<tau_4>_2 = 1/1152");

    analysis::IntersectionTable all;
    bool positive = true;
    for (auto [g, n] : types_up_to(4)) {
        const auto t = analysis::extract_intersection_numbers(g, n, *engine().compute(g, n));
        for (const auto& [key, value] : t.entries()) positive = positive && value.sign() > 0;
        all.merge(t);
    }
    o.require(positive, "all " + std::to_string(all.entries().size()) + " extracted values are positive");
    const analysis::Report report = analysis::string_dilaton_check(all);
    std::size_t strings = 0, dilatons = 0;
    for (const auto& c : report.checks()) (c.check == "string" ? strings : dilatons)++;
    const auto* failure = report.first_failure();
    o.require(report.passed() && strings > 0 && dilatons > 0,
              std::to_string(strings) + " string and " + std::to_string(dilatons) + " dilaton identities" +
                  (failure ? " first failure " + failure->detail : std::string()));
    return o;
}

Outcome structural_invariants()
{
    Outcome o;
    const auto types = types_up_to(5);
    const auto tally = [&](const std::string& name, const std::function<analysis::CheckResult(int, int, const LaurentPoly&)>& check) {
        std::size_t failed = 0;
        std::string first;
        for (auto [g, n] : types) {
            const auto r = check(g, n, *engine().compute(g, n));
            if (r.passed) continue;
            if (first.empty()) first = " first " + gn(g, n) + ": " + r.detail;
            ++failed;
        }
        o.require(failed == 0, name + " on " + std::to_string(types.size() - failed) + "/" + std::to_string(types.size()) +
                                   " types" + first);
    };
    const auto from_suite = [](const std::string& name) {
        return [name](int g, int n, const LaurentPoly& F) {
            const analysis::Report report = analysis::run_invariant_suite(g, n, F);
            for (const auto& c : report.checks())
                if (c.check == name) return c;
            return analysis::CheckResult{name, g, n, false, "check missing"};
        };
    };
    tally("permutation symmetry", from_suite("symmetry"));
    tally("vanishing at t_j = -1", from_suite("vanishing_at_minus_one"));
    tally("only odd exponents in every monomial", analysis::check_odd_exponents);
    tally("only odd exponents in the extreme-degree parts", from_suite("odd_leading_parts"));
    tally("total degrees +-3(2g-2+n)", from_suite("degree_bounds"));
    tally("invariance under t -> 1/t", from_suite("inversion_invariance"));

    std::size_t even = 0, assembled = 0;
    for (auto [g, n] : types) {
        const auto flag = engine().integrand_even({g, n});
        if (!flag) continue;
        ++assembled;
        even += *flag ? 1 : 0;
    }
    o.require(assembled == even && assembled + 2 == types.size(),
              "integrand even in the integration variable for " + std::to_string(even) + "/" + std::to_string(assembled) +
                  " assembled types, no logarithmic term");
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "golden polynomials F(0,4), F(1,2), F(2,1), F(3,1)", golden_polynomials},
        {2, "Euler characteristics up to 2g-2+n = 5", euler_suite},
        {3, "graph oracle equivalence", oracle_equivalence},
        {4, "Laplace identity on the box p_j <= 10", laplace_identity},
        {5, "intersection numbers and string/dilaton", intersection_numbers},
        {6, "structural invariants up to 2g-2+n = 5", structural_invariants},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const Error& e) {
            outcome.passed = false;
            outcome.notes.push_back(std::string("FAIL exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %s: %s (%.2f s)\n", c.id, c.name, outcome.passed ? "PASS" : "FAIL", seconds);
        for (const auto& note : outcome.notes) std::printf("    %s\n", note.c_str());
        all = all && outcome.passed;
    }
    return all ? 0 : 1;
}
