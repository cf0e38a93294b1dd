#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgrec/rational.hpp"

namespace rgrec::lattice {

/// H(x) = 1 for x > 0 and 0 otherwise.
constexpr int heaviside(long x) { return x > 0 ? 1 : 0; }

/// Aut-weighted lattice-point count over the seven face-labeled (0,3)
/// graphs (three dumbbells, three figure-eights, one theta).
BigRational base_N03(int p1, int p2, int p3);

/// (1/6) #{l in Z_+^3 : 2(l1+l2+l3) = p} + (1/4) #{l in Z_+^2 : 2(l1+l2) = p}.
BigRational base_N11(int p);

/// Memo key: type (g, n) and the perimeter vector sorted ascending.
struct CountKey {
    int g = 0;
    int n = 0;
    std::vector<int> p;

    static CountKey canonical(int g, int n, std::span<const int> p);
    [[nodiscard]] std::string to_string() const;  // "g:n:p1,p2,..."

    friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

/// Weighted dessin counts N_{g,n}(p) by the integer recursion, memoized on
/// CountKey. Dependencies are resolved with an explicit work stack, so the
/// call depth stays constant for large perimeters.
class LatticeCounter {
public:
    /// Throws StabilityError for unstable (g, n) and DomainError for a
    /// nonpositive entry or wrong length.
    BigRational compute(int g, int n, std::span<const int> p);

    /// One application of the recursion with p[0] as the distinguished
    /// boundary, without reordering p first.
    BigRational recursion_step(int g, int n, std::span<const int> p);

    [[nodiscard]] std::size_t memo_size() const;
    /// Snapshot of the memo table.
    [[nodiscard]] std::map<CountKey, BigRational> memo() const;

private:
    // Value of a key that needs no memo: unstable, negative genus or odd sum.
    static std::optional<BigRational> trivial_value(int g, int n, std::span<const int> p);
    // Evaluates one step; on a memo miss records the missing keys and returns nullopt.
    std::optional<BigRational> try_step(int g, int n, std::span<const int> p, std::vector<CountKey>& missing);
    std::optional<BigRational> lookup(int g, int n, std::vector<int> p, std::vector<CountKey>& missing);
    void resolve(const CountKey& key);

    mutable std::mutex mutex_;
    std::map<CountKey, BigRational> memo_;
};

/// All vectors in {1..max}^n in lexicographic order.
std::vector<std::vector<int>> perimeter_box(int n, int max);

}  // namespace rgrec::lattice
