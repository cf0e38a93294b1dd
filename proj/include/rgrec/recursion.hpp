#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgrec/laurent_poly.hpp"

namespace rgrec::recursion {

/// Topological type (g, n). Construction through make() enforces
/// stability 2g - 2 + n > 0.
struct FgnKey {
    int g = 0;
    int n = 0;

    static FgnKey make(int g, int n);
    [[nodiscard]] static bool stable(int g, int n) { return g >= 0 && n >= 1 && 2 * g - 2 + n > 0; }
    [[nodiscard]] int level() const { return 2 * g - 2 + n; }
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const FgnKey&, const FgnKey&) = default;
};

using PolyPtr = std::shared_ptr<const LaurentPoly>;

/// Synchronized memo table of F_{g,n} in canonical slots 0..n-1.
class FgnTable {
public:
    [[nodiscard]] PolyPtr find(FgnKey key) const;
    [[nodiscard]] bool contains(FgnKey key) const { return find(key) != nullptr; }
    /// Requires the entry; throws MissingDependency otherwise.
    [[nodiscard]] PolyPtr at(FgnKey key) const;
    void insert(FgnKey key, LaurentPoly poly);
    [[nodiscard]] std::vector<FgnKey> keys() const;

private:
    mutable std::mutex mutex_;
    std::map<FgnKey, PolyPtr> entries_;
};

/// One ordered term (g1, I) x (g2, J) of the quadratic sum; I and J are
/// slot indices drawn from the `rest` set they were split from.
struct StablePartition {
    int g1 = 0;
    std::vector<std::size_t> I;
    int g2 = 0;
    std::vector<std::size_t> J;

    friend bool operator==(const StablePartition&, const StablePartition&) = default;
};

struct ZFactor {
    LaurentPoly numerator;
    LaurentPoly denominator;
};

/// z(t_i, t_j) = (t_i + 1)(t_j + 1) / (2 (t_i + t_j)) as a deferred quotient;
/// for i == j the pair is (t_i + 1)^2 over 4 t_i.
ZFactor z_factor(std::size_t i, std::size_t j, std::size_t nvars);

/// z(t, t) = (t + 1)^2 / (4t), which is already a Laurent polynomial.
LaurentPoly z_diagonal(std::size_t slot, std::size_t nvars);

/// F_{0,3} = -(1/16)(t_1+1)(t_2+1)(t_3+1)(1 + 1/(t_1 t_2 t_3)).
LaurentPoly initial_F03();
/// F_{1,1} = -z^3/6 + z^2/4 with z = z(t, t).
LaurentPoly initial_F11();

/// Every ordered splitting of the genus and of `rest` whose two parts are
/// both stable (2 g_k - 1 + |part| > 0). Duplicate-free.
std::vector<StablePartition> stable_partitions(int g, std::span<const std::size_t> rest);

/// Lower-order types the recursion for `key` reads from.
std::vector<FgnKey> dependencies(FgnKey key);

/// The bracketed integrand of the integral recursion, in n slots with slot
/// 0 as the integration variable. Every lower-order input must already be
/// in `table`.
LaurentPoly assemble_integrand(int g, int n, const FgnTable& table);

/// Computes and memoizes F_{g,n}. When a cache directory is configured,
/// results are persisted as F_g<g>_n<n>.json and reloaded (after
/// re-validation) on later runs.
class RecursionEngine {
public:
    RecursionEngine() = default;
    explicit RecursionEngine(std::optional<std::filesystem::path> cache_dir);

    /// Throws StabilityError for unstable (g, n) and InvariantFailure if a
    /// freshly computed polynomial fails the invariant suite.
    PolyPtr compute(int g, int n);

    [[nodiscard]] const FgnTable& table() const { return table_; }
    /// Whether the integrand for `key` was observed to be even in slot 0.
    /// Empty for initial values and for entries loaded from disk.
    [[nodiscard]] std::optional<bool> integrand_even(FgnKey key) const;
    [[nodiscard]] std::size_t cache_hits() const;

    [[nodiscard]] static std::string cache_file_name(FgnKey key);

private:
    PolyPtr compute_key(FgnKey key);
    std::optional<LaurentPoly> load_cached(FgnKey key);
    void persist(FgnKey key, const LaurentPoly& poly) const;

    FgnTable table_;
    std::optional<std::filesystem::path> cache_dir_;
    mutable std::mutex stats_mutex_;
    std::map<FgnKey, bool> integrand_even_;
    std::size_t cache_hits_ = 0;
};

}  // namespace rgrec::recursion
