#include "rgrec/recursion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rgrec/analysis.hpp"
#include "rgrec/errors.hpp"
#include "rgrec/poly_json.hpp"

namespace rgrec::recursion {

namespace {

// (t^2 - 1)^2 / t^2 and (t^2 - 1)^3 / t^2 in slot 0.
LaurentPoly weight_square(std::size_t nvars)
{
    return LaurentPoly::univariate(nvars, 0, {{2, 1}, {0, -2}, {-2, 1}});
}

LaurentPoly weight_cube(std::size_t nvars)
{
    return LaurentPoly::univariate(nvars, 0, {{4, 1}, {2, -3}, {0, 3}, {-2, -1}});
}

bool is_initial(FgnKey key)
{
    return (key.g == 0 && key.n == 3) || (key.g == 1 && key.n == 1);
}

bool even_in_slot(const LaurentPoly& p, std::size_t slot)
{
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [slot](const auto& term) { return term.first[slot] % 2 == 0; });
}

}  // namespace

FgnKey FgnKey::make(int g, int n)
{
    if (!stable(g, n))
        throw StabilityError("(g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                             ") is outside the stable range 2g-2+n > 0");
    return FgnKey{g, n};
}

std::string FgnKey::to_string() const
{
    return "(" + std::to_string(g) + "," + std::to_string(n) + ")";
}

// ---------------------------------------------------------------------------

PolyPtr FgnTable::find(FgnKey key) const
{
    std::lock_guard lock(mutex_);
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

PolyPtr FgnTable::at(FgnKey key) const
{
    auto p = find(key);
    if (!p) throw MissingDependency("F" + key.to_string() + " is not in the table");
    return p;
}

void FgnTable::insert(FgnKey key, LaurentPoly poly)
{
    if (poly.nvars() != static_cast<std::size_t>(key.n))
        throw VariableCountError("F" + key.to_string() + " must have n variables");
    auto ptr = std::make_shared<const LaurentPoly>(std::move(poly));
    std::lock_guard lock(mutex_);
    entries_.insert_or_assign(key, std::move(ptr));
}

std::vector<FgnKey> FgnTable::keys() const
{
    std::lock_guard lock(mutex_);
    std::vector<FgnKey> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

// ---------------------------------------------------------------------------

ZFactor z_factor(std::size_t i, std::size_t j, std::size_t nvars)
{
    const LaurentPoly one = LaurentPoly::constant(nvars, 1);
    const LaurentPoly ti = LaurentPoly::variable(nvars, i);
    if (i == j) return {(ti + one) * (ti + one), ti * BigRational(4)};
    const LaurentPoly tj = LaurentPoly::variable(nvars, j);
    return {(ti + one) * (tj + one), (ti + tj) * BigRational(2)};
}

LaurentPoly z_diagonal(std::size_t slot, std::size_t nvars)
{
    return LaurentPoly::univariate(nvars, slot, {{1, BigRational(1, 4)}, {0, BigRational(1, 2)}, {-1, BigRational(1, 4)}});
}

LaurentPoly initial_F03()
{
    LaurentPoly prod = LaurentPoly::constant(3, BigRational(-1, 16));
    for (std::size_t i = 0; i < 3; ++i) prod = prod * LaurentPoly::univariate(3, i, {{1, 1}, {0, 1}});
    LaurentPoly tail = LaurentPoly::constant(3, 1);
    tail.add_term(ExponentVector{-1, -1, -1}, 1);
    return prod * tail;
}

LaurentPoly initial_F11()
{
    const LaurentPoly z = z_diagonal(0, 1);
    const LaurentPoly z2 = z * z;
    return z2 * z * BigRational(-1, 6) + z2 * BigRational(1, 4);
}

std::vector<StablePartition> stable_partitions(int g, std::span<const std::size_t> rest)
{
    std::vector<StablePartition> out;
    if (g < 0) return out;
    const std::size_t r = rest.size();
    if (r >= 8 * sizeof(unsigned long)) throw DomainError("index set too large");
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
            StablePartition part{g1, {}, g2, {}};
            for (std::size_t k = 0; k < r; ++k) ((mask >> k) & 1ul ? part.I : part.J).push_back(rest[k]);
            const int left = 2 * g1 - 1 + static_cast<int>(part.I.size());
            const int right = 2 * g2 - 1 + static_cast<int>(part.J.size());
            if (left > 0 && right > 0) out.push_back(std::move(part));
        }
    }
    return out;
}

std::vector<FgnKey> dependencies(FgnKey key)
{
    std::set<FgnKey> deps;
    if (is_initial(key)) return {};
    const int g = key.g, n = key.n;
    if (FgnKey::stable(g, n - 1)) deps.insert({g, n - 1});
    if (FgnKey::stable(g - 1, n + 1)) deps.insert({g - 1, n + 1});
    std::vector<std::size_t> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    for (const auto& part : stable_partitions(g, rest)) {
        deps.insert({part.g1, static_cast<int>(part.I.size()) + 1});
        deps.insert({part.g2, static_cast<int>(part.J.size()) + 1});
    }
    return {deps.begin(), deps.end()};
}

LaurentPoly assemble_integrand(int g, int n, const FgnTable& table)
{
    FgnKey::make(g, n);
    const auto nv = static_cast<std::size_t>(n);
    const LaurentPoly w2 = weight_square(nv);
    const LaurentPoly w3 = weight_cube(nv);
    LaurentPoly integrand(nv);

    // Kernel and derivative sums over j >= 2, from F_{g,n-1}(t, t_{N \ {1,j}}).
    if (FgnKey::stable(g, n - 1)) {
        const PolyPtr lower = table.at({g, n - 1});
        for (std::size_t j = 1; j < nv; ++j) {
            std::vector<std::size_t> map{0};
            for (std::size_t s = 1; s < nv; ++s)
                if (s != j) map.push_back(s);
            const LaurentPoly derivative = differentiate(relabel(*lower, map, nv), 0);
            // t_j/(t^2 - t_j^2) (A(t) - A(t_j)) with A = w3 * dF/dt.
            integrand += LaurentPoly::variable(nv, j) * divided_difference_even(w3 * derivative, 0, j);
            integrand += w2 * derivative;
        }
    }

    // Quadratic block in the frame (u_1, t_2, ..., t_n, u_2).
    const std::size_t frame = nv + 1;
    const std::size_t u1 = 0;
    const std::size_t u2 = nv;
    LaurentPoly inner(frame);
    if (FgnKey::stable(g - 1, n + 1)) {
        const PolyPtr higher = table.at({g - 1, n + 1});
        std::vector<std::size_t> map{u1, u2};
        for (std::size_t s = 1; s < nv; ++s) map.push_back(s);
        inner += differentiate(differentiate(relabel(*higher, map, frame), u1), u2);
    }
    std::vector<std::size_t> rest(nv - 1);
    std::iota(rest.begin(), rest.end(), 1);
    for (const auto& part : stable_partitions(g, rest)) {
        const PolyPtr left = table.at({part.g1, static_cast<int>(part.I.size()) + 1});
        const PolyPtr right = table.at({part.g2, static_cast<int>(part.J.size()) + 1});
        std::vector<std::size_t> left_map{u1};
        left_map.insert(left_map.end(), part.I.begin(), part.I.end());
        std::vector<std::size_t> right_map{u2};
        right_map.insert(right_map.end(), part.J.begin(), part.J.end());
        inner += differentiate(relabel(*left, left_map, frame), u1) *
                 differentiate(relabel(*right, right_map, frame), u2);
    }
    if (!inner.is_zero()) integrand += w3 * merge_slots(inner, u2, u1) * BigRational(1, 2);
    return integrand;
}

// ---------------------------------------------------------------------------

RecursionEngine::RecursionEngine(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {}

std::string RecursionEngine::cache_file_name(FgnKey key)
{
    return "F_g" + std::to_string(key.g) + "_n" + std::to_string(key.n) + ".json";
}

std::optional<bool> RecursionEngine::integrand_even(FgnKey key) const
{
    std::lock_guard lock(stats_mutex_);
    const auto it = integrand_even_.find(key);
    if (it == integrand_even_.end()) return std::nullopt;
    return it->second;
}

std::size_t RecursionEngine::cache_hits() const
{
    std::lock_guard lock(stats_mutex_);
    return cache_hits_;
}

PolyPtr RecursionEngine::compute(int g, int n)
{
    return compute_key(FgnKey::make(g, n));
}

std::optional<LaurentPoly> RecursionEngine::load_cached(FgnKey key)
{
    if (!cache_dir_) return std::nullopt;
    const auto path = *cache_dir_ / cache_file_name(key);
    if (!std::filesystem::exists(path)) return std::nullopt;
    try {
        LaurentPoly poly = read_poly_file(path);
        if (poly.nvars() != static_cast<std::size_t>(key.n)) return std::nullopt;
        if (!analysis::run_invariant_suite(key.g, key.n, poly).passed()) return std::nullopt;
        return poly;
    } catch (const Error&) {
        return std::nullopt;
    }
}

void RecursionEngine::persist(FgnKey key, const LaurentPoly& poly) const
{
    if (!cache_dir_) return;
    write_poly_file(*cache_dir_ / cache_file_name(key), poly);
}

PolyPtr RecursionEngine::compute_key(FgnKey key)
{
    if (auto hit = table_.find(key)) return hit;

    if (auto cached = load_cached(key)) {
        table_.insert(key, std::move(*cached));
        std::lock_guard lock(stats_mutex_);
        ++cache_hits_;
        return table_.at(key);
    }

    LaurentPoly result(static_cast<std::size_t>(key.n));
    if (key.g == 0 && key.n == 3) {
        result = initial_F03();
    } else if (key.g == 1 && key.n == 1) {
        result = initial_F11();
    } else {
        // Lower levels first; dependencies() only returns strictly lower 2g-2+n.
        for (FgnKey dep : dependencies(key)) compute_key(dep);

        const LaurentPoly integrand = assemble_integrand(key.g, key.n, table_);
        const bool even = even_in_slot(integrand, 0);
        {
            std::lock_guard lock(stats_mutex_);
            integrand_even_[key] = even;
        }
        const LaurentPoly primitive = antiderivative(integrand, 0);
        if (!even)
            throw InvariantFailure("integrand of F" + key.to_string() + " has odd powers of the integration variable");

        // F = -(1/16) [G(t_1, ...) - G(-1, ...)].
        LaurentPoly at_lower = evaluate_partial(primitive, 0, BigRational(-1));
        if (key.n > 1) {
            std::vector<std::size_t> map(static_cast<std::size_t>(key.n - 1));
            std::iota(map.begin(), map.end(), 1);
            at_lower = relabel(at_lower, map, static_cast<std::size_t>(key.n));
        }
        result = (primitive - at_lower) * BigRational(-1, 16);
    }

    const analysis::Report report = analysis::run_invariant_suite(key.g, key.n, result);
    if (const auto* failure = report.first_failure())
        throw InvariantFailure("F" + key.to_string() + " failed " + failure->check + ": " + failure->detail);

    table_.insert(key, result);
    persist(key, result);
    return table_.at(key);
}

}  // namespace rgrec::recursion
