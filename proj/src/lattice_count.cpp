#include "rgrec/lattice_count.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "rgrec/errors.hpp"
#include "rgrec/recursion.hpp"

namespace rgrec::lattice {

namespace {

// Incidence matrix of a small fixed graph: rows are faces, columns edges.
struct SmallGraph {
    int edges;
    std::array<std::array<int, 3>, 3> rows;
};

// Three dumbbells (outer face k carries the bridge twice), three
// figure-eights (outer face k), one theta.
constexpr std::array<SmallGraph, 7> kGraphs03{{
    {3, {{{2, 1, 1}, {0, 1, 0}, {0, 0, 1}}}},
    {3, {{{0, 1, 0}, {2, 1, 1}, {0, 0, 1}}}},
    {3, {{{0, 1, 0}, {0, 0, 1}, {2, 1, 1}}}},
    {2, {{{1, 1, 0}, {1, 0, 0}, {0, 1, 0}}}},
    {2, {{{1, 0, 0}, {1, 1, 0}, {0, 1, 0}}}},
    {2, {{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}},
    {3, {{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}}},
}};

long count_solutions(const SmallGraph& graph, const std::array<int, 3>& p)
{
    const int bound = (p[0] + p[1] + p[2]) / 2;
    long count = 0;
    std::array<int, 3> x{1, 1, 1};
    const auto check = [&] {
        for (int i = 0; i < 3; ++i) {
            int s = 0;
            for (int e = 0; e < graph.edges; ++e) s += graph.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] * x[static_cast<std::size_t>(e)];
            if (s != p[static_cast<std::size_t>(i)]) return false;
        }
        return true;
    };
    for (x[0] = 1; x[0] <= bound; ++x[0])
        for (x[1] = 1; x[1] <= bound; ++x[1]) {
            if (graph.edges == 2) {
                count += check() ? 1 : 0;
                continue;
            }
            for (x[2] = 1; x[2] <= bound; ++x[2]) count += check() ? 1 : 0;
        }
    return count;
}

void validate(int g, int n, std::span<const int> p)
{
    recursion::FgnKey::make(g, n);
    if (p.size() != static_cast<std::size_t>(n))
        throw DomainError("perimeter vector has " + std::to_string(p.size()) + " entries, expected " + std::to_string(n));
    for (int v : p)
        if (v < 1) throw DomainError("perimeter entries must be strictly positive, got " + std::to_string(v));
}

}  // namespace

BigRational base_N03(int p1, int p2, int p3)
{
    if (p1 < 1 || p2 < 1 || p3 < 1) throw DomainError("perimeter entries must be strictly positive");
    long total = 0;
    for (const auto& graph : kGraphs03) total += count_solutions(graph, {p1, p2, p3});
    return BigRational(total);
}

BigRational base_N11(int p)
{
    if (p < 1) throw DomainError("perimeter must be strictly positive");
    long three = 0, two = 0;
    for (int a = 1; 2 * a <= p; ++a)
        for (int b = 1; 2 * (a + b) <= p; ++b) {
            if (2 * (a + b) == p) ++two;
            for (int c = 1; 2 * (a + b + c) <= p; ++c)
                if (2 * (a + b + c) == p) ++three;
        }
    return BigRational(three, 6) + BigRational(two, 4);
}

CountKey CountKey::canonical(int g, int n, std::span<const int> p)
{
    CountKey key{g, n, {p.begin(), p.end()}};
    std::sort(key.p.begin(), key.p.end());
    return key;
}

std::string CountKey::to_string() const
{
    std::string s = std::to_string(g) + ":" + std::to_string(n) + ":";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

std::optional<BigRational> LatticeCounter::trivial_value(int g, int n, std::span<const int> p)
{
    if (!recursion::FgnKey::stable(g, n)) return BigRational(0);
    if (std::accumulate(p.begin(), p.end(), 0L) % 2 != 0) return BigRational(0);
    return std::nullopt;
}

std::optional<BigRational> LatticeCounter::lookup(int g, int n, std::vector<int> p, std::vector<CountKey>& missing)
{
    if (auto v = trivial_value(g, n, p)) return v;
    CountKey key = CountKey::canonical(g, n, p);
    {
        std::lock_guard lock(mutex_);
        const auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    missing.push_back(std::move(key));
    return std::nullopt;
}

std::optional<BigRational> LatticeCounter::try_step(int g, int n, std::span<const int> p, std::vector<CountKey>& missing)
{
    if (auto v = trivial_value(g, n, p)) return v;
    if (g == 0 && n == 3) return base_N03(p[0], p[1], p[2]);
    if (g == 1 && n == 1) return base_N11(p[0]);

    const std::size_t missing_before = missing.size();
    const int p1 = p[0];
    const std::vector<int> rest(p.begin() + 1, p.end());
    BigRational total;
    std::vector<int> args;

    // sum_{q} q (m - q) N_{g,n-1}(q, others), over 1 <= q < m.
    const auto kernel_sum = [&](int m, const std::vector<int>& others) {
        BigRational s;
        for (int q = 1; q < m; ++q) {
            args.assign(1, q);
            args.insert(args.end(), others.begin(), others.end());
            if (auto v = lookup(g, n - 1, args, missing)) s += *v * BigRational(static_cast<long>(q) * (m - q));
        }
        return s;
    };

    for (std::size_t j = 0; j < rest.size(); ++j) {
        const int pj = rest[j];
        std::vector<int> others;
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (k != j) others.push_back(rest[k]);
        BigRational s = kernel_sum(p1 + pj, others);
        if (heaviside(p1 - pj)) s += kernel_sum(p1 - pj, others);
        if (heaviside(pj - p1)) s -= kernel_sum(pj - p1, others);
        total += s * BigRational(1, 2);
    }

    std::vector<std::size_t> indices(rest.size());
    std::iota(indices.begin(), indices.end(), 0);
    const auto partitions = recursion::stable_partitions(g, indices);
    for (int q1 = 1; q1 < p1; ++q1) {
        for (int q2 = 1; q1 + q2 < p1; ++q2) {
            const long weight = static_cast<long>(q1) * q2 * (p1 - q1 - q2);
            BigRational inner;
            if (g >= 1) {
                args.assign({q1, q2});
                args.insert(args.end(), rest.begin(), rest.end());
                if (auto v = lookup(g - 1, n + 1, args, missing)) inner += *v;
            }
            for (const auto& part : partitions) {
                std::vector<int> left{q1}, right{q2};
                for (auto i : part.I) left.push_back(rest[i]);
                for (auto j : part.J) right.push_back(rest[j]);
                auto a = lookup(part.g1, static_cast<int>(left.size()), left, missing);
                auto b = lookup(part.g2, static_cast<int>(right.size()), right, missing);
                if (a && b) inner += *a * *b;
            }
            total += inner * BigRational(weight, 2);
        }
    }

    if (missing.size() != missing_before) return std::nullopt;
    return total / BigRational(p1);
}

void LatticeCounter::resolve(const CountKey& key)
{
    std::vector<CountKey> stack{key};
    std::vector<CountKey> missing;
    while (!stack.empty()) {
        const CountKey top = stack.back();
        {
            std::lock_guard lock(mutex_);
            if (memo_.contains(top)) {
                stack.pop_back();
                continue;
            }
        }
        missing.clear();
        if (auto value = try_step(top.g, top.n, top.p, missing)) {
            std::lock_guard lock(mutex_);
            memo_.emplace(top, std::move(*value));
            stack.pop_back();
        } else {
            stack.insert(stack.end(), missing.begin(), missing.end());
        }
    }
}

BigRational LatticeCounter::compute(int g, int n, std::span<const int> p)
{
    validate(g, n, p);
    if (auto v = trivial_value(g, n, p)) return *v;
    const CountKey key = CountKey::canonical(g, n, p);
    resolve(key);
    std::lock_guard lock(mutex_);
    return memo_.at(key);
}

BigRational LatticeCounter::recursion_step(int g, int n, std::span<const int> p)
{
    validate(g, n, p);
    std::vector<CountKey> missing;
    while (true) {
        missing.clear();
        if (auto value = try_step(g, n, p, missing)) return *value;
        for (const auto& key : missing) resolve(key);
    }
}

std::size_t LatticeCounter::memo_size() const
{
    std::lock_guard lock(mutex_);
    return memo_.size();
}

std::map<CountKey, BigRational> LatticeCounter::memo() const
{
    std::lock_guard lock(mutex_);
    return memo_;
}

std::vector<std::vector<int>> perimeter_box(int n, int max)
{
    std::vector<std::vector<int>> out;
    if (n <= 0 || max <= 0) return out;
    std::vector<int> p(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(p);
        int i = n - 1;
        while (i >= 0 && p[static_cast<std::size_t>(i)] == max) p[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++p[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace rgrec::lattice
