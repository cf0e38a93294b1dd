#include "rgrec/ribbon_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rgrec/errors.hpp"
#include "rgrec/recursion.hpp"

namespace rgrec::graphs {

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm)
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int h = static_cast<int>(start); !seen[static_cast<std::size_t>(h)]; h = perm[static_cast<std::size_t>(h)]) {
            seen[static_cast<std::size_t>(h)] = true;
            cycle.push_back(h);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string format_cycles(const std::vector<std::vector<int>>& cycles)
{
    std::ostringstream os;
    for (const auto& c : cycles) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << ")";
    }
    return os.str();
}

// Partitions of `total` into exactly `parts` parts >= 3, nonincreasing.
void valence_partitions(int total, int parts, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out)
{
    if (parts == 0) {
        if (total == 0) out.push_back(current);
        return;
    }
    for (int d = std::min(max_part, total - 3 * (parts - 1)); d >= 3; --d) {
        if (d * parts < total) break;
        current.push_back(d);
        valence_partitions(total - d, parts - 1, d, current, out);
        current.pop_back();
    }
}

// Calls visit(alpha) for every fixed-point-free involution on 0..size-1.
void for_each_matching(std::vector<int>& alpha, const std::function<void(const std::vector<int>&)>& visit)
{
    const auto first = std::find(alpha.begin(), alpha.end(), -1);
    if (first == alpha.end()) {
        visit(alpha);
        return;
    }
    const auto a = static_cast<std::size_t>(first - alpha.begin());
    for (std::size_t b = a + 1; b < alpha.size(); ++b) {
        if (alpha[b] != -1) continue;
        alpha[a] = static_cast<int>(b);
        alpha[b] = static_cast<int>(a);
        for_each_matching(alpha, visit);
        alpha[a] = alpha[b] = -1;
    }
}

// Lattice points x in Z_+^e with A x = remaining, edges taken in order.
long count_points(const std::vector<std::pair<int, int>>& edge_faces, std::size_t edge, std::vector<int>& remaining)
{
    if (edge == edge_faces.size())
        return std::all_of(remaining.begin(), remaining.end(), [](int r) { return r == 0; }) ? 1 : 0;
    const auto [f1, f2] = edge_faces[edge];
    auto& r1 = remaining[static_cast<std::size_t>(f1)];
    auto& r2 = remaining[static_cast<std::size_t>(f2)];
    const int bound = f1 == f2 ? r1 / 2 : std::min(r1, r2);
    long count = 0;
    for (int len = 1; len <= bound; ++len) {
        r1 -= len;
        r2 -= len;
        count += count_points(edge_faces, edge + 1, remaining);
        r1 += len;
        r2 += len;
    }
    return count;
}

std::vector<std::pair<int, int>> edge_faces(const RibbonGraph& graph)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [h, partner] : graph.edge_list())
        out.emplace_back(graph.face_label[static_cast<std::size_t>(h)], graph.face_label[static_cast<std::size_t>(partner)]);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

int RibbonGraph::vertices() const { return static_cast<int>(cycles_of(sigma).size()); }

int RibbonGraph::faces() const { return static_cast<int>(cycles_of(phi()).size()); }

int RibbonGraph::genus() const { return (2 - vertices() + edges() - faces()) / 2; }

std::vector<int> RibbonGraph::phi() const
{
    std::vector<int> out(sigma.size());
    for (std::size_t h = 0; h < sigma.size(); ++h) out[h] = sigma[static_cast<std::size_t>(alpha[h])];
    return out;
}

bool RibbonGraph::connected() const
{
    if (sigma.empty()) return false;
    std::vector<bool> seen(sigma.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto h = static_cast<std::size_t>(stack.back());
        stack.pop_back();
        for (int nb : {sigma[h], alpha[h]}) {
            if (!seen[static_cast<std::size_t>(nb)]) {
                seen[static_cast<std::size_t>(nb)] = true;
                ++count;
                stack.push_back(nb);
            }
        }
    }
    return count == sigma.size();
}

int RibbonGraph::min_valence() const
{
    int best = half_edges();
    for (const auto& c : cycles_of(sigma)) best = std::min(best, static_cast<int>(c.size()));
    return best;
}

std::vector<std::pair<int, int>> RibbonGraph::edge_list() const
{
    std::vector<std::pair<int, int>> out;
    for (int h = 0; h < half_edges(); ++h)
        if (alpha[static_cast<std::size_t>(h)] > h) out.emplace_back(h, alpha[static_cast<std::size_t>(h)]);
    return out;
}

int IncidenceMatrix::column_sum(int edge) const
{
    int s = 0;
    for (int i = 0; i < rows; ++i) s += at(i, edge);
    return s;
}

IncidenceMatrix incidence_matrix(const RibbonGraph& graph)
{
    const auto edges = graph.edge_list();
    IncidenceMatrix m;
    m.rows = graph.faces();
    m.cols = static_cast<int>(edges.size());
    m.entries.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
    for (int eta = 0; eta < m.cols; ++eta) {
        const auto [h, partner] = edges[static_cast<std::size_t>(eta)];
        for (int side : {h, partner})
            ++m.entries[static_cast<std::size_t>(graph.face_label[static_cast<std::size_t>(side)] * m.cols + eta)];
    }
    return m;
}

CanonicalForm canonical_form(const RibbonGraph& graph)
{
    const int size = graph.half_edges();
    if (!graph.connected()) throw DomainError("canonical form requires a connected graph");
    CanonicalForm best;
    std::vector<int> relabel(static_cast<std::size_t>(size));
    std::vector<int> order;
    std::vector<int> encoding(static_cast<std::size_t>(3 * size));
    std::vector<int> best_order;

    for (int start = 0; start < size; ++start) {
        std::fill(relabel.begin(), relabel.end(), -1);
        order.assign(1, start);
        relabel[static_cast<std::size_t>(start)] = 0;
        for (std::size_t idx = 0; idx < order.size(); ++idx) {
            const auto h = static_cast<std::size_t>(order[idx]);
            for (int nb : {graph.sigma[h], graph.alpha[h]}) {
                if (relabel[static_cast<std::size_t>(nb)] < 0) {
                    relabel[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
                    order.push_back(nb);
                }
            }
        }
        for (int i = 0; i < size; ++i) {
            const auto h = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
            encoding[static_cast<std::size_t>(3 * i)] = relabel[static_cast<std::size_t>(graph.sigma[h])];
            encoding[static_cast<std::size_t>(3 * i + 1)] = relabel[static_cast<std::size_t>(graph.alpha[h])];
            encoding[static_cast<std::size_t>(3 * i + 2)] = graph.face_label[h];
        }
        if (best.aut_order == 0 || encoding < best.encoding) {
            best.encoding = encoding;
            best.aut_order = 1;
            best_order = order;
        } else if (encoding == best.encoding) {
            ++best.aut_order;
        }
    }

    best.graph.sigma.resize(static_cast<std::size_t>(size));
    best.graph.alpha.resize(static_cast<std::size_t>(size));
    best.graph.face_label.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        best.graph.sigma[static_cast<std::size_t>(i)] = best.encoding[static_cast<std::size_t>(3 * i)];
        best.graph.alpha[static_cast<std::size_t>(i)] = best.encoding[static_cast<std::size_t>(3 * i + 1)];
        best.graph.face_label[static_cast<std::size_t>(i)] = best.encoding[static_cast<std::size_t>(3 * i + 2)];
    }
    return best;
}

std::vector<GraphRecord> enumerate_ribbon_graphs(int g, int n, int guard_edges)
{
    const auto key = recursion::FgnKey::make(g, n);
    const int min_edges = 2 * g - 1 + n;
    const int max_edges = 3 * key.level();
    if (max_edges > guard_edges)
        throw GuardExceeded("type " + key.to_string() + " needs up to " + std::to_string(max_edges) +
                            " edges, above the enumeration guard of " + std::to_string(guard_edges));

    std::map<std::vector<int>, GraphRecord> found;
    for (int e = min_edges; e <= max_edges; ++e) {
        const int v = e - n + 2 - 2 * g;
        if (v < 1) continue;
        std::vector<std::vector<int>> partitions;
        std::vector<int> current;
        valence_partitions(2 * e, v, 2 * e, current, partitions);
        for (const auto& degrees : partitions) {
            RibbonGraph candidate;
            candidate.sigma.resize(static_cast<std::size_t>(2 * e));
            int base = 0;
            for (int d : degrees) {
                for (int k = 0; k < d; ++k) candidate.sigma[static_cast<std::size_t>(base + k)] = base + (k + 1) % d;
                base += d;
            }
            std::vector<int> alpha(static_cast<std::size_t>(2 * e), -1);
            for_each_matching(alpha, [&](const std::vector<int>& matching) {
                candidate.alpha = matching;
                const auto face_cycles = cycles_of(candidate.phi());
                if (static_cast<int>(face_cycles.size()) != n || !candidate.connected()) return;
                std::vector<int> labels(static_cast<std::size_t>(n));
                std::iota(labels.begin(), labels.end(), 0);
                candidate.face_label.assign(static_cast<std::size_t>(2 * e), 0);
                do {
                    for (std::size_t f = 0; f < face_cycles.size(); ++f)
                        for (int h : face_cycles[f]) candidate.face_label[static_cast<std::size_t>(h)] = labels[f];
                    CanonicalForm form = canonical_form(candidate);
                    if (found.contains(form.encoding)) continue;
                    GraphRecord record{form.graph, form.aut_order, incidence_matrix(form.graph)};
                    found.emplace(std::move(form.encoding), std::move(record));
                } while (std::next_permutation(labels.begin(), labels.end()));
            });
        }
    }

    std::vector<GraphRecord> out;
    out.reserve(found.size());
    for (auto& [enc, record] : found) out.push_back(std::move(record));
    return out;
}

std::string dump(const GraphRecord& record)
{
    const RibbonGraph& graph = record.graph;
    std::ostringstream os;
    os << "e=" << graph.edges() << " sigma=" << format_cycles(cycles_of(graph.sigma)) << " alpha=";
    for (const auto& [a, b] : graph.edge_list()) os << "(" << a << " " << b << ")";
    auto faces = cycles_of(graph.phi());
    std::sort(faces.begin(), faces.end(), [&](const auto& x, const auto& y) {
        return graph.face_label[static_cast<std::size_t>(x[0])] < graph.face_label[static_cast<std::size_t>(y[0])];
    });
    os << " faces=";
    for (std::size_t i = 0; i < faces.size(); ++i)
        os << (i ? "," : "") << graph.face_label[static_cast<std::size_t>(faces[i][0])] + 1 << ":"
           << format_cycles({faces[i]});
    os << " aut=" << record.aut_order;
    return os.str();
}

LaurentPoly oracle_F(const std::vector<GraphRecord>& records, int n)
{
    const auto nv = static_cast<std::size_t>(n);
    using Pair = std::pair<int, int>;
    struct Term {
        LaurentPoly numerator;
        std::map<Pair, int> denominators;
    };
    std::vector<Term> terms;
    std::map<Pair, int> common;
    const LaurentPoly one = LaurentPoly::constant(nv, 1);

    for (const auto& record : records) {
        const int e = record.graph.edges();
        Term term{LaurentPoly::constant(nv, BigRational(e % 2 == 0 ? 1 : -1, record.aut_order)), {}};
        for (auto [a, b] : edge_faces(record.graph)) {
            if (a > b) std::swap(a, b);
            if (a == b) {
                term.numerator = term.numerator * recursion::z_diagonal(static_cast<std::size_t>(a), nv);
                continue;
            }
            const auto ta = LaurentPoly::variable(nv, static_cast<std::size_t>(a));
            const auto tb = LaurentPoly::variable(nv, static_cast<std::size_t>(b));
            term.numerator = term.numerator * ((ta + one) * (tb + one)) * BigRational(1, 2);
            ++term.denominators[{a, b}];
        }
        for (const auto& [pair, mult] : term.denominators) common[pair] = std::max(common[pair], mult);
        terms.push_back(std::move(term));
    }

    LaurentPoly numerator(nv);
    for (auto& term : terms) {
        LaurentPoly lifted = term.numerator;
        for (const auto& [pair, mult] : common) {
            const auto it = term.denominators.find(pair);
            const int have = it == term.denominators.end() ? 0 : it->second;
            const auto sum = LaurentPoly::variable(nv, static_cast<std::size_t>(pair.first)) +
                             LaurentPoly::variable(nv, static_cast<std::size_t>(pair.second));
            if (mult > have) lifted = lifted * pow(sum, static_cast<unsigned>(mult - have));
        }
        numerator += lifted;
    }
    for (const auto& [pair, mult] : common)
        for (int k = 0; k < mult; ++k)
            numerator = divide_by_variable_sum(numerator, static_cast<std::size_t>(pair.first),
                                               static_cast<std::size_t>(pair.second));
    return numerator;
}

LaurentPoly oracle_F(int g, int n, int guard_edges)
{
    return oracle_F(enumerate_ribbon_graphs(g, n, guard_edges), n);
}

BigRational oracle_N(const std::vector<GraphRecord>& records, const std::vector<int>& p)
{
    for (int v : p)
        if (v < 1) throw DomainError("perimeter entries must be strictly positive");
    BigRational total;
    for (const auto& record : records) {
        if (record.graph.faces() != static_cast<int>(p.size())) throw DomainError("perimeter length mismatch");
        std::vector<int> remaining = p;
        const long points = count_points(edge_faces(record.graph), 0, remaining);
        if (points != 0) total += BigRational(points, record.aut_order);
    }
    return total;
}

BigRational oracle_N(int g, int n, const std::vector<int>& p, int guard_edges)
{
    if (p.size() != static_cast<std::size_t>(n)) throw DomainError("perimeter length mismatch");
    return oracle_N(enumerate_ribbon_graphs(g, n, guard_edges), p);
}

std::map<std::vector<int>, BigRational> oracle_N_table(const std::vector<GraphRecord>& records, int max_sum)
{
    std::map<std::vector<int>, BigRational> table;
    const int length_budget = max_sum / 2;  // sum p = 2 sum of edge lengths
    for (const auto& record : records) {
        const auto faces = edge_faces(record.graph);
        const auto e = faces.size();
        std::vector<int> p(static_cast<std::size_t>(record.graph.faces()), 0);
        const BigRational weight(1, record.aut_order);
        std::function<void(std::size_t, int)> visit = [&](std::size_t edge, int budget) {
            if (edge == e) {
                table[p] += weight;
                return;
            }
            const auto [f1, f2] = faces[edge];
            const int reserve = static_cast<int>(e - edge - 1);
            for (int len = 1; len <= budget - reserve; ++len) {
                p[static_cast<std::size_t>(f1)] += len;
                p[static_cast<std::size_t>(f2)] += len;
                visit(edge + 1, budget - len);
                p[static_cast<std::size_t>(f1)] -= len;
                p[static_cast<std::size_t>(f2)] -= len;
            }
        };
        visit(0, length_budget);
    }
    return table;
}

BigRational oracle_euler(const std::vector<GraphRecord>& records)
{
    BigRational total;
    for (const auto& record : records)
        total += BigRational(record.graph.edges() % 2 == 0 ? 1 : -1, record.aut_order);
    return total;
}

BigRational oracle_euler(int g, int n, int guard_edges)
{
    return oracle_euler(enumerate_ribbon_graphs(g, n, guard_edges));
}

}  // namespace rgrec::graphs
