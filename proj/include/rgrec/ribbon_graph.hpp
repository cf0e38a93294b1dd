#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rgrec/laurent_poly.hpp"
#include "rgrec/rational.hpp"

namespace rgrec::graphs {

/// Ribbon graph on half-edges 0..2e-1. Vertices are the cycles of
/// `sigma`, edges the pairs of the fixed-point-free involution `alpha`,
/// faces the cycles of phi = sigma o alpha (phi(h) = sigma[alpha[h]]).
/// `face_label[h]` is the zero-based label of the face containing h.
struct RibbonGraph {
    std::vector<int> sigma;
    std::vector<int> alpha;
    std::vector<int> face_label;

    [[nodiscard]] int half_edges() const { return static_cast<int>(sigma.size()); }
    [[nodiscard]] int edges() const { return half_edges() / 2; }
    [[nodiscard]] int vertices() const;
    [[nodiscard]] int faces() const;
    /// From v - e + n = 2 - 2g.
    [[nodiscard]] int genus() const;

    [[nodiscard]] std::vector<int> phi() const;
    [[nodiscard]] bool connected() const;
    [[nodiscard]] int min_valence() const;
    /// Each edge as (smaller half-edge, partner), ordered by the first.
    [[nodiscard]] std::vector<std::pair<int, int>> edge_list() const;
};

/// n x e matrix; entry (i, eta) counts the sides of edge eta on face i.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;

    [[nodiscard]] int at(int face, int edge) const { return entries[static_cast<std::size_t>(face * cols + edge)]; }
    [[nodiscard]] int column_sum(int edge) const;
};

IncidenceMatrix incidence_matrix(const RibbonGraph& graph);

struct GraphRecord {
    RibbonGraph graph;  // in canonical half-edge labeling
    int aut_order = 1;  // automorphisms fixing every face label
    IncidenceMatrix matrix;
};

/// Lexicographically minimal (sigma, alpha, label) encoding over all
/// breadth-first relabelings of a connected graph. The number of starting
/// half-edges that attain the minimum is the automorphism count.
struct CanonicalForm {
    std::vector<int> encoding;
    RibbonGraph graph;
    int aut_order = 0;
};
CanonicalForm canonical_form(const RibbonGraph& graph);

/// Every face-labeled ribbon graph of type (g, n) with valences >= 3, up
/// to label-preserving isomorphism, sorted by canonical encoding. Throws
/// GuardExceeded when 3(2g - 2 + n) > guard_edges.
std::vector<GraphRecord> enumerate_ribbon_graphs(int g, int n, int guard_edges = 6);

/// "e=<e> sigma=<cycles> alpha=<pairs> faces=<label:cycle,...> aut=<order>"
std::string dump(const GraphRecord& record);

/// sum (-1)^e / |Aut| prod_edges z(t_i, t_j), combined over a common
/// denominator and divided out exactly. Throws NonLaurentError otherwise.
LaurentPoly oracle_F(const std::vector<GraphRecord>& records, int n);
LaurentPoly oracle_F(int g, int n, int guard_edges = 6);

/// #{x in Z_+^e : A x = p} / |Aut| summed over the records.
BigRational oracle_N(const std::vector<GraphRecord>& records, const std::vector<int>& p);
BigRational oracle_N(int g, int n, const std::vector<int>& p, int guard_edges = 6);
/// oracle_N for every p with sum p <= max_sum, by one enumeration of edge
/// lengths per graph. Vectors with zero count are omitted.
std::map<std::vector<int>, BigRational> oracle_N_table(const std::vector<GraphRecord>& records, int max_sum);

/// sum (-1)^e / |Aut|.
BigRational oracle_euler(const std::vector<GraphRecord>& records);
BigRational oracle_euler(int g, int n, int guard_edges = 6);

}  // namespace rgrec::graphs
