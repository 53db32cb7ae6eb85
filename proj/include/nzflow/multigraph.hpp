#ifndef NZFLOW_MULTIGRAPH_HPP
#define NZFLOW_MULTIGRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nzflow/errors.hpp"

namespace nzflow {

class EdgeSubset;

/// Loopless multigraph on vertices 0..n-1 with stable integer edge ids.
///
/// Edge slots remember their endpoints even when masked out of a subgraph
/// view or removed by 2-path suppression, so an id shared between related
/// graphs always names the same endpoints. Views share the structural
/// fingerprint of the graph they were cut from; edge subsets carry that
/// fingerprint so mixing subsets of unrelated graphs is rejected.
class MultiGraph {
public:
    MultiGraph() = default;

    /// build_graph: edge ids follow input order. Rejects loops and
    /// out-of-range endpoints.
    MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int slot_count() const { return static_cast<int>(ends_.size()); }
    int edge_count() const { return present_count_; }
    bool has_edge(int id) const;
    std::pair<int, int> ends(int id) const; // defined for every slot in range
    std::vector<int> edge_ids() const;      // present ids, ascending

    /// Incidence over present edges: (edge id, other endpoint) pairs,
    /// ascending by edge id; a parallel edge appears once per copy.
    const std::vector<std::pair<int, int>>& incident(int v) const;
    int degree(int v) const;

    std::uint64_t fingerprint() const { return fp_; }

    /// Subgraph view keeping only the given present edges. Slot table,
    /// vertex set and fingerprint are shared with this graph.
    MultiGraph restricted_to(const EdgeSubset& keep) const;

    /// Graph with the slot masked out (endpoints remembered).
    MultiGraph without_edge(int id) const;

    /// Graph with one extra present slot appended; returns the new graph and
    /// the fresh edge id.
    std::pair<MultiGraph, int> with_appended_edge(int u, int v) const;

private:
    void rebuild_cache();

    int n_ = 0;
    std::vector<std::pair<int, int>> ends_;
    std::vector<char> present_;
    int present_count_ = 0;
    std::uint64_t fp_ = 0;
    std::vector<std::vector<std::pair<int, int>>> incident_;
};

/// Set of edge ids of one ambient graph (or any view of it).
class EdgeSubset {
public:
    EdgeSubset() = default;
    EdgeSubset(const MultiGraph& g, std::vector<int> ids);
    static EdgeSubset all(const MultiGraph& g);
    static EdgeSubset empty(const MultiGraph& g);

    const std::vector<int>& ids() const { return ids_; }
    bool contains(int id) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool is_empty() const { return ids_.empty(); }
    std::uint64_t ambient() const { return ambient_fp_; }

    bool operator==(const EdgeSubset&) const = default;

private:
    friend EdgeSubset subset_merge(const EdgeSubset&, const EdgeSubset&, int mode);
    std::uint64_t ambient_fp_ = 0;
    std::vector<int> ids_; // sorted, unique
};

EdgeSubset set_union(const EdgeSubset& a, const EdgeSubset& b);
EdgeSubset set_intersection(const EdgeSubset& a, const EdgeSubset& b);
EdgeSubset set_difference(const EdgeSubset& a, const EdgeSubset& b);
EdgeSubset symmetric_difference(const EdgeSubset& a, const EdgeSubset& b);

struct ComponentPartition {
    std::vector<int> comp_of;               // per vertex
    std::vector<std::vector<int>> vertices; // per component, ascending
    std::vector<std::vector<int>> edges;    // per component, ascending
    int count() const { return static_cast<int>(vertices.size()); }
};

/// Connected components of g, or of the spanning subgraph (V(g), s).
/// Isolated vertices form singleton components.
ComponentPartition components(const MultiGraph& g);
ComponentPartition components(const MultiGraph& g, const EdgeSubset& s);

struct ParityProfile {
    std::vector<int> odd_vertices; // O_g(s): vertices of s with odd degree in g
    bool is_even = false;          // every vertex has even degree in s
    bool is_parity = false;        // d_s(v) == d_g(v) (mod 2) for all v
    bool is_spanning = false;      // every vertex of g meets an edge of s
};

ParityProfile parity_profile(const MultiGraph& g, const EdgeSubset& s);

struct SuppressionRecord {
    int removed1 = -1; // e1 on {outer1, mid}
    int removed2 = -1; // e2 on {mid, outer2}
    int added = -1;    // e0 on {outer1, outer2}, fresh highest id
    int outer1 = -1, mid = -1, outer2 = -1;
};

/// Removes the 2-path e1, e2 (meeting at exactly one vertex) and appends a
/// fresh edge joining the outer endpoints. The midpoint stays, possibly
/// isolated. Rejects non-adjacent edges and parallel pairs, whose outer
/// endpoints coincide and would force a loop.
std::pair<MultiGraph, SuppressionRecord> suppress_two_path(const MultiGraph& g, int e1, int e2);

/// Shortest cycle through e of length at most max_len, as edge ids in
/// traversal order starting with e; parallel edges count as 2-cycles. Ties
/// break toward the smallest edge-id sequence.
std::optional<std::vector<int>> find_short_cycle(const MultiGraph& g, int e, int max_len);

enum class SigmaTag { P1, P2, P3, P4, P5, P6, P7 };

/// Bipartite pattern of the 3x3 common-edge multiplicity matrix, classified
/// up to row/column permutation and side swap. P1 triple edge, P2 double
/// plus disjoint single, P3 double plus incident single, P4 path, P5 perfect
/// matching, P6 two at one vertex plus disjoint single, P7 star.
struct SigmaPattern {
    std::array<std::array<int, 3>, 3> m{};
    SigmaTag tag = SigmaTag::P1;
    bool star_on_side1 = false; // P7 only: star center is a row (side 1) member
    int star_index = -1;        // row or column holding the star center
};

SigmaPattern classify_sigma(const std::array<std::array<int, 3>, 3>& m);

enum class TripleTag { ThreeParallel, EdgePlusDigon, Star, Triangle, Path };

/// Shape of a connected 3-edge subgraph with canonical vertex roles:
/// ThreeParallel u1,u2; EdgePlusDigon u1-u2 edge plus u2,u3 digon; Star
/// center u1 with leaves u2,u3,u4; Triangle u1,u2,u3; Path u1-u2-u3-u4.
/// `edges` reorders the triple to match the roles.
struct TripleShape {
    TripleTag tag = TripleTag::Triangle;
    std::array<int, 4> u{-1, -1, -1, -1};
    std::array<int, 3> edges{-1, -1, -1};
};

TripleShape classify_triple(const MultiGraph& g, const EdgeSubset& triple);

} // namespace nzflow

#endif
