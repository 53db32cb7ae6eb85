#ifndef NZFLOW_FLOWSPACE_HPP
#define NZFLOW_FLOWSPACE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "nzflow/algebra.hpp"
#include "nzflow/multigraph.hpp"

namespace nzflow {

/// Per-edge direction assignment. Tails are stored for every slot, so one
/// orientation serves a graph together with all of its subgraph views.
struct Orientation {
    std::uint64_t ambient_fp = 0;
    std::vector<int> tail;

    int head_of(const MultiGraph& g, int e) const;
    bool operator==(const Orientation&) const = default;
};

Orientation default_orientation(const MultiGraph& g);

/// Map edge id -> group element relative to a reference orientation. The
/// domain lists the ids actually carrying values (a flow on a subgraph view
/// covers just that view's edges).
struct FlowAssignment {
    GroupSpec spec;
    Orientation orient;
    std::vector<int> domain;          // sorted edge ids
    std::vector<GroupElement> value;  // indexed by edge id

    const GroupElement& at(int e) const;
};

struct VerifyReport {
    bool valid = false;
    bool nowhere_zero = false;
    std::vector<GroupElement> residual; // per vertex: phi+(v) - phi-(v)
};

/// Conservation check. f must cover exactly the present edges of g.
VerifyReport verify_flow(const MultiGraph& g, const FlowAssignment& f);

/// Fundamental-cycle basis from the lexicographically first spanning forest
/// (smallest edge ids). Each cycle is a signed edge list starting with its
/// cotree edge traversed forward; +1 means traversal agrees with the
/// reference orientation.
struct FlowBasis {
    Orientation orient;
    std::vector<int> forest; // ascending
    std::vector<int> cotree; // ascending
    std::vector<std::vector<std::pair<int, int>>> cycles;
};

FlowBasis flow_basis(const MultiGraph& g, const Orientation& d);

/// Flow with the given cotree coordinates; tree-edge values are the forced
/// signed sums over fundamental cycles.
FlowAssignment evaluate_basis(const MultiGraph& g, const FlowBasis& b, const GroupSpec& spec,
                              const std::vector<GroupElement>& coords);

struct CountResult {
    unsigned long long count = 0; // |A|^beta
    std::optional<std::vector<FlowAssignment>> flows;
};

/// Exact flow count; enumerates all flows when the count fits the limit.
CountResult count_flows(const MultiGraph& g, const GroupSpec& spec,
                        unsigned long long enumerate_limit = 0);

struct SearchResult {
    std::optional<FlowAssignment> flow;
    /// Coordinate vectors accounted for: the whole |A|^beta space when the
    /// search proves none exists, the prefix explored up to and including
    /// the first solution otherwise.
    unsigned long long candidates = 0;
};

/// Deterministic backtracking over cotree coordinates with tree-edge
/// forcing; proven-none only after the coordinate space is exhausted.
SearchResult search_nowhere_zero(const MultiGraph& g, const GroupSpec& spec);

using Scalar = std::variant<GroupElement, Endomorphism>;

/// Edge-wise sum of scalar multiples. All terms must share the graph
/// domain, orientation and group.
FlowAssignment module_combine(const MultiGraph& g,
                              const std::vector<std::pair<Scalar, FlowAssignment>>& terms);

/// Same flow expressed against another orientation: values on edges whose
/// direction differs are negated.
FlowAssignment reorient_flow(const FlowAssignment& f, const Orientation& d2);

/// Values copied on f's domain, zero on the rest of g.
FlowAssignment extend_by_zero(const FlowAssignment& f, const MultiGraph& g);

struct IntegerFlow {
    Orientation orient;
    std::vector<int> domain;
    std::vector<long long> value;
};

struct IntegerVerifyReport {
    bool valid = false;
    bool nowhere_zero = false;
    std::vector<long long> residual;
};

IntegerVerifyReport verify_integer_flow(const MultiGraph& g, const IntegerFlow& f);

/// Lifts a valid nowhere-zero Z_k flow to an integer flow with values
/// h(e) == f(e) (mod k) and 0 < |h(e)| < k. Starts from representatives in
/// [1, k-1] and repeatedly pushes a surplus of k from a positive-excess
/// vertex to a negative-excess one along an augmenting path.
IntegerFlow lift_integer(const MultiGraph& g, const FlowAssignment& f);

/// Undoes a 2-path suppression on the flow level: the two removed edges
/// carry the suppressed edge's value, oriented along the same direction.
FlowAssignment transfer_suppressed_flow(const MultiGraph& g, const FlowAssignment& f2,
                                        const SuppressionRecord& rec);

} // namespace nzflow

#endif
