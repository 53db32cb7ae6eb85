#ifndef NZFLOW_FOURFLOW_HPP
#define NZFLOW_FOURFLOW_HPP

#include <variant>

#include "nzflow/generators.hpp"
#include "nzflow/glue.hpp"

namespace nzflow {

/// The additive group of GF(4): elements (0,0), (1,0), (0,1), (1,1).
const GroupSpec& four_group();

/// Three pairwise-disjoint parity subgraphs of a target subgraph whose
/// union is the target; empty members are allowed.
struct ParityDecomposition {
    std::array<EdgeSubset, 3> part;
};

/// Spanning even subgraph whose components each meet an even number of
/// odd-degree vertices of the ambient graph.
struct EvenlyCertificate {
    EdgeSubset sigma;
    std::vector<std::vector<int>> component_vertices;
    std::vector<int> odd_count; // per component, each even
};

struct EvenlyViolation {
    std::string reason;
    int component = -1;
    std::vector<int> component_vertices;
    int odd_count = 0;
};

/// Two even subsets covering every edge.
struct EvenCover {
    EdgeSubset c1, c2;
};

/// Splits a verified nowhere-zero GF(4)-group flow into the three value
/// classes (1,0), (0,1), (1,1); each class is a parity subgraph.
ParityDecomposition parity_from_flow(const MultiGraph& g, const FlowAssignment& f);

/// Inverse direction: members get values (1,0), (0,1), (1,1); validates the
/// decomposition invariants first.
FlowAssignment flow_from_parity(const MultiGraph& g, const ParityDecomposition& d);

/// phi(e) = (e in C1, e in C2) over the exponent-2 group.
FlowAssignment flow_from_even_cover(const MultiGraph& g, const EvenCover& c);

/// Integer 4-flow 2*f1 + f2 from cycle decompositions of the cover sides;
/// values land in {+-1, +-2, +-3}.
IntegerFlow integer4_from_even_cover(const MultiGraph& g, const EvenCover& c);

/// Checks sigma even and every component's odd-vertex count even; a failed
/// check is reported as data, not an error.
std::variant<EvenlyCertificate, EvenlyViolation> evenly_certificate(const MultiGraph& g,
                                                                    const EdgeSubset& sigma);

/// C1 = sigma; C2 = (E - sigma) joined with a T-join inside sigma repairing
/// the parity of the odd-degree vertices, built per component by pairing
/// them in vertex order along spanning-tree paths. An empty C2 is
/// normalized to sigma.
EvenCover even_cover_from_certificate(const MultiGraph& g, const EvenlyCertificate& cert);

/// Route counters for the union-glue case analysis; fallback_searches
/// counts whole-graph searches taken when a proof-asserted property failed
/// at runtime.
struct FourGlueStats {
    int small_common = 0;       // at most 2 common edges, exponent scan
    int even_cover_steps = 0;   // non-star patterns via symmetric differences
    int case1_suppressions = 0; // 2-path suppression recursions
    int digon_deletions = 0;    // parallel-pair degenerate recursions
    int parallel_moves = 0;     // parallel common edges folded into one member
    int star_reroutes = 0;      // two-cycle swap at the star center
    int component_reroutes = 0; // split common component moved across members
    int evenly_steps = 0;       // T-join certificate route
    int fallback_searches = 0;
};

/// Nowhere-zero 4-flow on the union of two subgraphs that both admit one,
/// when their at most 3 common edges induce a connected subgraph. With 3
/// common edges the sides' parity decompositions drive a case analysis over
/// the bipartite common-edge pattern; every step re-verifies the properties
/// the analysis relies on and falls back to exhaustive search when one
/// fails.
FlowAssignment glue_four(const MultiGraph& g, const EdgeSubset& s1, const EdgeSubset& s2,
                         const std::optional<FlowAssignment>& f1 = std::nullopt,
                         const std::optional<FlowAssignment>& f2 = std::nullopt,
                         FourGlueStats* stats = nullptr);

/// Nowhere-zero 4-flow on a graph whose every edge lies on a cycle of
/// length at most 4: peels an irredundant short-cycle family and glues the
/// cycles in one at a time.
FlowAssignment cover4(const MultiGraph& g, FourGlueStats* stats = nullptr);

/// Builds the bundle, rejects isolated-vertex factors, and runs cover4;
/// every bundle edge lies on a 4-cycle when both factors are isolated-free.
FlowAssignment bundle_four(const BundleSpec& spec, FourGlueStats* stats = nullptr);

} // namespace nzflow

#endif
