#ifndef NZFLOW_GLUE_HPP
#define NZFLOW_GLUE_HPP

#include <optional>

#include "nzflow/flowspace.hpp"

namespace nzflow {

/// Two subgraphs covering the ambient graph, a field-kind value group, and
/// optionally pre-computed nowhere-zero flows on each side.
struct GlueInstance {
    const MultiGraph* graph = nullptr;
    EdgeSubset s1, s2;
    GroupSpec spec;
    std::optional<FlowAssignment> f1, f2;
};

struct GlueResult {
    FlowAssignment flow;
    int exponent = 0; // chosen power j of the primitive element
};

/// Combines nowhere-zero flows on two subgraphs with at most p^n - 2 common
/// edges into one on their union: both flows are moved to the ambient
/// orientation, extended by zero, and combined as phi_1 - b^j phi_2 for the
/// smallest exponent j that keeps every common edge nonzero. Each common
/// edge rules out exactly one exponent (a discrete log), so some j among the
/// p^n - 1 candidates always survives.
GlueResult glue_common(const GlueInstance& inst);

/// Left fold of glue_common over a part list; each prefix union and the next
/// part must stay within the common-edge bound.
FlowAssignment glue_many(const MultiGraph& g, const std::vector<EdgeSubset>& parts,
                         const GroupSpec& spec);

/// The k in {3,4,5} specialization over GF(3), GF(4), GF(5).
GlueResult glue_k(const MultiGraph& g, const EdgeSubset& s1, const EdgeSubset& s2, int k,
                  const std::optional<FlowAssignment>& f1 = std::nullopt,
                  const std::optional<FlowAssignment>& f2 = std::nullopt);

/// Nowhere-zero flow on the view g|s, reusing `supplied` when given,
/// otherwise searching. Throws FlowlessError after an exhausted search.
FlowAssignment side_flow(const MultiGraph& g, const EdgeSubset& s, const GroupSpec& spec,
                         const std::optional<FlowAssignment>& supplied, const char* side_name);

} // namespace nzflow

#endif
