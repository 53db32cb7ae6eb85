#ifndef NZFLOW_GENERATORS_HPP
#define NZFLOW_GENERATORS_HPP

#include <array>

#include "nzflow/multigraph.hpp"

namespace nzflow {

enum class BasicKind { Cycle, Path, Complete, Petersen };

/// Canonical labelings. Cycle: 0-1-...-(n-1)-0. Path: n vertices, n-1
/// edges. Complete: pairs in lexicographic order. Petersen: outer cycle
/// 0-1-2-3-4, spokes i-(i+5), inner pentagram 5-7-9-6-8-5.
MultiGraph gen_basic(BasicKind kind, int n = 0);

/// Cartesian product. Vertex (u, u') gets id u * |V(b)| + u'; fiber copies
/// (one per a-vertex) come first in the edge order, then base copies (one
/// per a-edge, spread over b-vertices).
MultiGraph cartesian_product(const MultiGraph& a, const MultiGraph& b);

/// Twisted product data: per base edge a permutation of the fiber's
/// vertices, required to be a fiber automorphism.
struct BundleSpec {
    MultiGraph base;
    MultiGraph fiber;
    std::vector<std::vector<int>> voltage; // per base edge id

    static BundleSpec untwisted(MultiGraph base, MultiGraph fiber);
};

/// True when the permutation preserves the fiber's edge multiplicities.
bool is_fiber_automorphism(const MultiGraph& fiber, const std::vector<int>& perm);

/// Vertices V(base) x V(fiber) with fiber edges inside each fiber copy and
/// base edges joining (u, x) to (v, sigma_e(x)) for each base edge e = uv.
/// With identity voltages this reproduces cartesian_product edge for edge.
MultiGraph cartesian_bundle(const BundleSpec& spec);

struct Figure1Case {
    EdgeSubset s1, s2, common;
    bool s1_has_four_flow = true;
    bool s2_has_four_flow = true;
};

/// The two Petersen decompositions whose common edges exceed the 2-edge
/// bound: a 3-edge matching, and a 2-path plus a disjoint edge. Both sides
/// of each admit nowhere-zero 4-flows while the whole graph does not.
struct Figure1Corpus {
    MultiGraph petersen;
    std::array<Figure1Case, 2> cases;
    bool petersen_has_four_flow = false;
};

Figure1Corpus figure1_corpus();

} // namespace nzflow

#endif
