#include "nzflow/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace nzflow {

MultiGraph gen_basic(BasicKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case BasicKind::Cycle:
            if (n < 2) throw ValidationError("cycle needs at least 2 vertices");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            return MultiGraph(n, edges);
        case BasicKind::Path:
            if (n < 1) throw ValidationError("path needs at least 1 vertex");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return MultiGraph(n, edges);
        case BasicKind::Complete:
            if (n < 1) throw ValidationError("complete graph needs at least 1 vertex");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            return MultiGraph(n, edges);
        case BasicKind::Petersen: {
            for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5); // outer cycle
            for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);       // spokes
            const int star[] = {5, 7, 9, 6, 8};
            for (int i = 0; i < 5; ++i) edges.emplace_back(star[i], star[(i + 1) % 5]); // pentagram
            return MultiGraph(10, edges);
        }
    }
    throw ValidationError("unknown basic graph kind");
}

MultiGraph cartesian_product(const MultiGraph& a, const MultiGraph& b) {
    const int nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int e : b.edge_ids()) {
            auto [x, y] = b.ends(e);
            edges.emplace_back(u * nb + x, u * nb + y);
        }
    for (int e : a.edge_ids()) {
        auto [u, v] = a.ends(e);
        for (int x = 0; x < nb; ++x) edges.emplace_back(u * nb + x, v * nb + x);
    }
    return MultiGraph(a.vertex_count() * nb, edges);
}

BundleSpec BundleSpec::untwisted(MultiGraph base, MultiGraph fiber) {
    BundleSpec spec;
    std::vector<int> identity(fiber.vertex_count());
    for (int i = 0; i < fiber.vertex_count(); ++i) identity[i] = i;
    spec.voltage.assign(base.slot_count(), identity);
    spec.base = std::move(base);
    spec.fiber = std::move(fiber);
    return spec;
}

bool is_fiber_automorphism(const MultiGraph& fiber, const std::vector<int>& perm) {
    const int n = fiber.vertex_count();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    std::map<std::pair<int, int>, int> mult, image;
    for (int e : fiber.edge_ids()) {
        auto [x, y] = fiber.ends(e);
        mult[{std::min(x, y), std::max(x, y)}]++;
        int px = perm[x], py = perm[y];
        image[{std::min(px, py), std::max(px, py)}]++;
    }
    return mult == image;
}

MultiGraph cartesian_bundle(const BundleSpec& spec) {
    const MultiGraph& base = spec.base;
    const MultiGraph& fiber = spec.fiber;
    if (static_cast<int>(spec.voltage.size()) != base.slot_count())
        throw ValidationError("bundle needs one voltage per base edge");
    for (int e : base.edge_ids())
        if (!is_fiber_automorphism(fiber, spec.voltage[e]))
            throw ValidationError("voltage on base edge " + std::to_string(e) +
                                  " is not a fiber automorphism");
    const int nf = fiber.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < base.vertex_count(); ++u)
        for (int e : fiber.edge_ids()) {
            auto [x, y] = fiber.ends(e);
            edges.emplace_back(u * nf + x, u * nf + y);
        }
    for (int e : base.edge_ids()) {
        auto [u, v] = base.ends(e);
        const std::vector<int>& sigma = spec.voltage[e];
        for (int x = 0; x < nf; ++x) edges.emplace_back(u * nf + x, v * nf + sigma[x]);
    }
    return MultiGraph(base.vertex_count() * nf, edges);
}

Figure1Corpus figure1_corpus() {
    Figure1Corpus out;
    out.petersen = gen_basic(BasicKind::Petersen);
    const MultiGraph& p = out.petersen;
    // edge ids: 0..4 outer cycle, 5..9 spokes i-(i+5), 10..14 pentagram
    // 5-7, 7-9, 9-6, 6-8, 8-5

    // first pair: side 2 is the 6-cycle 0-1-2-3-8-5-0, common is the
    // 3-matching {01, 23, 85}
    EdgeSubset s2a(p, {0, 1, 2, 8, 14, 5});
    EdgeSubset s1a = set_union(set_difference(EdgeSubset::all(p), s2a), EdgeSubset(p, {0, 2, 14}));
    out.cases[0] = Figure1Case{s1a, s2a, set_intersection(s1a, s2a)};

    // second pair: side 2 is the 5-cycle 0-1-2-7-5-0, common is the 2-path
    // {01, 12} plus the disjoint edge 57
    EdgeSubset s2b(p, {0, 1, 7, 10, 5});
    EdgeSubset s1b = set_union(set_difference(EdgeSubset::all(p), s2b), EdgeSubset(p, {0, 1, 10}));
    out.cases[1] = Figure1Case{s1b, s2b, set_intersection(s1b, s2b)};
    return out;
}

} // namespace nzflow
