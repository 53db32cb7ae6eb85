#include "nzflow/fourflow.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace nzflow {

const GroupSpec& four_group() {
    static const GroupSpec spec = GroupSpec::field(2, 2);
    return spec;
}

namespace {

GroupElement gf4(int c0, int c1) { return four_group().element({c0, c1}); }

void require_four_group(const GroupSpec& spec) {
    if (spec != four_group())
        throw ValidationError("operation needs flows over the order-4 elementary abelian group");
}

} // namespace

ParityDecomposition parity_from_flow(const MultiGraph& g, const FlowAssignment& f) {
    require_four_group(f.spec);
    VerifyReport rep = verify_flow(g, f);
    if (!rep.nowhere_zero) throw ValidationError("parity split needs a verified nowhere-zero flow");
    std::array<std::vector<int>, 3> ids;
    for (int e : f.domain) {
        const GroupElement& a = f.at(e);
        if (a == gf4(1, 0)) ids[0].push_back(e);
        else if (a == gf4(0, 1)) ids[1].push_back(e);
        else ids[2].push_back(e);
    }
    ParityDecomposition d;
    for (int i = 0; i < 3; ++i) d.part[i] = EdgeSubset(g, ids[i]);
    return d;
}

FlowAssignment flow_from_parity(const MultiGraph& g, const ParityDecomposition& d) {
    int total = 0;
    EdgeSubset acc = EdgeSubset::empty(g);
    for (const EdgeSubset& p : d.part) {
        if (!parity_profile(g, p).is_parity)
            throw ValidationError("decomposition member is not a parity subgraph");
        total += p.size();
        acc = set_union(acc, p);
    }
    if (total != g.edge_count() || !(acc == EdgeSubset::all(g)))
        throw ValidationError("decomposition members do not partition the edge set");

    FlowAssignment f;
    f.spec = four_group();
    f.orient = default_orientation(g);
    f.domain = g.edge_ids();
    f.value.assign(g.slot_count(), f.spec.zero());
    const GroupElement vals[3] = {gf4(1, 0), gf4(0, 1), gf4(1, 1)};
    for (int i = 0; i < 3; ++i)
        for (int e : d.part[i].ids()) f.value[e] = vals[i];
    VerifyReport rep = verify_flow(g, f);
    if (!rep.nowhere_zero) throw ValidationError("parity decomposition did not produce a flow");
    return f;
}

FlowAssignment flow_from_even_cover(const MultiGraph& g, const EvenCover& c) {
    if (!parity_profile(g, c.c1).is_even) throw ValidationError("cover member C1 is not even");
    if (!parity_profile(g, c.c2).is_even) throw ValidationError("cover member C2 is not even");
    if (!(set_union(c.c1, c.c2) == EdgeSubset::all(g)))
        throw ValidationError("even cover leaves an edge uncovered");

    FlowAssignment f;
    f.spec = four_group();
    f.orient = default_orientation(g);
    f.domain = g.edge_ids();
    f.value.assign(g.slot_count(), f.spec.zero());
    for (int e : f.domain) f.value[e] = gf4(c.c1.contains(e) ? 1 : 0, c.c2.contains(e) ? 1 : 0);
    VerifyReport rep = verify_flow(g, f);
    if (!rep.nowhere_zero) throw ValidationError("even cover did not produce a flow");
    return f;
}

namespace {

/// Splits an even edge set into edge-disjoint cycles; each cycle is listed
/// in traversal order.
std::vector<std::vector<int>> cycle_decomposition(const MultiGraph& g, const EdgeSubset& s) {
    std::vector<char> unused(g.slot_count(), 0);
    for (int e : s.ids()) unused[e] = 1;
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < g.vertex_count(); ++start) {
        while (true) {
            // walk from `start` until some vertex repeats, then cut the loop out
            int first_edge = -1;
            for (const auto& [e, w] : g.incident(start)) {
                (void)w;
                if (unused[e]) {
                    first_edge = e;
                    break;
                }
            }
            if (first_edge == -1) break;
            std::vector<int> walk_edges;
            std::vector<int> walk_verts{start};
            int cur = start;
            while (true) {
                int next_edge = -1, next_vertex = -1;
                for (const auto& [e, w] : g.incident(cur))
                    if (unused[e]) {
                        next_edge = e;
                        next_vertex = w;
                        break;
                    }
                if (next_edge == -1) throw ValidationError("edge set is not even");
                unused[next_edge] = 0;
                walk_edges.push_back(next_edge);
                auto hit = std::find(walk_verts.begin(), walk_verts.end(), next_vertex);
                if (hit != walk_verts.end()) {
                    const std::size_t at = static_cast<std::size_t>(hit - walk_verts.begin());
                    std::vector<int> cycle(walk_edges.begin() + at, walk_edges.end());
                    cycles.push_back(cycle);
                    // reopen the unused part of the walk for the next rounds
                    for (std::size_t i = 0; i < at; ++i) unused[walk_edges[i]] = 1;
                    break;
                }
                walk_verts.push_back(next_vertex);
                cur = next_vertex;
            }
        }
    }
    return cycles;
}

/// +-1 circulation along one cycle relative to the reference orientation.
void add_circulation(const MultiGraph& g, const Orientation& ref, const std::vector<int>& cycle,
                     long long weight, std::vector<long long>& value) {
    // recover the traversal start: the shared vertex convention below walks
    // the cycle edge list in order
    int cur;
    if (cycle.size() == 2 && g.ends(cycle[0]) == g.ends(cycle[1])) {
        cur = g.ends(cycle[0]).first;
    } else if (cycle.size() == 1) {
        throw ValidationError("single edge cannot be a cycle");
    } else {
        auto [a, b] = g.ends(cycle[0]);
        auto [c, d] = g.ends(cycle[1]);
        // start at the endpoint of edge 0 not shared with edge 1
        cur = (a == c || a == d) ? b : a;
    }
    for (int e : cycle) {
        auto [x, y] = g.ends(e);
        const int next = (x == cur) ? y : x;
        value[e] += (ref.tail[e] == cur) ? weight : -weight;
        cur = next;
    }
}

} // namespace

IntegerFlow integer4_from_even_cover(const MultiGraph& g, const EvenCover& c) {
    if (!parity_profile(g, c.c1).is_even) throw ValidationError("cover member C1 is not even");
    if (!parity_profile(g, c.c2).is_even) throw ValidationError("cover member C2 is not even");
    if (!(set_union(c.c1, c.c2) == EdgeSubset::all(g)))
        throw ValidationError("even cover leaves an edge uncovered");

    IntegerFlow h;
    h.orient = default_orientation(g);
    h.domain = g.edge_ids();
    h.value.assign(g.slot_count(), 0);
    for (const auto& cycle : cycle_decomposition(g, c.c1)) add_circulation(g, h.orient, cycle, 2, h.value);
    for (const auto& cycle : cycle_decomposition(g, c.c2)) add_circulation(g, h.orient, cycle, 1, h.value);
    IntegerVerifyReport rep = verify_integer_flow(g, h);
    if (!rep.valid || !rep.nowhere_zero) throw ValidationError("even cover did not produce an integer 4-flow");
    return h;
}

std::variant<EvenlyCertificate, EvenlyViolation> evenly_certificate(const MultiGraph& g,
                                                                    const EdgeSubset& sigma) {
    if (!parity_profile(g, sigma).is_even) {
        EvenlyViolation v;
        v.reason = "sigma is not an even subgraph";
        return v;
    }
    ComponentPartition comps = components(g, sigma);
    EvenlyCertificate cert;
    cert.sigma = sigma;
    for (int c = 0; c < comps.count(); ++c) {
        int odd = 0;
        for (int v : comps.vertices[c])
            if (g.degree(v) % 2 == 1) ++odd;
        if (odd % 2 != 0) {
            EvenlyViolation v;
            v.reason = "component has an odd number of odd-degree vertices";
            v.component = c;
            v.component_vertices = comps.vertices[c];
            v.odd_count = odd;
            return v;
        }
        cert.component_vertices.push_back(comps.vertices[c]);
        cert.odd_count.push_back(odd);
    }
    return cert;
}

EvenCover even_cover_from_certificate(const MultiGraph& g, const EvenlyCertificate& cert) {
    auto check = evenly_certificate(g, cert.sigma);
    if (std::holds_alternative<EvenlyViolation>(check))
        throw ValidationError("invalid evenly certificate: " + std::get<EvenlyViolation>(check).reason);

    // T-join inside sigma for T = odd-degree vertices of g, one component at
    // a time: spanning tree, T-vertices paired in id order, tree paths xored
    ComponentPartition comps = components(g, cert.sigma);
    std::vector<char> in_sigma(g.slot_count(), 0);
    for (int e : cert.sigma.ids()) in_sigma[e] = 1;
    std::vector<char> in_join(g.slot_count(), 0);

    std::vector<int> parent_edge(g.vertex_count(), -1), parent_vertex(g.vertex_count(), -1);
    for (int c = 0; c < comps.count(); ++c) {
        const auto& verts = comps.vertices[c];
        const int root = verts.front();
        // BFS tree over sigma edges
        std::vector<int> queue{root};
        parent_vertex[root] = root;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            for (const auto& [e, y] : g.incident(x)) {
                if (!in_sigma[e] || parent_vertex[y] != -1) continue;
                parent_vertex[y] = x;
                parent_edge[y] = e;
                queue.push_back(y);
            }
        }
        std::vector<int> odd;
        for (int v : verts)
            if (g.degree(v) % 2 == 1) odd.push_back(v);
        for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
            for (int v : {odd[i], odd[i + 1]})
                for (int x = v; x != root; x = parent_vertex[x]) in_join[parent_edge[x]] ^= 1;
        }
    }

    std::vector<int> c2_ids;
    for (int e : g.edge_ids())
        if (in_sigma[e] ? in_join[e] : true) c2_ids.push_back(e);
    EdgeSubset c2(g, c2_ids);
    if (c2.is_empty()) c2 = cert.sigma; // avoid a degenerate empty member
    if (!parity_profile(g, c2).is_even)
        throw ValidationError("T-join construction did not produce an even complement");
    return EvenCover{cert.sigma, c2};
}

// ---------------------------------------------------------------------------
// glue_four: the 3-common-edge case analysis
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

bool is_partition_into_parity(const MultiGraph& view, const EdgeSubset& side,
                              const ParityDecomposition& d) {
    int total = 0;
    for (const EdgeSubset& p : d.part) {
        total += p.size();
        if (!parity_profile(view, p).is_parity) return false;
    }
    if (total != side.size()) return false;
    EdgeSubset acc = set_union(set_union(d.part[0], d.part[1]), d.part[2]);
    return acc == side;
}

std::array<std::array<int, 3>, 3> sigma_matrix(const ParityDecomposition& d1,
                                               const ParityDecomposition& d2) {
    std::array<std::array<int, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = set_intersection(d1.part[i], d2.part[j]).size();
    return m;
}

/// Non-star route: scan the 72 relabelings for one whose two symmetric
/// differences are even and cover everything, then read the flow off the
/// cover.
std::optional<FlowAssignment> even_cover_route(const MultiGraph& g, const ParityDecomposition& d1,
                                               const ParityDecomposition& d2) {
    const EdgeSubset everything = EdgeSubset::all(g);
    for (int swap = 0; swap < 2; ++swap) {
        const ParityDecomposition& a = swap ? d2 : d1;
        const ParityDecomposition& b = swap ? d1 : d2;
        for (const auto& rho : kPerms)
            for (const auto& sig : kPerms) {
                EdgeSubset x = symmetric_difference(set_union(a.part[rho[0]], a.part[rho[1]]),
                                                    set_union(b.part[sig[0]], b.part[sig[2]]));
                EdgeSubset y = symmetric_difference(set_union(a.part[rho[0]], a.part[rho[2]]),
                                                    set_union(b.part[sig[1]], b.part[sig[2]]));
                if (!(set_union(x, y) == everything)) continue;
                if (!parity_profile(g, x).is_even || !parity_profile(g, y).is_even) continue;
                return flow_from_even_cover(g, EvenCover{x, y});
            }
    }
    return std::nullopt;
}

struct StarInstance {
    EdgeSubset s1, s2;
    ParityDecomposition d1, d2;
    std::array<int, 3> e; // common edges, e[i] held by d2.part[i]; all in d1.part[0]
};

/// Recursion-level driver, forward declaration.
FlowAssignment glue_three(const MultiGraph& g, const EdgeSubset& s1, const EdgeSubset& s2,
                          const ParityDecomposition& d1, const ParityDecomposition& d2,
                          FourGlueStats& stats, int depth);

FlowAssignment fallback_search(const MultiGraph& g, FourGlueStats& stats) {
    ++stats.fallback_searches;
    SearchResult res = search_nowhere_zero(g, four_group());
    if (!res.flow)
        throw FlowlessError("union admits no nowhere-zero 4-flow (proven after " +
                            std::to_string(res.candidates) + " candidates)");
    return *res.flow;
}

/// Rebuilds a subset against a surgically modified graph, dropping `remove`
/// ids and appending `add` ids when nonnegative.
EdgeSubset rebuild_subset(const MultiGraph& g, const EdgeSubset& s, int remove1, int remove2,
                          int add) {
    std::vector<int> ids;
    for (int id : s.ids())
        if (id != remove1 && id != remove2) ids.push_back(id);
    if (add >= 0) ids.push_back(add);
    return EdgeSubset(g, ids);
}

/// Case 1: a 2-path inside one decomposition member avoiding the common
/// edges is suppressed in lockstep in the graph, the side and the member;
/// the flow of the smaller instance transfers back across the suppression.
std::optional<FlowAssignment> try_case1(const MultiGraph& g, const StarInstance& inst,
                                        FourGlueStats& stats, int depth) {
    const std::array<const EdgeSubset*, 6> members = {&inst.d1.part[0], &inst.d1.part[1],
                                                      &inst.d1.part[2], &inst.d2.part[0],
                                                      &inst.d2.part[1], &inst.d2.part[2]};
    auto is_common = [&](int id) {
        return id == inst.e[0] || id == inst.e[1] || id == inst.e[2];
    };
    for (int mi = 0; mi < 6; ++mi) {
        const auto& ids = members[mi]->ids();
        for (std::size_t a = 0; a < ids.size(); ++a) {
            if (is_common(ids[a])) continue;
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                if (is_common(ids[b])) continue;
                auto [p, q] = g.ends(ids[a]);
                auto [r, s] = g.ends(ids[b]);
                int shared = 0;
                for (int v : {p, q})
                    if (v == r || v == s) ++shared;
                if (shared != 1) continue;

                auto [g2, rec] = suppress_two_path(g, ids[a], ids[b]);
                const bool on_side1 = mi < 3;
                StarInstance next;
                next.e = inst.e;
                next.s1 = rebuild_subset(g2, inst.s1, rec.removed1, rec.removed2,
                                         on_side1 ? rec.added : -1);
                next.s2 = rebuild_subset(g2, inst.s2, rec.removed1, rec.removed2,
                                         on_side1 ? -1 : rec.added);
                for (int i = 0; i < 3; ++i) {
                    next.d1.part[i] = rebuild_subset(g2, inst.d1.part[i], rec.removed1, rec.removed2,
                                                     (on_side1 && mi == i) ? rec.added : -1);
                    next.d2.part[i] = rebuild_subset(g2, inst.d2.part[i], rec.removed1, rec.removed2,
                                                     (!on_side1 && mi - 3 == i) ? rec.added : -1);
                }
                ++stats.case1_suppressions;
                FlowAssignment inner =
                    glue_three(g2, next.s1, next.s2, next.d1, next.d2, stats, depth + 1);
                return transfer_suppressed_flow(g, inner, rec);
            }
        }
    }
    return std::nullopt;
}

/// Degenerate 2-path whose outer endpoints coincide: a parallel pair inside
/// one member, avoiding the common edges. Both edges are deleted (degree
/// parities survive), the smaller instance is solved, and the pair returns
/// as a 2-cycle carrying a common nonzero value.
std::optional<FlowAssignment> try_digon_deletion(const MultiGraph& g, const StarInstance& inst,
                                                 FourGlueStats& stats, int depth) {
    const std::array<const EdgeSubset*, 6> members = {&inst.d1.part[0], &inst.d1.part[1],
                                                      &inst.d1.part[2], &inst.d2.part[0],
                                                      &inst.d2.part[1], &inst.d2.part[2]};
    auto is_common = [&](int id) {
        return id == inst.e[0] || id == inst.e[1] || id == inst.e[2];
    };
    for (int mi = 0; mi < 6; ++mi) {
        const auto& ids = members[mi]->ids();
        for (std::size_t a = 0; a < ids.size(); ++a) {
            if (is_common(ids[a])) continue;
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                if (is_common(ids[b])) continue;
                auto [p, q] = g.ends(ids[a]);
                auto [r, s] = g.ends(ids[b]);
                if (std::minmax(p, q) != std::minmax(r, s)) continue;

                MultiGraph g2 = g.restricted_to(
                    rebuild_subset(g, EdgeSubset::all(g), ids[a], ids[b], -1));
                StarInstance next;
                next.e = inst.e;
                next.s1 = rebuild_subset(g2, inst.s1, ids[a], ids[b], -1);
                next.s2 = rebuild_subset(g2, inst.s2, ids[a], ids[b], -1);
                for (int i = 0; i < 3; ++i) {
                    next.d1.part[i] = rebuild_subset(g2, inst.d1.part[i], ids[a], ids[b], -1);
                    next.d2.part[i] = rebuild_subset(g2, inst.d2.part[i], ids[a], ids[b], -1);
                }
                ++stats.digon_deletions;
                FlowAssignment inner =
                    glue_three(g2, next.s1, next.s2, next.d1, next.d2, stats, depth + 1);

                // opposite directions around the 2-cycle keep conservation
                FlowAssignment out = inner;
                out.value[ids[a]] = four_group().element({1, 0});
                out.value[ids[b]] = four_group().element({1, 0});
                out.orient.tail[ids[a]] = p;
                out.orient.tail[ids[b]] = q;
                out.domain.push_back(ids[a]);
                out.domain.push_back(ids[b]);
                std::sort(out.domain.begin(), out.domain.end());
                return out;
            }
        }
    }
    return std::nullopt;
}

/// Parallel common edges: fold one of the pair into the member holding the
/// single edge and drop the other from side 2 entirely, reducing to the
/// 2-common-edge bound.
std::optional<FlowAssignment> try_parallel_move(const MultiGraph& g, const StarInstance& inst,
                                                const TripleShape& shape, FourGlueStats& stats) {
    const int ea = shape.edges[0], eb = shape.edges[1], ec = shape.edges[2];
    auto member_of = [&](int id) {
        for (int i = 0; i < 3; ++i)
            if (inst.d2.part[i].contains(id)) return i;
        return -1;
    };
    const int ia = member_of(ea), ib = member_of(eb), ic = member_of(ec);
    if (ia < 0 || ib < 0 || ic < 0) return std::nullopt;

    ParityDecomposition d2m = inst.d2;
    d2m.part[ib] = set_difference(d2m.part[ib], EdgeSubset(g, {eb}));
    d2m.part[ia] = set_union(d2m.part[ia], EdgeSubset(g, {eb}));
    d2m.part[ic] = set_difference(d2m.part[ic], EdgeSubset(g, {ec}));
    EdgeSubset s2m = set_difference(inst.s2, EdgeSubset(g, {ec}));

    FlowAssignment f1 = flow_from_parity(g.restricted_to(inst.s1), inst.d1);
    FlowAssignment f2 = flow_from_parity(g.restricted_to(s2m), d2m);
    ++stats.parallel_moves;
    return glue_k(g, inst.s1, s2m, 4, f1, f2).flow;
}

/// Star-shape commons: the component of part0 u part1 at the center splits
/// into two cycles meeting only there; swapping one cycle between the
/// members lands the pattern outside the star case.
std::optional<FlowAssignment> try_star_reroute(const MultiGraph& g, const StarInstance& inst,
                                               const TripleShape& shape, FourGlueStats& stats) {
    const int center = shape.u[0];
    EdgeSubset both = set_union(inst.d1.part[0], inst.d1.part[1]);
    ComponentPartition comps = components(g, both);
    const int cid = comps.comp_of[center];
    const std::vector<int>& theta = comps.edges[cid];

    std::map<int, int> deg;
    for (int e : theta) {
        deg[g.ends(e).first]++;
        deg[g.ends(e).second]++;
    }
    if (deg[center] != 4) return std::nullopt;
    for (auto [v, d] : deg)
        if (v != center && d != 2) return std::nullopt;

    // walk one of the two cycles off the center
    std::vector<char> used(g.slot_count(), 0);
    std::vector<int> lambda1;
    int cur = center;
    do {
        int pick = -1, to = -1;
        for (const auto& [e, w] : g.incident(cur)) {
            if (used[e] || !std::binary_search(theta.begin(), theta.end(), e)) continue;
            pick = e;
            to = w;
            break;
        }
        if (pick == -1) return std::nullopt;
        used[pick] = 1;
        lambda1.push_back(pick);
        cur = to;
    } while (cur != center);

    std::vector<int> lambda2;
    for (int e : theta)
        if (!used[e]) lambda2.push_back(e);

    for (const std::vector<int>& lam : {lambda1, lambda2}) {
        EdgeSubset lambda(g, lam);
        ParityDecomposition d1m = inst.d1;
        d1m.part[0] = symmetric_difference(d1m.part[0], lambda);
        d1m.part[1] = symmetric_difference(d1m.part[1], lambda);
        SigmaPattern pat = classify_sigma(sigma_matrix(d1m, inst.d2));
        if (pat.tag == SigmaTag::P7) continue;
        std::optional<FlowAssignment> flow = even_cover_route(g, d1m, inst.d2);
        if (flow) {
            ++stats.star_reroutes;
            return flow;
        }
    }
    return std::nullopt;
}

/// When the component of part[i] u part[j] holding e_i misses e_j, xoring
/// that component across the two members gathers both edges in one member
/// and leaves the star case.
std::optional<FlowAssignment> try_component_reroute(const MultiGraph& g, const StarInstance& inst,
                                                    FourGlueStats& stats) {
    const std::array<std::pair<int, int>, 3> pairs = {std::pair{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        EdgeSubset both = set_union(inst.d2.part[i], inst.d2.part[j]);
        ComponentPartition comps = components(g, both);
        const int ci = comps.comp_of[g.ends(inst.e[i]).first];
        const int cj = comps.comp_of[g.ends(inst.e[j]).first];
        if (ci == cj) continue;
        for (int take : {ci, cj}) {
            EdgeSubset theta(g, comps.edges[take]);
            ParityDecomposition d2m = inst.d2;
            d2m.part[i] = symmetric_difference(d2m.part[i], theta);
            d2m.part[j] = symmetric_difference(d2m.part[j], theta);
            SigmaPattern pat = classify_sigma(sigma_matrix(inst.d1, d2m));
            if (pat.tag == SigmaTag::P7) continue;
            std::optional<FlowAssignment> flow = even_cover_route(g, inst.d1, d2m);
            if (flow) {
                ++stats.component_reroutes;
                return flow;
            }
        }
    }
    return std::nullopt;
}

/// Remaining shapes with joint components: one of the three member pairs on
/// side 2 joins the side-1 even remainder into a spanning even subgraph
/// whose components each hold an even number of odd vertices.
std::optional<FlowAssignment> try_evenly_route(const MultiGraph& g, const StarInstance& inst,
                                               FourGlueStats& stats) {
    const std::array<std::pair<int, int>, 3> pairs = {std::pair{0, 1}, {0, 2}, {1, 2}};
    EdgeSubset side1_even = set_union(inst.d1.part[1], inst.d1.part[2]);
    for (auto [i, j] : pairs) {
        EdgeSubset sigma = set_union(side1_even, set_union(inst.d2.part[i], inst.d2.part[j]));
        auto cert = evenly_certificate(g, sigma);
        if (!std::holds_alternative<EvenlyCertificate>(cert)) continue;
        EvenCover cover = even_cover_from_certificate(g, std::get<EvenlyCertificate>(cert));
        ++stats.evenly_steps;
        return flow_from_even_cover(g, cover);
    }
    return std::nullopt;
}

FlowAssignment glue_three(const MultiGraph& g, const EdgeSubset& s1_in, const EdgeSubset& s2_in,
                          const ParityDecomposition& d1_in, const ParityDecomposition& d2_in,
                          FourGlueStats& stats, int depth) {
    if (depth > 4 * g.slot_count() + 16)
        return fallback_search(g, stats); // surgery must shrink; never loop

    if (!is_partition_into_parity(g.restricted_to(s1_in), s1_in, d1_in) ||
        !is_partition_into_parity(g.restricted_to(s2_in), s2_in, d2_in))
        return fallback_search(g, stats);

    SigmaPattern pat = classify_sigma(sigma_matrix(d1_in, d2_in));
    if (pat.tag != SigmaTag::P7) {
        std::optional<FlowAssignment> flow = even_cover_route(g, d1_in, d2_in);
        if (flow) {
            ++stats.even_cover_steps;
            return *flow;
        }
        return fallback_search(g, stats);
    }

    // normalize the star onto side 1, member 0, and order the commons so
    // that e[i] sits in d2.part[i]
    StarInstance inst;
    inst.s1 = pat.star_on_side1 ? s1_in : s2_in;
    inst.s2 = pat.star_on_side1 ? s2_in : s1_in;
    inst.d1 = pat.star_on_side1 ? d1_in : d2_in;
    inst.d2 = pat.star_on_side1 ? d2_in : d1_in;
    std::swap(inst.d1.part[0], inst.d1.part[pat.star_index]);
    EdgeSubset common = set_intersection(inst.s1, inst.s2);
    for (int i = 0; i < 3; ++i) {
        EdgeSubset hit = set_intersection(common, inst.d2.part[i]);
        if (hit.size() != 1) return fallback_search(g, stats);
        inst.e[i] = hit.ids()[0];
    }

    try {
        if (auto flow = try_case1(g, inst, stats, depth)) return *flow;
        if (auto flow = try_digon_deletion(g, inst, stats, depth)) return *flow;

        TripleShape shape = classify_triple(g, common);
        if (shape.tag == TripleTag::ThreeParallel || shape.tag == TripleTag::EdgePlusDigon) {
            if (auto flow = try_parallel_move(g, inst, shape, stats)) return *flow;
        }
        if (shape.tag == TripleTag::Star) {
            if (auto flow = try_star_reroute(g, inst, shape, stats)) return *flow;
        }
        if (auto flow = try_component_reroute(g, inst, stats)) return *flow;
        if (auto flow = try_evenly_route(g, inst, stats)) return *flow;
    } catch (const ValidationError&) {
        // a property the case analysis relies on failed mid-route
    }
    return fallback_search(g, stats);
}

} // namespace

FlowAssignment glue_four(const MultiGraph& g, const EdgeSubset& s1, const EdgeSubset& s2,
                         const std::optional<FlowAssignment>& f1,
                         const std::optional<FlowAssignment>& f2, FourGlueStats* stats) {
    FourGlueStats local;
    FourGlueStats& st = stats ? *stats : local;

    if (!(set_union(s1, s2) == EdgeSubset::all(g)))
        throw ValidationError("subgraph union does not cover the graph");
    EdgeSubset common = set_intersection(s1, s2);
    if (common.size() > 3)
        throw HypothesisError("common edges " + std::to_string(common.size()) + " > 3");

    if (common.size() <= 2) {
        FlowAssignment flow1 = side_flow(g, s1, four_group(), f1, "subgraph 1");
        FlowAssignment flow2 = side_flow(g, s2, four_group(), f2, "subgraph 2");
        ++st.small_common;
        return glue_k(g, s1, s2, 4, flow1, flow2).flow;
    }

    ComponentPartition cc = components(g, common);
    int edge_components = 0;
    for (int c = 0; c < cc.count(); ++c)
        if (!cc.edges[c].empty()) ++edge_components;
    if (edge_components != 1)
        throw HypothesisError("common edges do not induce a connected subgraph");

    FlowAssignment flow1 = side_flow(g, s1, four_group(), f1, "subgraph 1");
    FlowAssignment flow2 = side_flow(g, s2, four_group(), f2, "subgraph 2");
    ParityDecomposition d1 = parity_from_flow(g.restricted_to(s1), flow1);
    ParityDecomposition d2 = parity_from_flow(g.restricted_to(s2), flow2);

    FlowAssignment out = glue_three(g, s1, s2, d1, d2, st, 0);
    VerifyReport rep = verify_flow(g, out);
    if (!rep.nowhere_zero) throw ValidationError("glued 4-flow failed verification");
    return out;
}

FlowAssignment cover4(const MultiGraph& g, FourGlueStats* stats) {
    // one shortest <=4-cycle per edge, deduplicated
    std::vector<std::vector<int>> family;
    std::set<std::vector<int>> seen;
    for (int e : g.edge_ids()) {
        auto cycle = find_short_cycle(g, e, 4);
        if (!cycle) {
            auto [u, v] = g.ends(e);
            throw HypothesisError("edge " + std::to_string(e) + " (" + std::to_string(u) + "-" +
                                  std::to_string(v) + ") lies on no cycle of length <= 4");
        }
        std::vector<int> key = *cycle;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) family.push_back(*cycle);
    }

    // prune until every member keeps a private edge
    std::vector<int> coverage(g.slot_count(), 0);
    for (const auto& cycle : family)
        for (int e : cycle) ++coverage[e];
    std::vector<char> kept(family.size(), 1);
    for (std::size_t idx = family.size(); idx-- > 0;) {
        bool redundant = true;
        for (int e : family[idx])
            if (coverage[e] < 2) {
                redundant = false;
                break;
            }
        if (redundant) {
            kept[idx] = 0;
            for (int e : family[idx]) --coverage[e];
        }
    }

    FourGlueStats local;
    FourGlueStats& st = stats ? *stats : local;
    std::optional<FlowAssignment> flow;
    std::optional<EdgeSubset> covered;
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        if (!kept[idx]) continue;
        const std::vector<int>& cycle = family[idx];

        // constant (1,0) around the cycle; over the exponent-2 group any
        // orientation conserves on an even subgraph
        FlowAssignment circulation;
        circulation.spec = four_group();
        circulation.orient = default_orientation(g);
        circulation.domain = cycle;
        std::sort(circulation.domain.begin(), circulation.domain.end());
        circulation.value.assign(g.slot_count(), circulation.spec.zero());
        for (int e : cycle) circulation.value[e] = circulation.spec.element({1, 0});

        if (!covered) {
            covered = EdgeSubset(g, cycle);
            flow = circulation;
            continue;
        }
        EdgeSubset cycle_set(g, cycle);
        EdgeSubset next = set_union(*covered, cycle_set);
        MultiGraph view = g.restricted_to(next);
        EdgeSubset shared = set_intersection(*covered, cycle_set);
        if (shared.size() <= 2) {
            ++st.small_common;
            flow = glue_k(view, *covered, cycle_set, 4, flow, circulation).flow;
        } else {
            flow = glue_four(view, *covered, cycle_set, flow, circulation, &st);
        }
        covered = next;
    }
    if (!flow || !(*covered == EdgeSubset::all(g)))
        throw ValidationError("short-cycle family failed to cover the graph");
    VerifyReport rep = verify_flow(g, *flow);
    if (!rep.nowhere_zero) throw ValidationError("cover flow failed verification");
    return *flow;
}

FlowAssignment bundle_four(const BundleSpec& spec, FourGlueStats* stats) {
    for (int v = 0; v < spec.base.vertex_count(); ++v)
        if (spec.base.degree(v) == 0)
            throw HypothesisError("base factor has an isolated vertex " + std::to_string(v));
    for (int v = 0; v < spec.fiber.vertex_count(); ++v)
        if (spec.fiber.degree(v) == 0)
            throw HypothesisError("fiber factor has an isolated vertex " + std::to_string(v));
    MultiGraph g = cartesian_bundle(spec);
    return cover4(g, stats);
}

} // namespace nzflow
