#include "nzflow/flowspace.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace nzflow {

namespace {

constexpr unsigned long long kCountCap = 1ULL << 62;

unsigned long long saturating_pow(unsigned long long base, std::size_t exp) {
    unsigned long long out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > kCountCap / base) return kCountCap;
        out *= base;
    }
    return out;
}

void require_same_graph(std::uint64_t a, std::uint64_t b) {
    if (a != b) throw ValidationError("flow and graph domains do not match");
}

} // namespace

int Orientation::head_of(const MultiGraph& g, int e) const {
    auto [u, v] = g.ends(e);
    return tail[e] == u ? v : u;
}

Orientation default_orientation(const MultiGraph& g) {
    Orientation d;
    d.ambient_fp = g.fingerprint();
    d.tail.resize(g.slot_count());
    for (int e = 0; e < g.slot_count(); ++e) d.tail[e] = g.ends(e).first;
    return d;
}

const GroupElement& FlowAssignment::at(int e) const {
    if (e < 0 || e >= static_cast<int>(value.size())) throw ValidationError("edge id outside flow value table");
    return value[e];
}

VerifyReport verify_flow(const MultiGraph& g, const FlowAssignment& f) {
    require_same_graph(f.orient.ambient_fp, g.fingerprint());
    if (f.domain != g.edge_ids()) throw ValidationError("flow does not cover exactly the graph's edges");
    VerifyReport out;
    out.residual.assign(g.vertex_count(), f.spec.zero());
    out.nowhere_zero = true;
    for (int e : f.domain) {
        const GroupElement& a = f.at(e);
        if (a.is_zero()) out.nowhere_zero = false;
        const int t = f.orient.tail[e];
        const int h = f.orient.head_of(g, e);
        out.residual[t] = f.spec.add(out.residual[t], a);
        out.residual[h] = f.spec.sub(out.residual[h], a);
    }
    out.valid = true;
    for (const auto& r : out.residual)
        if (!r.is_zero()) out.valid = false;
    if (!out.valid) out.nowhere_zero = false;
    return out;
}

FlowBasis flow_basis(const MultiGraph& g, const Orientation& d) {
    require_same_graph(d.ambient_fp, g.fingerprint());
    FlowBasis b;
    b.orient = d;

    // lexicographically first spanning forest: scan edges by ascending id
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e : g.edge_ids()) {
        auto [u, v] = g.ends(e);
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            b.forest.push_back(e);
        } else {
            b.cotree.push_back(e);
        }
    }

    // tree adjacency for path walks
    std::vector<std::vector<std::pair<int, int>>> tree_adj(g.vertex_count());
    for (int e : b.forest) {
        auto [u, v] = g.ends(e);
        tree_adj[u].emplace_back(e, v);
        tree_adj[v].emplace_back(e, u);
    }

    for (int c : b.cotree) {
        const int t = d.tail[c];
        const int h = d.head_of(g, c);
        // BFS tree path from h to t
        std::vector<int> prev_edge(g.vertex_count(), -1), prev_vertex(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<int> q;
        q.push(h);
        seen[h] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (x == t) break;
            for (auto [e, y] : tree_adj[x]) {
                if (seen[y]) continue;
                seen[y] = 1;
                prev_edge[y] = e;
                prev_vertex[y] = x;
                q.push(y);
            }
        }
        std::vector<std::pair<int, int>> cycle{{c, +1}};
        std::vector<std::pair<int, int>> back;
        for (int x = t; x != h; x = prev_vertex[x]) {
            const int e = prev_edge[x];
            const int from = prev_vertex[x];
            back.emplace_back(e, d.tail[e] == from ? +1 : -1);
        }
        // back currently lists the h..t path from t backwards; restore walk order
        std::reverse(back.begin(), back.end());
        cycle.insert(cycle.end(), back.begin(), back.end());
        b.cycles.push_back(std::move(cycle));
    }
    return b;
}

FlowAssignment evaluate_basis(const MultiGraph& g, const FlowBasis& b, const GroupSpec& spec,
                              const std::vector<GroupElement>& coords) {
    if (coords.size() != b.cotree.size()) throw ValidationError("coordinate count does not match basis size");
    FlowAssignment f;
    f.spec = spec;
    f.orient = b.orient;
    f.domain = g.edge_ids();
    f.value.assign(g.slot_count(), spec.zero());
    for (std::size_t i = 0; i < b.cycles.size(); ++i)
        for (auto [e, sign] : b.cycles[i])
            f.value[e] = sign > 0 ? spec.add(f.value[e], coords[i]) : spec.sub(f.value[e], coords[i]);
    return f;
}

CountResult count_flows(const MultiGraph& g, const GroupSpec& spec, unsigned long long enumerate_limit) {
    FlowBasis b = flow_basis(g, default_orientation(g));
    const std::size_t beta = b.cotree.size();
    CountResult out;
    out.count = saturating_pow(spec.order(), beta);
    if (out.count >= kCountCap) throw ValidationError("flow count exceeds the supported range");
    if (enumerate_limit == 0 || out.count > enumerate_limit) return out;

    std::vector<FlowAssignment> flows;
    flows.reserve(out.count);
    std::vector<int> idx(beta, 0);
    std::vector<GroupElement> coords(beta, spec.zero());
    while (true) {
        for (std::size_t i = 0; i < beta; ++i) coords[i] = spec.element_at(idx[i]);
        flows.push_back(evaluate_basis(g, b, spec, coords));
        std::size_t pos = beta;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < spec.order()) break;
            idx[pos] = 0;
            if (pos == 0) {
                out.flows = std::move(flows);
                return out;
            }
        }
        if (beta == 0) break;
    }
    out.flows = std::move(flows);
    return out;
}

namespace {

struct SearchFrame {
    const MultiGraph& g;
    const GroupSpec& spec;
    const FlowBasis& basis;
    const std::vector<int>& order;                 // cycle indices, exploration order
    std::vector<GroupElement>& value;              // per edge, accumulated
    std::vector<int>& remaining;                   // per tree edge: unassigned cycles through it
    std::vector<GroupElement>& coords;             // per cycle index
    unsigned long long covered = 0;
    bool found = false;
};

void search_rec(SearchFrame& fr, std::size_t depth) {
    const std::size_t beta = fr.order.size();
    if (depth == beta) {
        fr.covered += 1;
        fr.found = true;
        return;
    }
    const int ci = fr.order[depth];
    const auto& cycle = fr.basis.cycles[ci];
    for (int idx = 0; idx < fr.spec.order(); ++idx) {
        GroupElement a = fr.spec.element_at(idx);
        if (a.is_zero()) {
            fr.covered += saturating_pow(fr.spec.order(), beta - depth - 1);
            continue;
        }
        bool dead = false;
        for (auto [e, sign] : cycle) {
            fr.value[e] = sign > 0 ? fr.spec.add(fr.value[e], a) : fr.spec.sub(fr.value[e], a);
            if (e != fr.basis.cotree[ci] && --fr.remaining[e] == 0 && fr.value[e].is_zero()) dead = true;
        }
        if (dead) {
            fr.covered += saturating_pow(fr.spec.order(), beta - depth - 1);
        } else {
            fr.coords[ci] = a;
            search_rec(fr, depth + 1);
            if (fr.found) return;
        }
        for (auto [e, sign] : cycle) {
            fr.value[e] = sign > 0 ? fr.spec.sub(fr.value[e], a) : fr.spec.add(fr.value[e], a);
            if (e != fr.basis.cotree[ci]) ++fr.remaining[e];
        }
    }
}

} // namespace

SearchResult search_nowhere_zero(const MultiGraph& g, const GroupSpec& spec) {
    FlowBasis b = flow_basis(g, default_orientation(g));
    const std::size_t beta = b.cotree.size();
    SearchResult out;

    if (g.edge_count() == 0) {
        FlowAssignment f;
        f.spec = spec;
        f.orient = b.orient;
        f.domain = {};
        f.value.assign(g.slot_count(), spec.zero());
        out.flow = std::move(f);
        out.candidates = 1;
        return out;
    }

    // cycle membership per tree edge; a tree edge on no cycle is a bridge
    // and pins the zero value, so the whole space is ruled out at once
    std::vector<int> membership(g.slot_count(), 0);
    for (const auto& cycle : b.cycles)
        for (auto [e, sign] : cycle) {
            (void)sign;
            ++membership[e];
        }
    for (int e : b.forest)
        if (membership[e] == 0) {
            out.candidates = saturating_pow(spec.order(), beta);
            return out;
        }

    // explore cycles with the most shared tree edges first
    std::vector<int> overlap(b.cycles.size(), 0);
    for (std::size_t i = 0; i < b.cycles.size(); ++i)
        for (auto [e, sign] : b.cycles[i]) {
            (void)sign;
            if (e != b.cotree[i] && membership[e] > 1) ++overlap[i];
        }
    std::vector<int> order(b.cycles.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (overlap[x] != overlap[y]) return overlap[x] > overlap[y];
        return b.cotree[x] < b.cotree[y];
    });

    std::vector<GroupElement> value(g.slot_count(), spec.zero());
    std::vector<int> remaining = membership;
    std::vector<GroupElement> coords(beta, spec.zero());
    SearchFrame fr{g, spec, b, order, value, remaining, coords, 0, false};
    search_rec(fr, 0);
    out.candidates = fr.covered;
    if (fr.found) {
        FlowAssignment f = evaluate_basis(g, b, spec, coords);
        out.flow = std::move(f);
    }
    return out;
}

FlowAssignment module_combine(const MultiGraph& g,
                              const std::vector<std::pair<Scalar, FlowAssignment>>& terms) {
    if (terms.empty()) throw ValidationError("module_combine needs at least one term");
    const FlowAssignment& first = terms.front().second;
    FlowAssignment out;
    out.spec = first.spec;
    out.orient = first.orient;
    out.domain = first.domain;
    out.value.assign(g.slot_count(), out.spec.zero());
    for (const auto& [scalar, f] : terms) {
        if (f.spec != out.spec) throw ValidationError("module_combine terms use different groups");
        if (!(f.orient == out.orient)) throw ValidationError("module_combine terms use different orientations");
        if (f.domain != out.domain) throw ValidationError("module_combine terms cover different edges");
        for (int e : out.domain) {
            GroupElement scaled = std::holds_alternative<GroupElement>(scalar)
                                      ? out.spec.mul(std::get<GroupElement>(scalar), f.at(e))
                                      : out.spec.apply(std::get<Endomorphism>(scalar), f.at(e));
            out.value[e] = out.spec.add(out.value[e], scaled);
        }
    }
    return out;
}

FlowAssignment reorient_flow(const FlowAssignment& f, const Orientation& d2) {
    if (d2.ambient_fp != f.orient.ambient_fp)
        throw ValidationError("orientation belongs to a different graph");
    if (d2.tail.size() != f.orient.tail.size())
        throw ValidationError("orientation belongs to a different graph");
    FlowAssignment out = f;
    out.orient = d2;
    for (int e : f.domain)
        if (d2.tail[e] != f.orient.tail[e]) out.value[e] = f.spec.neg(f.value[e]);
    return out;
}

FlowAssignment extend_by_zero(const FlowAssignment& f, const MultiGraph& g) {
    require_same_graph(f.orient.ambient_fp, g.fingerprint());
    MultiGraph sub = g.restricted_to(EdgeSubset(g, f.domain));
    if (!verify_flow(sub, f).valid) throw ValidationError("input flow is not conservative on its subgraph");
    FlowAssignment out = f;
    out.domain = g.edge_ids();
    out.value.assign(g.slot_count(), f.spec.zero());
    for (int e : f.domain) out.value[e] = f.at(e);
    return out;
}

IntegerVerifyReport verify_integer_flow(const MultiGraph& g, const IntegerFlow& f) {
    require_same_graph(f.orient.ambient_fp, g.fingerprint());
    if (f.domain != g.edge_ids()) throw ValidationError("flow does not cover exactly the graph's edges");
    IntegerVerifyReport out;
    out.residual.assign(g.vertex_count(), 0);
    out.nowhere_zero = true;
    for (int e : f.domain) {
        const long long a = f.value[e];
        if (a == 0) out.nowhere_zero = false;
        out.residual[f.orient.tail[e]] += a;
        out.residual[f.orient.head_of(g, e)] -= a;
    }
    out.valid = std::all_of(out.residual.begin(), out.residual.end(), [](long long r) { return r == 0; });
    if (!out.valid) out.nowhere_zero = false;
    return out;
}

IntegerFlow lift_integer(const MultiGraph& g, const FlowAssignment& f) {
    if (f.spec.kind() != GroupKind::Cyclic)
        throw ValidationError("integer lifting expects a Z_k flow");
    VerifyReport check = verify_flow(g, f);
    if (!check.valid || !check.nowhere_zero)
        throw ValidationError("integer lifting expects a valid nowhere-zero flow");
    const long long k = f.spec.order();

    IntegerFlow h;
    h.orient = f.orient;
    h.domain = f.domain;
    h.value.assign(g.slot_count(), 0);
    for (int e : f.domain) h.value[e] = f.at(e).d[0]; // representatives in [1, k-1]

    std::vector<long long> excess(g.vertex_count(), 0);
    for (int e : f.domain) {
        excess[h.orient.tail[e]] += h.value[e];
        excess[h.orient.head_of(g, e)] -= h.value[e];
    }

    while (true) {
        int source = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (excess[v] > 0) {
                source = v;
                break;
            }
        if (source == -1) break;

        // residual arcs: an edge at its high value pushes tail->head, an
        // edge at its low value pushes head->tail
        std::vector<int> prev_edge(g.vertex_count(), -1), prev_vertex(g.vertex_count(), -1);
        std::vector<char> seen(g.vertex_count(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        int sink = -1;
        while (!q.empty() && sink == -1) {
            int x = q.front();
            q.pop();
            for (const auto& [e, y] : g.incident(x)) {
                if (seen[y]) continue;
                const bool high = h.value[e] > 0;
                const bool forward = h.orient.tail[e] == x;
                if ((high && !forward) || (!high && forward)) continue;
                seen[y] = 1;
                prev_edge[y] = e;
                prev_vertex[y] = x;
                if (excess[y] < 0) {
                    sink = y;
                    break;
                }
                q.push(y);
            }
        }
        if (sink == -1) throw ValidationError("integer lifting failed to find an augmenting path");
        for (int x = sink; x != source; x = prev_vertex[x]) {
            const int e = prev_edge[x];
            h.value[e] += h.value[e] > 0 ? -k : k;
        }
        excess[source] -= k;
        excess[sink] += k;
    }
    return h;
}

FlowAssignment transfer_suppressed_flow(const MultiGraph& g, const FlowAssignment& f2,
                                        const SuppressionRecord& rec) {
    if (rec.added != g.slot_count())
        throw ValidationError("suppression record does not extend this graph");
    if (!g.has_edge(rec.removed1) || !g.has_edge(rec.removed2))
        throw ValidationError("suppression record names edges absent from the original graph");
    if (static_cast<int>(f2.value.size()) != g.slot_count() + 1)
        throw ValidationError("flow does not live on the suppressed graph");
    if (!std::binary_search(f2.domain.begin(), f2.domain.end(), rec.added))
        throw ValidationError("flow does not cover the suppression edge");

    FlowAssignment out;
    out.spec = f2.spec;
    out.orient.ambient_fp = g.fingerprint();
    out.orient.tail.assign(f2.orient.tail.begin(), f2.orient.tail.begin() + g.slot_count());
    out.value.assign(f2.value.begin(), f2.value.begin() + g.slot_count());

    const GroupElement a = f2.at(rec.added);
    if (f2.orient.tail[rec.added] == rec.outer1) {
        out.orient.tail[rec.removed1] = rec.outer1;
        out.orient.tail[rec.removed2] = rec.mid;
    } else {
        out.orient.tail[rec.removed2] = rec.outer2;
        out.orient.tail[rec.removed1] = rec.mid;
    }
    out.value[rec.removed1] = a;
    out.value[rec.removed2] = a;

    out.domain = f2.domain;
    out.domain.erase(std::remove(out.domain.begin(), out.domain.end(), rec.added), out.domain.end());
    out.domain.push_back(rec.removed1);
    out.domain.push_back(rec.removed2);
    std::sort(out.domain.begin(), out.domain.end());
    return out;
}

} // namespace nzflow
