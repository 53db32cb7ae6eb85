#include "nzflow/multigraph.hpp"

#include <algorithm>
#include <string>

namespace nzflow {

namespace {

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace

MultiGraph::MultiGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw ValidationError("negative vertex count");
    n_ = vertex_count;
    ends_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ValidationError("edge " + std::to_string(i) + " endpoint out of range");
        if (u == v)
            throw ValidationError("edge " + std::to_string(i) + " is a loop at vertex " + std::to_string(u));
        ends_.emplace_back(u, v);
    }
    present_.assign(ends_.size(), 1);
    rebuild_cache();
}

void MultiGraph::rebuild_cache() {
    fp_ = fnv_mix(0x811c9dc5ULL, static_cast<std::uint64_t>(n_));
    for (const auto& [u, v] : ends_) {
        fp_ = fnv_mix(fp_, static_cast<std::uint64_t>(u));
        fp_ = fnv_mix(fp_, static_cast<std::uint64_t>(v));
    }
    present_count_ = 0;
    incident_.assign(n_, {});
    for (int id = 0; id < slot_count(); ++id) {
        if (!present_[id]) continue;
        ++present_count_;
        incident_[ends_[id].first].emplace_back(id, ends_[id].second);
        incident_[ends_[id].second].emplace_back(id, ends_[id].first);
    }
}

bool MultiGraph::has_edge(int id) const {
    return id >= 0 && id < slot_count() && present_[id];
}

std::pair<int, int> MultiGraph::ends(int id) const {
    if (id < 0 || id >= slot_count()) throw ValidationError("edge id " + std::to_string(id) + " out of range");
    return ends_[id];
}

std::vector<int> MultiGraph::edge_ids() const {
    std::vector<int> out;
    out.reserve(present_count_);
    for (int id = 0; id < slot_count(); ++id)
        if (present_[id]) out.push_back(id);
    return out;
}

const std::vector<std::pair<int, int>>& MultiGraph::incident(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex out of range");
    return incident_[v];
}

int MultiGraph::degree(int v) const {
    return static_cast<int>(incident(v).size());
}

MultiGraph MultiGraph::restricted_to(const EdgeSubset& keep) const {
    if (keep.ambient() != fp_) throw ValidationError("edge subset belongs to a different graph");
    MultiGraph out;
    out.n_ = n_;
    out.ends_ = ends_;
    out.present_.assign(ends_.size(), 0);
    for (int id : keep.ids()) {
        if (!has_edge(id)) throw ValidationError("edge id " + std::to_string(id) + " absent from this graph");
        out.present_[id] = 1;
    }
    out.rebuild_cache();
    return out;
}

MultiGraph MultiGraph::without_edge(int id) const {
    if (!has_edge(id)) throw ValidationError("edge id " + std::to_string(id) + " absent from this graph");
    MultiGraph out = *this;
    out.present_[id] = 0;
    out.rebuild_cache();
    return out;
}

std::pair<MultiGraph, int> MultiGraph::with_appended_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw ValidationError("appended edge endpoint out of range");
    if (u == v) throw ValidationError("appended edge would be a loop");
    MultiGraph out = *this;
    out.ends_.emplace_back(u, v);
    out.present_.push_back(1);
    out.rebuild_cache();
    return {out, out.slot_count() - 1};
}

EdgeSubset::EdgeSubset(const MultiGraph& g, std::vector<int> ids) {
    ambient_fp_ = g.fingerprint();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int id : ids)
        if (!g.has_edge(id)) throw ValidationError("edge id " + std::to_string(id) + " absent from this graph");
    ids_ = std::move(ids);
}

EdgeSubset EdgeSubset::all(const MultiGraph& g) {
    return EdgeSubset(g, g.edge_ids());
}

EdgeSubset EdgeSubset::empty(const MultiGraph& g) {
    return EdgeSubset(g, {});
}

bool EdgeSubset::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

EdgeSubset subset_merge(const EdgeSubset& a, const EdgeSubset& b, int mode) {
    if (a.ambient_fp_ != b.ambient_fp_)
        throw ValidationError("edge subsets belong to different graphs");
    EdgeSubset out;
    out.ambient_fp_ = a.ambient_fp_;
    std::size_t i = 0, j = 0;
    const auto& x = a.ids_;
    const auto& y = b.ids_;
    while (i < x.size() || j < y.size()) {
        int take;
        bool in_a = false, in_b = false;
        if (j >= y.size() || (i < x.size() && x[i] < y[j])) {
            take = x[i++];
            in_a = true;
        } else if (i >= x.size() || y[j] < x[i]) {
            take = y[j++];
            in_b = true;
        } else {
            take = x[i];
            ++i;
            ++j;
            in_a = in_b = true;
        }
        const bool keep = (mode == 0) ? true
                        : (mode == 1) ? (in_a && in_b)
                        : (mode == 2) ? (in_a && !in_b)
                                      : (in_a != in_b);
        if (keep) out.ids_.push_back(take);
    }
    return out;
}

EdgeSubset set_union(const EdgeSubset& a, const EdgeSubset& b) { return subset_merge(a, b, 0); }
EdgeSubset set_intersection(const EdgeSubset& a, const EdgeSubset& b) { return subset_merge(a, b, 1); }
EdgeSubset set_difference(const EdgeSubset& a, const EdgeSubset& b) { return subset_merge(a, b, 2); }
EdgeSubset symmetric_difference(const EdgeSubset& a, const EdgeSubset& b) { return subset_merge(a, b, 3); }

namespace {

ComponentPartition components_over(const MultiGraph& g, const std::vector<char>& edge_in) {
    ComponentPartition out;
    out.comp_of.assign(g.vertex_count(), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (out.comp_of[start] != -1) continue;
        const int c = out.count();
        out.vertices.emplace_back();
        out.edges.emplace_back();
        std::vector<int> stack{start};
        out.comp_of[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.vertices[c].push_back(v);
            for (const auto& [id, w] : g.incident(v)) {
                if (!edge_in[id]) continue;
                if (out.comp_of[w] == -1) {
                    out.comp_of[w] = c;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.vertices[c].begin(), out.vertices[c].end());
    }
    for (int id = 0; id < g.slot_count(); ++id) {
        if (!g.has_edge(id) || !edge_in[id]) continue;
        out.edges[out.comp_of[g.ends(id).first]].push_back(id);
    }
    return out;
}

} // namespace

ComponentPartition components(const MultiGraph& g) {
    std::vector<char> all(g.slot_count(), 0);
    for (int id : g.edge_ids()) all[id] = 1;
    return components_over(g, all);
}

ComponentPartition components(const MultiGraph& g, const EdgeSubset& s) {
    if (s.ambient() != g.fingerprint()) throw ValidationError("edge subset belongs to a different graph");
    std::vector<char> in(g.slot_count(), 0);
    for (int id : s.ids()) {
        if (!g.has_edge(id)) throw ValidationError("edge id " + std::to_string(id) + " absent from this graph");
        in[id] = 1;
    }
    return components_over(g, in);
}

ParityProfile parity_profile(const MultiGraph& g, const EdgeSubset& s) {
    if (s.ambient() != g.fingerprint()) throw ValidationError("edge subset belongs to a different graph");
    std::vector<int> deg_s(g.vertex_count(), 0);
    for (int id : s.ids()) {
        if (!g.has_edge(id)) throw ValidationError("edge id " + std::to_string(id) + " absent from this graph");
        deg_s[g.ends(id).first]++;
        deg_s[g.ends(id).second]++;
    }
    ParityProfile out;
    out.is_even = true;
    out.is_parity = true;
    out.is_spanning = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int dg = g.degree(v);
        if (deg_s[v] % 2 != 0) out.is_even = false;
        if (deg_s[v] % 2 != dg % 2) out.is_parity = false;
        if (deg_s[v] == 0) out.is_spanning = false;
        if (deg_s[v] > 0 && dg % 2 == 1) out.odd_vertices.push_back(v);
    }
    return out;
}

std::pair<MultiGraph, SuppressionRecord> suppress_two_path(const MultiGraph& g, int e1, int e2) {
    if (!g.has_edge(e1) || !g.has_edge(e2)) throw ValidationError("suppression edge absent");
    if (e1 == e2) throw ValidationError("suppression needs two distinct edges");
    auto [a, b] = g.ends(e1);
    auto [c, d] = g.ends(e2);
    int shared = -1, shared_count = 0;
    for (int v : {a, b})
        if (v == c || v == d) {
            shared = v;
            ++shared_count;
        }
    if (shared_count == 0)
        throw ValidationError("edges " + std::to_string(e1) + " and " + std::to_string(e2) + " are not adjacent");
    if (shared_count == 2)
        throw ValidationError("parallel pair: outer endpoints coincide, suppression would create a loop");
    SuppressionRecord rec;
    rec.removed1 = e1;
    rec.removed2 = e2;
    rec.mid = shared;
    rec.outer1 = (a == shared) ? b : a;
    rec.outer2 = (c == shared) ? d : c;
    auto [g2, e0] = g.without_edge(e1).without_edge(e2).with_appended_edge(rec.outer1, rec.outer2);
    rec.added = e0;
    return {g2, rec};
}

namespace {

// Depth-limited search for a simple path of exactly `remaining` edges from x
// to target, trying edges in ascending id order.
bool path_dfs(const MultiGraph& g, int x, int target, int remaining, int banned_edge,
              std::vector<char>& visited, std::vector<int>& path) {
    for (const auto& [id, y] : g.incident(x)) {
        if (id == banned_edge) continue;
        if (remaining == 1) {
            if (y != target) continue;
            path.push_back(id);
            return true;
        }
        if (y == target || visited[y]) continue;
        visited[y] = 1;
        path.push_back(id);
        if (path_dfs(g, y, target, remaining - 1, banned_edge, visited, path)) return true;
        path.pop_back();
        visited[y] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_short_cycle(const MultiGraph& g, int e, int max_len) {
    if (!g.has_edge(e)) throw ValidationError("edge id " + std::to_string(e) + " absent from this graph");
    if (max_len < 2) throw ValidationError("max_len must be at least 2");
    auto [u, v] = g.ends(e);
    for (int len = 2; len <= max_len; ++len) {
        std::vector<char> visited(g.vertex_count(), 0);
        visited[v] = 1;
        std::vector<int> path;
        if (path_dfs(g, v, u, len - 1, e, visited, path)) {
            std::vector<int> cycle{e};
            cycle.insert(cycle.end(), path.begin(), path.end());
            return cycle;
        }
    }
    return std::nullopt;
}

SigmaPattern classify_sigma(const std::array<std::array<int, 3>, 3>& m) {
    SigmaPattern out;
    out.m = m;
    int total = 0;
    std::vector<std::pair<int, int>> cells; // (row, col) of nonzero entries
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (m[i][j] < 0) throw ValidationError("negative multiplicity");
            total += m[i][j];
            if (m[i][j] > 0) cells.emplace_back(i, j);
        }
    if (total != 3) throw ValidationError("multiplicity matrix must sum to 3");

    for (auto [i, j] : cells) {
        if (m[i][j] == 3) {
            out.tag = SigmaTag::P1;
            return out;
        }
        if (m[i][j] == 2) {
            for (auto [k, l] : cells)
                if (m[k][l] == 1) out.tag = (k == i || l == j) ? SigmaTag::P3 : SigmaTag::P2;
            return out;
        }
    }

    // three single cells
    auto [r0, c0] = cells[0];
    auto [r1, c1] = cells[1];
    auto [r2, c2] = cells[2];
    if (r0 == r1 && r1 == r2) {
        out.tag = SigmaTag::P7;
        out.star_on_side1 = true;
        out.star_index = r0;
        return out;
    }
    if (c0 == c1 && c1 == c2) {
        out.tag = SigmaTag::P7;
        out.star_on_side1 = false;
        out.star_index = c0;
        return out;
    }
    const bool rows_distinct = r0 != r1 && r1 != r2 && r0 != r2;
    const bool cols_distinct = c0 != c1 && c1 != c2 && c0 != c2;
    if (rows_distinct && cols_distinct) {
        out.tag = SigmaTag::P5;
        return out;
    }
    if (!rows_distinct) {
        // two cells share a row; the third decides path vs disjoint single
        int ca, cb, cc;
        if (r0 == r1) {
            ca = c0; cb = c1; cc = c2;
        } else if (r0 == r2) {
            ca = c0; cb = c2; cc = c1;
        } else {
            ca = c1; cb = c2; cc = c0;
        }
        out.tag = (cc == ca || cc == cb) ? SigmaTag::P4 : SigmaTag::P6;
        return out;
    }
    // two cells share a column
    int ra, rb, rc;
    if (c0 == c1) {
        ra = r0; rb = r1; rc = r2;
    } else if (c0 == c2) {
        ra = r0; rb = r2; rc = r1;
    } else {
        ra = r1; rb = r2; rc = r0;
    }
    out.tag = (rc == ra || rc == rb) ? SigmaTag::P4 : SigmaTag::P6;
    return out;
}

TripleShape classify_triple(const MultiGraph& g, const EdgeSubset& triple) {
    if (triple.ambient() != g.fingerprint()) throw ValidationError("edge subset belongs to a different graph");
    if (triple.size() != 3) throw ValidationError("triple must contain exactly 3 edges");
    const std::vector<int>& e = triple.ids();
    std::array<std::pair<int, int>, 3> pr;
    for (int i = 0; i < 3; ++i) {
        if (!g.has_edge(e[i])) throw ValidationError("edge id absent from this graph");
        auto [x, y] = g.ends(e[i]);
        pr[i] = {std::min(x, y), std::max(x, y)};
    }

    TripleShape out;
    if (pr[0] == pr[1] && pr[1] == pr[2]) {
        out.tag = TripleTag::ThreeParallel;
        out.u = {pr[0].first, pr[0].second, -1, -1};
        out.edges = {e[0], e[1], e[2]};
        return out;
    }

    // digon plus single edge
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (pr[i] == pr[j]) {
                const int k = 3 - i - j;
                int t1 = pr[k].first, t2 = pr[k].second;
                int shared = -1;
                for (int v : {pr[i].first, pr[i].second})
                    if (v == t1 || v == t2) shared = v;
                if (shared == -1) throw ValidationError("triple does not induce a connected subgraph");
                out.tag = TripleTag::EdgePlusDigon;
                out.u = {(t1 == shared) ? t2 : t1, shared,
                         (pr[i].first == shared) ? pr[i].second : pr[i].first, -1};
                out.edges = {e[k], e[i], e[j]};
                return out;
            }

    // three distinct endpoint pairs: star, triangle or path
    std::vector<int> verts;
    for (auto [x, y] : pr) {
        verts.push_back(x);
        verts.push_back(y);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto deg = [&](int v) {
        int d = 0;
        for (auto [x, y] : pr)
            if (x == v || y == v) ++d;
        return d;
    };

    if (verts.size() == 4) {
        // connected iff path; a center of degree 3 needs 4 vertices too
        for (int v : verts)
            if (deg(v) == 3) {
                out.tag = TripleTag::Star;
                std::vector<int> leaves;
                for (auto [x, y] : pr) leaves.push_back(x == v ? y : x);
                std::sort(leaves.begin(), leaves.end());
                out.u = {v, leaves[0], leaves[1], leaves[2]};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        if (pr[j] == std::pair<int, int>{std::min(v, out.u[i + 1]), std::max(v, out.u[i + 1])})
                            out.edges[i] = e[j];
                return out;
            }
        std::vector<int> path_ends;
        for (int v : verts)
            if (deg(v) == 1) path_ends.push_back(v);
        if (path_ends.size() != 2) throw ValidationError("triple does not induce a connected subgraph");
        int u1 = std::min(path_ends[0], path_ends[1]);
        out.tag = TripleTag::Path;
        out.u[0] = u1;
        int prev = -1, cur = u1;
        for (int step = 0; step < 3; ++step) {
            for (int j = 0; j < 3; ++j) {
                auto [x, y] = pr[j];
                if (x != cur && y != cur) continue;
                int other = (x == cur) ? y : x;
                if (other == prev) continue;
                out.edges[step] = e[j];
                prev = cur;
                cur = other;
                out.u[step + 1] = cur;
                break;
            }
        }
        if (out.u[3] == -1 || deg(out.u[1]) != 2 || deg(out.u[2]) != 2)
            throw ValidationError("triple does not induce a connected subgraph");
        return out;
    }
    if (verts.size() == 3) {
        out.tag = TripleTag::Triangle;
        out.u = {verts[0], verts[1], verts[2], -1};
        out.edges = {e[0], e[1], e[2]};
        return out;
    }
    throw ValidationError("triple does not induce a connected subgraph");
}

} // namespace nzflow
