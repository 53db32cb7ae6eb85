#include <set>

#include "doctest.h"
#include "nzflow/generators.hpp"
#include "nzflow/multigraph.hpp"
#include "oracles.hpp"

using namespace nzflow;

TEST_CASE("graph construction accepts multigraphs and rejects loops") {
    MultiGraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(triangle.edge_count() == 3);
    MultiGraph digon(2, {{0, 1}, {0, 1}});
    CHECK(digon.edge_count() == 2);
    CHECK(digon.degree(0) == 2);
    CHECK_THROWS_AS(MultiGraph(2, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), ValidationError);
}

TEST_CASE("components partition vertices and edges") {
    MultiGraph c4 = gen_basic(BasicKind::Cycle, 4);
    CHECK(components(c4).count() == 1);

    ComponentPartition one_edge = components(c4, EdgeSubset(c4, {0}));
    CHECK(one_edge.count() == 3);
    CHECK(one_edge.vertices[one_edge.comp_of[0]] == std::vector<int>{0, 1});

    MultiGraph petersen = gen_basic(BasicKind::Petersen);
    ComponentPartition spokes = components(petersen, EdgeSubset(petersen, {5, 6, 7, 8, 9}));
    CHECK(spokes.count() == 5);
    for (int c = 0; c < spokes.count(); ++c) CHECK(spokes.vertices[c].size() == 2);
}

TEST_CASE("symmetric difference follows set algebra and preserves evenness") {
    MultiGraph k4 = gen_basic(BasicKind::Complete, 4);
    EdgeSubset t1(k4, {0, 1, 3}); // triangle 0-1-2
    EdgeSubset t2(k4, {0, 2, 4}); // triangle 0-1-3
    CHECK(symmetric_difference(t1, t1) == EdgeSubset::empty(k4));
    CHECK(symmetric_difference(t1, EdgeSubset::empty(k4)) == t1);
    EdgeSubset four_cycle = symmetric_difference(t1, t2);
    CHECK(four_cycle == EdgeSubset(k4, {1, 2, 3, 4}));
    CHECK(parity_profile(k4, four_cycle).is_even);

    MultiGraph other = gen_basic(BasicKind::Cycle, 4);
    CHECK_THROWS_AS(symmetric_difference(t1, EdgeSubset(other, {0})), ValidationError);

    // evenness is closed under symmetric difference, exhaustively
    for (const MultiGraph& g : oracle::connected_multigraphs(3, 6, 4)) {
        const std::vector<int> edges = g.edge_ids();
        auto evens = oracle::even_subset_masks(g);
        for (std::uint64_t ma : evens)
            for (std::uint64_t mb : evens) {
                std::vector<int> ia, ib;
                for (std::size_t i = 0; i < edges.size(); ++i) {
                    if (ma & (1ULL << i)) ia.push_back(edges[i]);
                    if (mb & (1ULL << i)) ib.push_back(edges[i]);
                }
                EdgeSubset sd = symmetric_difference(EdgeSubset(g, ia), EdgeSubset(g, ib));
                CHECK(parity_profile(g, sd).is_even);
            }
    }
}

TEST_CASE("parity profiles") {
    MultiGraph c4 = gen_basic(BasicKind::Cycle, 4);
    ParityProfile cycle = parity_profile(c4, EdgeSubset::all(c4));
    CHECK(cycle.is_even);
    CHECK(cycle.odd_vertices.empty());

    MultiGraph k4 = gen_basic(BasicKind::Complete, 4);
    ParityProfile matching = parity_profile(k4, EdgeSubset(k4, {0, 5})); // 01 and 23
    CHECK(matching.is_parity); // cubic host
    CHECK(!matching.is_even);
    CHECK(matching.odd_vertices == std::vector<int>{0, 1, 2, 3});

    // a single edge, profiled against itself as the host graph
    MultiGraph single = c4.restricted_to(EdgeSubset(c4, {0}));
    ParityProfile stub = parity_profile(single, EdgeSubset(single, {0}));
    CHECK(!stub.is_even);
    CHECK(stub.odd_vertices == std::vector<int>{0, 1});
}

TEST_CASE("two-path suppression") {
    MultiGraph c4 = gen_basic(BasicKind::Cycle, 4);
    auto [g2, rec] = suppress_two_path(c4, 0, 1);
    CHECK(rec.outer1 == 0);
    CHECK(rec.mid == 1);
    CHECK(rec.outer2 == 2);
    CHECK(rec.added == 4);
    CHECK(g2.edge_count() == 3);
    CHECK(g2.degree(1) == 0); // midpoint kept, isolated
    CHECK(g2.ends(4) == std::pair<int, int>{0, 2});

    MultiGraph p3 = gen_basic(BasicKind::Path, 3);
    auto [p2, prec] = suppress_two_path(p3, 0, 1);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.ends(prec.added) == std::pair<int, int>{0, 2});

    MultiGraph digon(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(suppress_two_path(digon, 0, 1), ValidationError);
    MultiGraph two_far(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(suppress_two_path(two_far, 0, 1), ValidationError);

    // degree parity at the outer endpoints survives, size drops by one
    MultiGraph k4 = gen_basic(BasicKind::Complete, 4);
    auto [k2, krec] = suppress_two_path(k4, 0, 3); // 0-1, 1-2
    CHECK(k2.edge_count() == k4.edge_count() - 1);
    CHECK(k2.degree(krec.outer1) % 2 == k4.degree(krec.outer1) % 2);
    CHECK(k2.degree(krec.outer2) % 2 == k4.degree(krec.outer2) % 2);
}

TEST_CASE("short cycles through an edge") {
    MultiGraph c4 = gen_basic(BasicKind::Cycle, 4);
    auto cycle = find_short_cycle(c4, 0, 4);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 4);
    CHECK((*cycle)[0] == 0);

    MultiGraph petersen = gen_basic(BasicKind::Petersen);
    for (int e : petersen.edge_ids()) CHECK(!find_short_cycle(petersen, e, 4).has_value());
    CHECK(find_short_cycle(petersen, 0, 5).has_value()); // girth 5

    MultiGraph digon(2, {{0, 1}, {0, 1}});
    auto two = find_short_cycle(digon, 0, 4);
    REQUIRE(two.has_value());
    CHECK(*two == std::vector<int>{0, 1});

    // minimality against the exhaustive enumeration oracle
    std::vector<MultiGraph> samples = {gen_basic(BasicKind::Complete, 4),
                                       MultiGraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}),
                                       gen_basic(BasicKind::Cycle, 6)};
    for (const MultiGraph& g : samples)
        for (int e : g.edge_ids()) {
            const int best = oracle::shortest_cycle_through(g, e);
            auto found = find_short_cycle(g, e, 12);
            if (best == -1) {
                CHECK(!found.has_value());
            } else {
                REQUIRE(found.has_value());
                CHECK(static_cast<int>(found->size()) == best);
            }
        }
}

namespace {

std::array<std::array<int, 3>, 3> apply_symmetry(const std::array<std::array<int, 3>, 3>& m,
                                                 const std::array<int, 3>& rho,
                                                 const std::array<int, 3>& sig, bool transpose) {
    std::array<std::array<int, 3>, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int v = m[rho[i]][sig[j]];
            if (transpose)
                out[j][i] = v;
            else
                out[i][j] = v;
        }
    return out;
}

} // namespace

TEST_CASE("sigma patterns classify up to the 72 symmetries") {
    auto mk = [](std::initializer_list<std::array<int, 2>> cells,
                 std::initializer_list<int> mult) {
        std::array<std::array<int, 3>, 3> m{};
        auto mi = mult.begin();
        for (const auto& c : cells) m[c[0]][c[1]] = *mi++;
        return m;
    };
    CHECK(classify_sigma(mk({{0, 0}}, {3})).tag == SigmaTag::P1);
    CHECK(classify_sigma(mk({{0, 0}, {1, 1}}, {2, 1})).tag == SigmaTag::P2);
    CHECK(classify_sigma(mk({{0, 0}, {0, 1}}, {2, 1})).tag == SigmaTag::P3);
    CHECK(classify_sigma(mk({{0, 0}, {0, 1}, {1, 0}}, {1, 1, 1})).tag == SigmaTag::P4);
    CHECK(classify_sigma(mk({{0, 0}, {1, 1}, {2, 2}}, {1, 1, 1})).tag == SigmaTag::P5);
    CHECK(classify_sigma(mk({{0, 0}, {0, 1}, {2, 2}}, {1, 1, 1})).tag == SigmaTag::P6);
    SigmaPattern star = classify_sigma(mk({{0, 0}, {0, 1}, {0, 2}}, {1, 1, 1}));
    CHECK(star.tag == SigmaTag::P7);
    CHECK(star.star_on_side1);
    SigmaPattern colstar = classify_sigma(mk({{0, 1}, {1, 1}, {2, 1}}, {1, 1, 1}));
    CHECK(colstar.tag == SigmaTag::P7);
    CHECK(!colstar.star_on_side1);
    CHECK(colstar.star_index == 1);

    CHECK_THROWS_AS(classify_sigma(mk({{0, 0}}, {2})), ValidationError);

    // every matrix summing to 3, under all 72 symmetries
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    int matrices = 0;
    for (int code = 0; code < (1 << 18); ++code) {
        std::array<std::array<int, 3>, 3> m{};
        int sum = 0, c = code;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                m[i][j] = c & 3;
                sum += m[i][j];
                c >>= 2;
            }
        if (sum != 3) continue;
        ++matrices;
        const SigmaTag tag = classify_sigma(m).tag;
        for (const auto& rho : perms)
            for (const auto& sig : perms)
                for (bool t : {false, true})
                    CHECK(classify_sigma(apply_symmetry(m, rho, sig, t)).tag == tag);
    }
    CHECK(matrices == 165); // weak compositions of 3 into 9 cells
}

TEST_CASE("triple shapes") {
    MultiGraph tp(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(classify_triple(tp, EdgeSubset::all(tp)).tag == TripleTag::ThreeParallel);

    MultiGraph ed(3, {{0, 1}, {1, 2}, {1, 2}});
    TripleShape eds = classify_triple(ed, EdgeSubset::all(ed));
    CHECK(eds.tag == TripleTag::EdgePlusDigon);
    CHECK(eds.u[0] == 0);
    CHECK(eds.u[1] == 1);
    CHECK(eds.u[2] == 2);
    CHECK(eds.edges[0] == 0);

    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    TripleShape ss = classify_triple(star, EdgeSubset::all(star));
    CHECK(ss.tag == TripleTag::Star);
    CHECK(ss.u[0] == 0);

    MultiGraph tri = gen_basic(BasicKind::Cycle, 3);
    CHECK(classify_triple(tri, EdgeSubset::all(tri)).tag == TripleTag::Triangle);

    MultiGraph path = gen_basic(BasicKind::Path, 4);
    TripleShape ps = classify_triple(path, EdgeSubset::all(path));
    CHECK(ps.tag == TripleTag::Path);
    CHECK(ps.u == std::array<int, 4>{0, 1, 2, 3});
    CHECK(ps.edges == std::array<int, 3>{0, 1, 2});

    MultiGraph split(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(classify_triple(split, EdgeSubset::all(split)), ValidationError);
    MultiGraph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(classify_triple(matching, EdgeSubset::all(matching)), ValidationError);
}
