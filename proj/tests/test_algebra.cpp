#include "doctest.h"
#include "nzflow/algebra.hpp"
#include "oracles.hpp"

using namespace nzflow;

TEST_CASE("group descriptors parse and validate") {
    GroupSpec z4 = GroupSpec::parse("z:4");
    CHECK(z4.kind() == GroupKind::Cyclic);
    CHECK(z4.order() == 4);

    GroupSpec gf4 = GroupSpec::parse("gf:2:2");
    CHECK(gf4.order() == 4);
    // only one of the four monic quadratics over Z_2 is irreducible
    int irreducible_count = 0;
    std::vector<int> only;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            std::vector<int> f = {c0, c1, 1};
            if (oracle::poly_irreducible(f, 2)) {
                ++irreducible_count;
                only = f;
            }
        }
    CHECK(irreducible_count == 1);
    CHECK(gf4.modulus() == only);
    CHECK(gf4.modulus() == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(GroupSpec::parse("gf:4:1"), ValidationError);
    CHECK_THROWS_AS(GroupSpec::parse("z:1"), ValidationError);
    CHECK_THROWS_AS(GroupSpec::parse("gf:2:2:0,0,1"), ValidationError); // x^2 splits
    CHECK_THROWS_AS(GroupSpec::parse("nope:3"), ValidationError);
    CHECK(GroupSpec::parse(gf4.descriptor()) == gf4);
    CHECK(GroupSpec::parse(z4.descriptor()) == z4);
}

TEST_CASE("field arithmetic matches the long-division oracle") {
    GroupSpec gf4 = GroupSpec::parse("gf:2:2");
    GroupElement x = gf4.element({0, 1});
    GroupElement xx = gf4.mul(x, x);
    CHECK(xx.d == oracle::poly_mul_mod({0, 1}, {0, 1}, gf4.modulus(), 2));
    CHECK(xx == gf4.element({1, 1}));

    GroupSpec z5f = GroupSpec::parse("gf:5:1");
    CHECK(z5f.neg(z5f.element({2})) == z5f.element({3}));
    GroupSpec z5 = GroupSpec::parse("z:5");
    CHECK(z5.neg(z5.element({2})) == z5.element({3}));
    CHECK(z5.add(z5.element({2}), z5.zero()) == z5.element({2}));

    CHECK_THROWS_AS(gf4.inv(gf4.zero()), ValidationError);
    CHECK_THROWS_AS(z5.mul(z5.element({2}), z5.element({2})), ValidationError);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (const char* desc : {"gf:2:1", "gf:3:1", "gf:2:2", "gf:5:1", "gf:7:1", "gf:2:3", "gf:3:2"}) {
        GroupSpec f = GroupSpec::parse(desc);
        const int q = f.order();
        for (int ia = 0; ia < q; ++ia)
            for (int ib = 0; ib < q; ++ib) {
                GroupElement a = f.element_at(ia), b = f.element_at(ib);
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int ic = 0; ic < q; ++ic) {
                    GroupElement c = f.element_at(ic);
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
                if (ib != 0) CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
            }
    }
}

TEST_CASE("primitive elements generate the multiplicative group") {
    CHECK(GroupSpec::parse("gf:2:1").primitive_element() == GroupSpec::parse("gf:2:1").one());
    GroupSpec gf4 = GroupSpec::parse("gf:2:2");
    CHECK(gf4.primitive_element() == gf4.element({0, 1})); // x has order 3

    GroupSpec gf5 = GroupSpec::parse("gf:5:1");
    // oracle: orders of 1..4 mod 5 by repeated multiplication
    auto ord = [&](int v) {
        int acc = v, steps = 1;
        while (acc != 1) {
            acc = acc * v % 5;
            ++steps;
        }
        return steps;
    };
    CHECK(ord(2) == 4);
    CHECK(ord(1) != 4);
    CHECK(gf5.primitive_element() == gf5.element({2}));

    for (const char* desc : {"gf:2:1", "gf:3:1", "gf:2:2", "gf:5:1", "gf:7:1", "gf:2:3", "gf:3:2"}) {
        GroupSpec f = GroupSpec::parse(desc);
        GroupElement b = f.primitive_element();
        std::vector<char> seen(f.order(), 0);
        GroupElement acc = f.one();
        for (int e = 0; e + 1 < f.order(); ++e) {
            const int idx = f.index_of(acc);
            CHECK(!seen[idx]);
            seen[idx] = 1;
            acc = f.mul(acc, b);
        }
        CHECK(acc == f.one()); // b^(q-1) closes the cycle
        CHECK(f.discrete_log(b, f.one()) == 0);
        CHECK(f.discrete_log(b, b) == (f.order() > 2 ? 1 : 0));
    }

    CHECK_THROWS_AS(GroupSpec::parse("z:6").primitive_element(), ValidationError);
}

TEST_CASE("endomorphisms act additively") {
    GroupSpec z6 = GroupSpec::parse("z:6");
    CHECK(z6.apply(Endomorphism::multiplier(4), z6.element({5})) == z6.element({2}));
    for (int m = 0; m < 6; ++m)
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                Endomorphism sigma = Endomorphism::multiplier(m);
                GroupElement lhs = z6.apply(sigma, z6.add(z6.element({a}), z6.element({b})));
                GroupElement rhs = z6.add(z6.apply(sigma, z6.element({a})), z6.apply(sigma, z6.element({b})));
                CHECK(lhs == rhs);
            }

    GroupSpec gf4 = GroupSpec::parse("gf:2:2");
    for (int code = 0; code < 16; ++code) { // all 2x2 matrices over Z_2
        Endomorphism sigma = Endomorphism::matrix(
            2, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
        for (int ia = 0; ia < 4; ++ia)
            for (int ib = 0; ib < 4; ++ib) {
                GroupElement a = gf4.element_at(ia), b = gf4.element_at(ib);
                CHECK(gf4.apply(sigma, gf4.add(a, b)) ==
                      gf4.add(gf4.apply(sigma, a), gf4.apply(sigma, b)));
            }
    }
    for (int ia = 0; ia < 4; ++ia) {
        GroupElement a = gf4.element_at(ia);
        CHECK(gf4.apply(Endomorphism::identity(2), a) == a);
        CHECK(gf4.apply(Endomorphism::zero(2), a) == gf4.zero());
    }
    CHECK_THROWS_AS(gf4.apply(Endomorphism::matrix(3, std::vector<int>(9, 0)), gf4.zero()),
                    ValidationError);
}

TEST_CASE("element order and serialization round-trip") {
    GroupSpec gf9 = GroupSpec::parse("gf:3:2");
    CHECK(gf9.modulus() == std::vector<int>{1, 0, 1}); // x^2 + 1: no roots mod 3
    for (int i = 0; i < 9; ++i) {
        GroupElement a = gf9.element_at(i);
        CHECK(gf9.index_of(a) == i);
        CHECK(gf9.parse_element(gf9.format(a)) == a);
    }
    GroupSpec z7 = GroupSpec::parse("z:7");
    CHECK(z7.parse_element("6") == z7.element({6}));
    CHECK_THROWS_AS(z7.parse_element("7"), ValidationError);
}
