#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "hyperquad/gf2.hpp"

using namespace hyperquad;

TEST_CASE("vector parse and print round-trip") {
    const GF2Vector v = GF2Vector::parse("1011");
    CHECK(v.dim() == 4);
    CHECK(v.bits() == 0b1101); // coordinate 1 is bit 0
    CHECK(v.to_string() == "1011");
    CHECK(GF2Vector::parse("0000").is_zero());
    CHECK_THROWS_AS(GF2Vector::parse("10x1"), std::invalid_argument);
    CHECK_THROWS_AS(GF2Vector::parse(""), std::invalid_argument);
}

TEST_CASE("unit vectors and coordinates") {
    const GF2Vector e2 = GF2Vector::unit(2, 4);
    CHECK(e2.to_string() == "0100");
    CHECK(e2.coordinate(2) == 1);
    CHECK(e2.coordinate(1) == 0);
    CHECK_THROWS_AS(GF2Vector::unit(5, 4), std::invalid_argument);
}

TEST_CASE("vector addition is xor") {
    const GF2Vector a = GF2Vector::parse("1100");
    const GF2Vector b = GF2Vector::parse("0110");
    CHECK((a + b).to_string() == "1010");
    CHECK((a + a).is_zero());
}

TEST_CASE("span produces a reduced basis with increasing pivots") {
    const Subspace s = span({GF2Vector::parse("1100"), GF2Vector::parse("0110"),
                             GF2Vector::parse("1010")},
                            4);
    CHECK(s.dim() == 2);
    const auto rows = s.rows();
    REQUIRE(rows.size() == 2);
    // reduced: each pivot appears in exactly one row, pivots strictly increase
    CHECK(std::countr_zero(rows[0]) < std::countr_zero(rows[1]));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (i != j)
                CHECK((rows[j] >> std::countr_zero(rows[i]) & 1) == 0);
}

TEST_CASE("span is order independent") {
    const GF2Vector a = GF2Vector::parse("110010");
    const GF2Vector b = GF2Vector::parse("011001");
    const GF2Vector c = GF2Vector::parse("111100");
    CHECK(span({a, b, c}, 6) == span({c, a, b}, 6));
    CHECK(span({a, b, c}, 6) == span({a + b, b, c + a}, 6));
}

TEST_CASE("zero and full subspaces") {
    const Subspace z = Subspace::zero(5);
    CHECK(z.dim() == 0);
    CHECK(z.is_zero());
    const Subspace f = Subspace::full(5);
    CHECK(f.dim() == 5);
    CHECK(f.contains(GF2Vector::parse("10101")));
}

TEST_CASE("containment and membership") {
    const Subspace s = span({GF2Vector::parse("1100"), GF2Vector::parse("0011")}, 4);
    CHECK(s.contains(GF2Vector::parse("1111")));
    CHECK(!s.contains(GF2Vector::parse("1000")));
    CHECK(s.contains(GF2Vector::parse("0000")));
    CHECK(is_subspace(span({GF2Vector::parse("1111")}, 4), s));
    CHECK(!is_subspace(s, span({GF2Vector::parse("1111")}, 4)));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 6;
        std::vector<GF2Vector> sa, sb;
        for (int i = 0; i < 3; ++i) {
            sa.emplace_back(rng() & 0x3f, m);
            sb.emplace_back(rng() & 0x3f, m);
        }
        const Subspace a = span(sa, m);
        const Subspace b = span(sb, m);
        const Subspace u = sum(a, b);
        const Subspace i = intersection(a, b);
        CHECK(u.dim() + i.dim() == a.dim() + b.dim());
        CHECK(is_subspace(i, a));
        CHECK(is_subspace(i, b));
        CHECK(is_subspace(a, u));
        CHECK(is_subspace(b, u));
    }
}

TEST_CASE("modular law for subspaces") {
    // a <= c implies a + (b meet c) == (a + b) meet c
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 6;
        std::vector<GF2Vector> rows_c, rows_b;
        for (int i = 0; i < 4; ++i)
            rows_c.emplace_back(rng() & 0x3f, m);
        for (int i = 0; i < 3; ++i)
            rows_b.emplace_back(rng() & 0x3f, m);
        const Subspace c = span(rows_c, m);
        const Subspace b = span(rows_b, m);
        if (c.dim() == 0)
            continue;
        // pick a random subspace of c
        std::vector<GF2Vector> rows_a;
        const auto vecs = enumerate_vectors(c);
        for (int i = 0; i < 2; ++i)
            rows_a.push_back(vecs[rng() % vecs.size()]);
        const Subspace a = span(rows_a, m);
        CHECK(sum(a, intersection(b, c)) == intersection(sum(a, b), c));
    }
}

TEST_CASE("null space recovers annihilated vectors") {
    const Subspace s = span({GF2Vector::parse("1100"), GF2Vector::parse("0011")}, 4);
    const Subspace ns = null_space(s.rows(), 4);
    CHECK(ns.dim() == 2);
    for (const GF2Vector& v : enumerate_vectors(ns))
        for (std::uint64_t row : s.rows())
            CHECK(std::popcount(row & v.bits()) % 2 == 0);
}

TEST_CASE("biduality of the annihilator") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 7;
        std::vector<GF2Vector> rows;
        const int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i)
            rows.emplace_back(rng() & 0x7f, m);
        const Subspace s = span(rows, m);
        const Subspace dual = null_space(s.rows(), m);
        CHECK(dual.dim() == m - s.dim());
        CHECK(null_space(dual.rows(), m) == s);
    }
}

TEST_CASE("enumerate vectors lists each nonzero element once, ascending") {
    const Subspace s = span({GF2Vector::parse("1100"), GF2Vector::parse("0011"),
                             GF2Vector::parse("1111")},
                            4);
    const auto vecs = enumerate_vectors(s);
    CHECK(vecs.size() == 3); // 2^dim - 1
    CHECK(std::is_sorted(vecs.begin(), vecs.end(),
                         [](const GF2Vector& a, const GF2Vector& b) {
                             return a.bits() < b.bits();
                         }));
    std::set<std::uint64_t> seen;
    for (const auto& v : vecs) {
        CHECK(!v.is_zero());
        CHECK(s.contains(v));
        seen.insert(v.bits());
    }
    CHECK(seen.size() == vecs.size());
}

TEST_CASE("enumerate points skips zero") {
    const Subspace s = Subspace::full(3);
    const auto pts = enumerate_points(s);
    CHECK(pts.size() == 7);
    for (const auto& p : pts)
        CHECK(p.dim() == 1);
}

TEST_CASE("hyperplanes of a space") {
    const Subspace full = Subspace::full(4);
    const auto hps = hyperplanes_of(full);
    CHECK(hps.size() == 15); // 2^4 - 1
    std::set<Subspace> distinct(hps.begin(), hps.end());
    CHECK(distinct.size() == 15);
    for (const auto& h : hps) {
        CHECK(h.dim() == 3);
        CHECK(is_subspace(h, full));
    }
}

TEST_CASE("hyperplanes of a proper subspace stay inside it") {
    const Subspace s = span({GF2Vector::parse("110000"), GF2Vector::parse("001100"),
                             GF2Vector::parse("000011")},
                            6);
    const auto hps = hyperplanes_of(s);
    CHECK(hps.size() == 7);
    for (const auto& h : hps) {
        CHECK(h.dim() == 2);
        CHECK(is_subspace(h, s));
    }
}

TEST_CASE("all subspaces of V(4,2) by dimension match Gaussian binomials") {
    CHECK(all_subspaces(4, 0).size() == 1);
    CHECK(all_subspaces(4, 1).size() == 15);
    CHECK(all_subspaces(4, 2).size() == 35);
    CHECK(all_subspaces(4, 3).size() == 15);
    CHECK(all_subspaces(4, 4).size() == 1);
}

TEST_CASE("all subspaces of V(6,2) of dimension 2") {
    const auto subs = all_subspaces(6, 2);
    CHECK(subs.size() == 651);
    std::set<Subspace> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == subs.size());
}

TEST_CASE("subspace string round-trip") {
    const Subspace s = span({GF2Vector::parse("1010"), GF2Vector::parse("0101")}, 4);
    CHECK(parse_subspace(s.to_string(",")) == s);
    CHECK_THROWS_AS(parse_subspace(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_subspace("10,011"), std::invalid_argument);
}

TEST_CASE("point helpers") {
    const GF2Vector v = GF2Vector::parse("0110");
    const Subspace p = make_point(v);
    CHECK(p.dim() == 1);
    CHECK(p.point_vector() == v);
    CHECK(p.point_bits() == v.bits());
    CHECK_THROWS_AS(make_point(GF2Vector::parse("0000")), std::invalid_argument);
    CHECK_THROWS_AS(span({GF2Vector::parse("11"), GF2Vector::parse("10")}, 2).point_vector(),
                    std::invalid_argument);
}

TEST_CASE("dimension guards") {
    CHECK_THROWS_AS(Subspace::full(-1), std::invalid_argument);
    CHECK_THROWS_AS(Subspace::full(65), std::invalid_argument);
    CHECK_THROWS_AS(intersection(Subspace::full(4), Subspace::full(5)),
                    std::invalid_argument);
}
