#include <doctest.h>

#include <random>
#include <set>

#include "hyperquad/gf2.hpp"
#include "hyperquad/quadric.hpp"

using namespace hyperquad;

namespace {

// Brute-force cross-check for classify_restriction: derive the invariants by
// scanning every vector of S instead of working in coefficient space.
struct BruteClass {
    int total_dim;
    int vertex_dim;
    int radical_dim;
    std::uint64_t singular;
};

BruteClass brute_classify(const QuadraticSpace& qs, const Subspace& s) {
    std::vector<std::uint64_t> all{0};
    for (const GF2Vector& v : enumerate_vectors(s))
        all.push_back(v.bits());
    std::uint64_t radical_size = 0, vertex_size = 0, singular = 0;
    for (std::uint64_t v : all) {
        bool in_radical = true;
        for (std::uint64_t w : all)
            if (qs.bilinear_bits(v, w)) {
                in_radical = false;
                break;
            }
        if (in_radical) {
            ++radical_size;
            if (qs.eval_bits(v) == 0)
                ++vertex_size;
        }
        if (v != 0 && qs.eval_bits(v) == 0)
            ++singular;
    }
    BruteClass out{};
    out.total_dim = s.dim();
    out.radical_dim = std::countr_zero(radical_size);
    out.vertex_dim = std::countr_zero(vertex_size);
    out.singular = singular;
    return out;
}

void check_against_brute(const QuadraticSpace& qs, const Subspace& s) {
    const FormClass fc = classify_restriction(qs, s);
    const BruteClass bc = brute_classify(qs, s);
    CHECK(fc.total_dim == bc.total_dim);
    CHECK(fc.vertex_dim == bc.vertex_dim);
    CHECK(fc.singular_count() == bc.singular);
    // radical = vertex plus one extra dimension exactly in the parabolic case
    const int t = bc.radical_dim - bc.vertex_dim;
    if (fc.base_kind == BaseKind::parabolic)
        CHECK(t == 1);
    else
        CHECK(t == 0);
    // base dimension parity by kind
    switch (fc.base_kind) {
    case BaseKind::zero:
        CHECK(fc.base_dim() == 0);
        break;
    case BaseKind::parabolic:
        CHECK(fc.base_dim() % 2 == 1);
        CHECK(fc.base_rank == (fc.base_dim() - 1) / 2);
        break;
    case BaseKind::hyperbolic:
        CHECK(fc.base_dim() % 2 == 0);
        CHECK(fc.base_rank == fc.base_dim() / 2);
        break;
    case BaseKind::elliptic:
        CHECK(fc.base_dim() % 2 == 0);
        CHECK(fc.base_rank == fc.base_dim() / 2 - 1);
        break;
    }
}

} // namespace

TEST_CASE("standard hyperbolic form evaluates pair products") {
    const QuadraticSpace qs = standard_form(FormKind::hyperbolic, 4);
    CHECK(qs.eval(GF2Vector::parse("1000")) == 0);
    CHECK(qs.eval(GF2Vector::parse("1100")) == 1);
    CHECK(qs.eval(GF2Vector::parse("1111")) == 0); // 1*1 + 1*1
    CHECK(qs.eval(GF2Vector::parse("1010")) == 0);
    CHECK(qs.nondegenerate());
}

TEST_CASE("standard elliptic form has no nonzero singular vectors in dim 2") {
    const QuadraticSpace qs = standard_form(FormKind::elliptic, 2);
    CHECK(qs.eval(GF2Vector::parse("10")) == 1);
    CHECK(qs.eval(GF2Vector::parse("01")) == 1);
    CHECK(qs.eval(GF2Vector::parse("11")) == 1);
    CHECK(singular_points(qs, Subspace::full(2)).empty());
}

TEST_CASE("parabolic polar form is degenerate in characteristic 2") {
    const QuadraticSpace qs = standard_form(FormKind::parabolic, 5);
    CHECK(!qs.nondegenerate());
    // the square term contributes nothing to the polar form
    for (int j = 1; j <= 5; ++j)
        CHECK(qs.bilinear(GF2Vector::unit(1, 5), GF2Vector::unit(j, 5)) == 0);
    CHECK(qs.eval(GF2Vector::unit(1, 5)) == 1);
}

TEST_CASE("form constructor validates the coefficient table") {
    std::vector<std::uint64_t> bad_lower{0b00, 0b01}; // entry below the diagonal
    CHECK_THROWS_AS(QuadraticSpace(2, bad_lower), std::invalid_argument);
    std::vector<std::uint64_t> bad_width{0b100, 0b10};
    CHECK_THROWS_AS(QuadraticSpace(2, bad_width), std::invalid_argument);
    std::vector<std::uint64_t> wrong_rows{0b1};
    CHECK_THROWS_AS(QuadraticSpace(2, wrong_rows), std::invalid_argument);
    CHECK_THROWS_AS(standard_form(FormKind::hyperbolic, 5), std::invalid_argument);
    CHECK_THROWS_AS(standard_form(FormKind::parabolic, 4), std::invalid_argument);
}

TEST_CASE("polarization identity") {
    std::mt19937_64 rng(17);
    for (int m : {4, 6, 7}) {
        const QuadraticSpace qs = m % 2 ? standard_form(FormKind::parabolic, m)
                                        : standard_form(FormKind::hyperbolic, m);
        const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
        for (int trial = 0; trial < 500; ++trial) {
            const std::uint64_t x = rng() & mask;
            const std::uint64_t y = rng() & mask;
            const int lhs = qs.bilinear_bits(x, y);
            const int rhs = qs.eval_bits(x ^ y) ^ qs.eval_bits(x) ^ qs.eval_bits(y);
            CHECK(lhs == rhs);
            CHECK(qs.bilinear_bits(x, y) == qs.bilinear_bits(y, x));
            CHECK(qs.bilinear_bits(x, x) == 0); // alternating in characteristic 2
        }
    }
}

TEST_CASE("singular point counts for small standard forms") {
    CHECK(singular_points(standard_form(FormKind::hyperbolic, 4), Subspace::full(4)).size() ==
          9);
    CHECK(singular_points(standard_form(FormKind::hyperbolic, 6), Subspace::full(6)).size() ==
          35);
    CHECK(singular_points(standard_form(FormKind::hyperbolic, 8), Subspace::full(8)).size() ==
          135);
    CHECK(singular_points(standard_form(FormKind::elliptic, 4), Subspace::full(4)).size() == 5);
    CHECK(singular_points(standard_form(FormKind::parabolic, 5), Subspace::full(5)).size() ==
          15);
}

TEST_CASE("nonsingular point counts complement singular ones") {
    for (int m : {4, 6}) {
        const QuadraticSpace qs = standard_form(FormKind::hyperbolic, m);
        const auto sing = singular_points(qs, Subspace::full(m));
        const auto nonsing = nonsingular_points(qs, Subspace::full(m));
        CHECK(sing.size() + nonsing.size() == (std::uint64_t{1} << m) - 1);
    }
}

TEST_CASE("perp is an involution and flips dimension") {
    const QuadraticSpace qs = standard_form(FormKind::hyperbolic, 6);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<GF2Vector> rows;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i)
            rows.emplace_back(rng() & 0x3f, 6);
        const Subspace s = span(rows, 6);
        const Subspace p = perp(qs, s);
        CHECK(p.dim() == 6 - s.dim());
        CHECK(perp(qs, p) == s);
        for (std::uint64_t a : s.rows())
            for (std::uint64_t b : p.rows())
                CHECK(qs.bilinear_bits(a, b) == 0);
    }
}

TEST_CASE("perp rejects a degenerate space") {
    const QuadraticSpace qs = standard_form(FormKind::parabolic, 5);
    CHECK_THROWS_AS(perp(qs, Subspace::full(5)), std::invalid_argument);
}

TEST_CASE("line types in the hyperbolic plane pair") {
    const QuadraticSpace qs = standard_form(FormKind::hyperbolic, 4);
    const auto line = [](const char* a, const char* b) {
        return span({GF2Vector::parse(a), GF2Vector::parse(b)}, 4);
    };
    CHECK(line_type(qs, line("1000", "0010")) == LineType::totally_singular);
    CHECK(line_type(qs, line("1000", "0100")) == LineType::secant);
    CHECK(line_type(qs, line("1100", "0011")) == LineType::tangent);
    CHECK(line_type(qs, line("1100", "1011")) == LineType::external);
    CHECK_THROWS_AS(line_type(qs, span({GF2Vector::parse("1000")}, 4)),
                    std::invalid_argument);
}

TEST_CASE("line type is independent of the chosen basis") {
    const QuadraticSpace qs = standard_form(FormKind::hyperbolic, 6);
    std::mt19937_64 rng(23);
    int seen[4] = {0, 0, 0, 0};
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t a = rng() & 0x3f;
        const std::uint64_t b = rng() & 0x3f;
        const Subspace line = span({GF2Vector(a, 6), GF2Vector(b, 6)}, 6);
        if (line.dim() != 2)
            continue;
        const int singular = (qs.eval_bits(a) == 0) + (qs.eval_bits(b) == 0) +
                             (qs.eval_bits(a ^ b) == 0);
        const LineType t = line_type(qs, line);
        switch (singular) {
        case 0:
            CHECK(t == LineType::external);
            break;
        case 1:
            CHECK(t == LineType::tangent);
            break;
        case 2:
            CHECK(t == LineType::secant);
            break;
        default:
            CHECK(t == LineType::totally_singular);
            break;
        }
        ++seen[static_cast<int>(t)];
    }
    for (int count : seen)
        CHECK(count > 0); // the sample hit every type
}

TEST_CASE("classification of the full standard spaces") {
    const FormClass h6 = classify_restriction(standard_form(FormKind::hyperbolic, 6),
                                              Subspace::full(6));
    CHECK(h6 == FormClass{6, 0, BaseKind::hyperbolic, 3});
    const FormClass e4 =
        classify_restriction(standard_form(FormKind::elliptic, 4), Subspace::full(4));
    CHECK(e4 == FormClass{4, 0, BaseKind::elliptic, 1});
    const FormClass p5 =
        classify_restriction(standard_form(FormKind::parabolic, 5), Subspace::full(5));
    CHECK(p5 == FormClass{5, 0, BaseKind::parabolic, 2});
}

TEST_CASE("classification agrees with brute force on every subspace of V(6,2)") {
    const QuadraticSpace qs = standard_form(FormKind::hyperbolic, 6);
    std::size_t total = 0;
    for (int d = 0; d <= 6; ++d)
        for (const Subspace& s : all_subspaces(6, d)) {
            check_against_brute(qs, s);
            ++total;
        }
    CHECK(total == 2825);
}

TEST_CASE("classification agrees with brute force on sampled subspaces of V(8,2)") {
    const QuadraticSpace qs = standard_form(FormKind::hyperbolic, 8);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<GF2Vector> rows;
        const int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i)
            rows.emplace_back(rng() & 0xff, 8);
        check_against_brute(qs, span(rows, 8));
    }
}

TEST_CASE("singular count formulas by class") {
    CHECK(FormClass{4, 0, BaseKind::hyperbolic, 2}.singular_count() == 9);
    CHECK(FormClass{6, 0, BaseKind::hyperbolic, 3}.singular_count() == 35);
    CHECK(FormClass{4, 0, BaseKind::elliptic, 1}.singular_count() == 5);
    CHECK(FormClass{5, 0, BaseKind::parabolic, 2}.singular_count() == 15);
    CHECK(FormClass{3, 3, BaseKind::zero, 0}.singular_count() == 7); // totally singular
    CHECK(FormClass{5, 1, BaseKind::hyperbolic, 2}.singular_count() == 19); // cone
}

TEST_CASE("totally singular subspace census for hyperbolic spaces") {
    const QuadraticSpace h4 = standard_form(FormKind::hyperbolic, 4);
    CHECK(totally_singular_subspaces(h4, 1).size() == 9);
    CHECK(totally_singular_subspaces(h4, 2).size() == 6);
    CHECK(totally_singular_subspaces(h4, 3).empty()); // beyond the Witt index
    const QuadraticSpace h6 = standard_form(FormKind::hyperbolic, 6);
    CHECK(totally_singular_subspaces(h6, 1).size() == 35);
    CHECK(totally_singular_subspaces(h6, 3).size() == 30);
    CHECK(totally_singular_subspaces(h6, 4).empty());
    for (const Subspace& s : totally_singular_subspaces(h6, 2))
        CHECK(is_totally_singular(h6, s));
}

TEST_CASE("elliptic spaces have a smaller Witt index") {
    const QuadraticSpace e4 = standard_form(FormKind::elliptic, 4);
    CHECK(totally_singular_subspaces(e4, 1).size() == 5);
    CHECK(totally_singular_subspaces(e4, 2).empty());
}

TEST_CASE("maximal totally singular subspaces through a next-to-maximal one") {
    const QuadraticSpace h4 = standard_form(FormKind::hyperbolic, 4);
    const Subspace g = make_point(GF2Vector::parse("1000"));
    const auto maximals = maximal_ts_through(h4, g);
    REQUIRE(maximals.size() == 2);
    CHECK(maximals[0] == span({GF2Vector::parse("1000"), GF2Vector::parse("0010")}, 4));
    CHECK(maximals[1] == span({GF2Vector::parse("1000"), GF2Vector::parse("0001")}, 4));

    const QuadraticSpace h6 = standard_form(FormKind::hyperbolic, 6);
    for (const Subspace& g2 : totally_singular_subspaces(h6, 2)) {
        const auto through = maximal_ts_through(h6, g2);
        CHECK(through.size() == 2);
        for (const Subspace& top : through) {
            CHECK(top.dim() == 3);
            CHECK(is_totally_singular(h6, top));
            CHECK(is_subspace(g2, top));
        }
    }
}

TEST_CASE("maximal_ts_through validates its input") {
    const QuadraticSpace h4 = standard_form(FormKind::hyperbolic, 4);
    CHECK_THROWS_AS(maximal_ts_through(h4, make_point(GF2Vector::parse("1100"))),
                    std::invalid_argument); // not singular
    CHECK_THROWS_AS(
        maximal_ts_through(h4, span({GF2Vector::parse("1000"), GF2Vector::parse("0010")}, 4)),
        std::invalid_argument); // wrong dimension
}
