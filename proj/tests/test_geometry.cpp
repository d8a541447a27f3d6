#include <doctest.h>

#include <bit>
#include <random>

#include "fatpoint/conic.hpp"
#include "fatpoint/error.hpp"
#include "fatpoint/field.hpp"
#include "fatpoint/geometry.hpp"
#include "support.hpp"

using namespace fatpoint;
using testing_support::q_points;

namespace {

std::array<std::array<mpq_class, 3>, 3> random_matrix(std::mt19937_64& rng, const ExactField& f) {
    std::uniform_int_distribution<long> v(-6, 6);
    const std::uint64_t q = f.is_finite() ? finite_field(f.p, f.k).q() : 0;
    std::uniform_int_distribution<std::uint64_t> fv(0, q ? q - 1 : 0);
    std::array<std::array<mpq_class, 3>, 3> m;
    for (auto& row : m)
        for (auto& x : row) x = f.is_finite() ? mpq_class(static_cast<unsigned long>(fv(rng))) : mpq_class(v(rng));
    return m;
}

}  // namespace

TEST_CASE("prime fields") {
    const auto& f = finite_field(13);
    for (std::uint32_t a = 1; a < 13; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.pow(a, 12) == 1);
    }
    CHECK(f.from_int(-1) == 12);
    CHECK_THROWS_AS(FiniteField(12), InputError);
    CHECK_THROWS_AS(f.inv(0), InputError);
}

TEST_CASE("extension fields satisfy the field axioms") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
        const auto& f = finite_field(p, k);
        const auto q = static_cast<std::uint32_t>(f.q());
        CHECK(f.name() == "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
        for (std::uint32_t a = 0; a < q; ++a) {
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            if (a) CHECK(f.pow(a, q - 1) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; c += 3) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                }
            }
        }
    }
    // a primitive element generates the multiplicative group
    const auto& g = finite_field(2, 4);
    std::uint32_t best = 0;
    for (std::uint32_t a = 1; a < 16; ++a) {
        std::uint32_t order = 1, x = a;
        while (x != 1) x = g.mul(x, a), ++order;
        best = std::max(best, order);
    }
    CHECK(best == 15);
    CHECK_THROWS_AS(FiniteField(2, 21), UnsupportedError);
}

TEST_CASE("point sets") {
    CHECK_THROWS_AS(q_points({{0, 0, 0}}), InputError);
    CHECK_THROWS_AS(q_points({{1, 2, 3}, {2, 4, 6}}), InputError);
    CHECK_THROWS_AS(PointSet(ExactField::prime(2), {{mpq_class(2), mpq_class(0), mpq_class(1)}}), InputError);
    auto pts = q_points({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK(collinear(pts.field(), pts[0], pts[1], pts[2]));
    CHECK(same_point(pts.field(), {mpq_class(1), mpq_class(2), mpq_class(3)}, {mpq_class(-2), mpq_class(-4), mpq_class(-6)}));
}

TEST_CASE("linear systems on small examples") {
    auto five = q_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
    CHECK(linear_system_dim(five, std::vector<std::int64_t>(5, 1), 2) == 1);
    const auto fano = testing_support::fano(ExactField::prime(2));
    for (auto [a, b, c] : std::vector<std::array<std::size_t, 3>>{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}, {0, 5, 6}, {1, 4, 6}, {2, 3, 6}})
        CHECK(linear_system_dim(fano.subset({a, b, c}), {1, 1, 1}, 1) == 1);
    CHECK(linear_system_dim(testing_support::two_line_points(), testing_support::two_line_mults(), 12) == 47);
    CHECK(linear_system_dim(five, {0, 0, 0, 0, 0}, 3) == 10);
    CHECK(linear_system_dim(five, {1, 1, 1, 1, 1}, -1) == 0);
}

TEST_CASE("detecting negative curves") {
    // general eight points over Q
    auto general = q_points({{1, 2, 3}, {4, -1, 7}, {2, 9, -5}, {11, 3, 1}, {-6, 5, 13}, {7, 8, -2}, {3, -10, 9}, {1, 1, 19}});
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = a + 1; b < 8; ++b)
            for (std::size_t c = b + 1; c < 8; ++c) CHECK_FALSE(collinear(general.field(), general[a], general[b], general[c]));
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 6) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 8; ++i)
            if (mask >> i & 1u) idx.push_back(i);
        CHECK(linear_system_dim(general.subset(idx), std::vector<std::int64_t>(6, 1), 2) == 0);
    }
    for (std::size_t k = 0; k < 8; ++k) {
        std::vector<std::int64_t> m(8, 1);
        m[k] = 2;
        CHECK(linear_system_dim(general, m, 3) == 0);
    }
    CHECK(detect_neg(general).classes().empty());
    CHECK(identify_type(general).type == TableRef{8, 1});

    // three on each of two lines plus their meeting point
    auto two = q_points({{1, 0, 1}, {2, 0, 1}, {3, 0, 1}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 0, 1}});
    auto detected = detect_neg(two);
    CHECK(canonical_form(detected.classes(), 7).key ==
          canonical_form(conic_neg({ConicCaseKind::III, 7, 4, 4, 1}).classes(), 7).key);
}

TEST_CASE("identifying types") {
    CHECK(identify_type(testing_support::fano(ExactField::prime(2))).type == TableRef{7, 24});
    CHECK(identify_type(testing_support::fano(ExactField::rationals())).type == TableRef{7, 23});
    CHECK(identify_type(q_points({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})).type == TableRef{3, 2});
    auto conic6 = q_points({{1, 1, 1}, {2, 4, 1}, {3, 9, 1}, {-1, 1, 1}, {-2, 4, 1}, {0, 0, 1}});
    CHECK(identify_type(conic6).type == TableRef{6, 11});
}

TEST_CASE("oracle Hilbert function") {
    const auto orc = hilbert_oracle(testing_support::two_line_points(), testing_support::two_line_mults());
    CHECK(orc.degree == 46);
    CHECK(orc.values.back() == 46);
    for (std::int64_t m = 1; m <= 5; ++m) {
        auto one = hilbert_oracle(q_points({{2, 3, 5}}), {m});
        CHECK(one.degree == m * (m + 1) / 2);
        for (std::int64_t t = 0; t <= m + 2; ++t)
            CHECK(one.at(t) == std::min(forms_of_degree(t), m * (m + 1) / 2));
    }
}

TEST_CASE("file formats") {
    const auto fano = testing_support::fano(ExactField::galois(2, 3));
    const auto again = parse_point_file(to_point_file(fano));
    CHECK(again.field() == fano.field());
    CHECK(again.size() == 7);
    auto pts = parse_point_file(R"({"field":{"kind":"Q"},"points":[["1/2","0","1"],["0","-3/4","1"]]})");
    CHECK(pts[0][0] == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_point_file(R"({"field":{"kind":"Fp","p":4},"points":[]})"), InputError);
    CHECK_THROWS_AS(parse_point_file("not json"), InputError);
    CHECK(testing_support::witnesses().size() == 195);
}

TEST_CASE("property: stored witnesses identify as their type") {
    for (const auto& w : testing_support::witnesses()) {
        CAPTURE(w.type.r);
        CAPTURE(w.type.index);
        CHECK(identify_type(w.points).type == w.type);
    }
}

TEST_CASE("property: dimensions are invariant under projectivities") {
    std::mt19937_64 rng(23);
    for (const auto& w : testing_support::witnesses()) {
        if (w.type.r < 5 || w.type.index % 7 != 0) continue;
        auto m = random_matrix(rng, w.points.field());
        std::optional<PointSet> moved;
        try {
            moved = w.points.transformed(m);
        } catch (const InputError&) {
            continue;  // singular draw
        }
        const auto mults = testing_support::random_mults(rng, w.type.r, 0, 3);
        for (std::int64_t d = 0; d <= 7; ++d) CHECK(linear_system_dim(w.points, mults, d) == linear_system_dim(*moved, mults, d));
        CHECK(identify_type(*moved).type == w.type);
    }
}

TEST_CASE("property: engine equals oracle on witnesses") {
    std::mt19937_64 rng(29);
    for (const auto& w : testing_support::witnesses()) {
        if (w.type.r > 6 && w.type.index % 5 != 0) continue;
        const auto mults = testing_support::random_mults(rng, w.type.r, 0, 3);
        const auto id = identify_type(w.points);
        std::vector<std::int64_t> stored(mults.size());
        for (std::size_t i = 0; i < mults.size(); ++i) stored[id.permutation[i]] = mults[i];
        const auto eng = hilbert_function(builtin(w.type.r, w.type.index), stored);
        const auto orc = hilbert_oracle(w.points, mults);
        CAPTURE(w.type.r);
        CAPTURE(w.type.index);
        CHECK(eng.values == orc.values);
        if (w.type.r <= 6) {
            const auto b = betti_numbers(builtin(w.type.r, w.type.index), stored);
            const auto ob = betti_oracle(w.points, mults);
            CHECK(b.f0 == ob.f0);
            CHECK(b.f1 == ob.f1);
        }
    }
}
