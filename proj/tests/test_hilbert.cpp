#include <doctest.h>

#include <numeric>
#include <random>

#include "fatpoint/error.hpp"
#include "fatpoint/hilbert.hpp"
#include "fatpoint/represent.hpp"
#include "support.hpp"

using namespace fatpoint;
using V = std::vector<std::int64_t>;

TEST_CASE("two-line scheme agrees with the coordinate oracle") {
    const auto eng = hilbert_with_betti(testing_support::two_line_type(), testing_support::two_line_mults(), Mode::conic);
    const auto pts = testing_support::two_line_points();
    const auto orc = hilbert_oracle(pts, testing_support::two_line_mults());
    CHECK(eng.values == orc.values);
    CHECK(eng.degree == 46);
    CHECK(eng.values == V{1, 3, 6, 10, 15, 21, 27, 31, 35, 38, 40, 42, 44, 45, 46});
    const auto b = betti_oracle(pts, testing_support::two_line_mults());
    CHECK(*eng.betti_f0 == b.f0);
    CHECK(*eng.betti_f1 == b.f1);
    CHECK(eng.betti_f0->at(13) == 1);
    CHECK(generators_in_degree(pts, testing_support::two_line_mults(), 13) == 1);
}

TEST_CASE("all-zero multiplicities are rejected") {
    CHECK_THROWS_AS(hilbert_function(builtin(3, 1), V(3, 0)), InputError);
}

TEST_CASE("stored Hilbert functions") {
    CHECK(hilbert_function(builtin(7, 9), V(7, 2)).values == V{1, 3, 6, 10, 14, 17, 19, 21});
    CHECK(hilbert_function(builtin(8, 141), V(8, 1)).values == V{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(hilbert_function(builtin(7, 25), V(7, 1)).values == V{1, 3, 5, 7});
}

TEST_CASE("Betti numbers") {
    auto b = betti_numbers(builtin(6, 10), V(6, 2));
    CHECK(format_betti(b.f0) == "4^1,6^4");
    CHECK(format_betti(b.f1) == "7^4");
    CHECK(hilbert_function(builtin(6, 10), V(6, 2)).values == V{1, 3, 6, 10, 14, 18});
    CHECK_THROWS_AS(betti_numbers(builtin(7, 1), V(7, 1)), UnsupportedError);
    CHECK_THROWS_AS(betti_numbers(builtin(8, 5), V(8, 2)), UnsupportedError);
    CHECK(format_betti({}) == "0");
}

TEST_CASE("single fat point") {
    for (std::int64_t m = 1; m <= 6; ++m) {
        auto rep = hilbert_function(builtin(1, 1), V{m});
        CHECK(rep.degree == m * (m + 1) / 2);
        for (std::int64_t t = 0; t <= 10; ++t) {
            const std::int64_t expect = std::min(forms_of_degree(t), m * (m + 1) / 2);
            CHECK(rep.at(t) == expect);
        }
    }
}

TEST_CASE("extremal double-point functions") {
    auto e = extremal_double({1, 3, 5, 7}, 7, 2, Mode::eight_points);
    CHECK(e.matching == std::vector<std::string>{"8", "9", "25"});
    CHECK(*e.h_max == V{1, 3, 6, 10, 14, 18, 20, 21});
    CHECK(e.max_types == std::vector<std::string>{"8", "25"});
    CHECK(*e.h_min == V{1, 3, 6, 10, 14, 17, 19, 21});
    CHECK(e.min_types == std::vector<std::string>{"9"});

    auto e8 = extremal_double({1, 3, 6, 8}, 8, 2, Mode::eight_points);
    CHECK(*e8.h_max == V{1, 3, 6, 10, 15, 21, 24});
    std::vector<std::string> first96;
    for (int i = 1; i <= 96; ++i) first96.push_back(std::to_string(i));
    CHECK(e8.max_types == first96);

    // four points: general (type 1) is maximal, three on a line (type 2) minimal
    auto e4 = extremal_double({1, 3, 4}, 4, 2, Mode::eight_points);
    CHECK(e4.max_types == std::vector<std::string>{"1"});
    CHECK(e4.min_types == std::vector<std::string>{"2"});
}

TEST_CASE("uniform partitions") {
    auto u6 = uniform_partition(6, 3);
    bool together = false;
    for (const auto& g : u6.groups) together |= std::find(g.begin(), g.end(), 8) != g.end() && std::find(g.begin(), g.end(), 11) != g.end();
    CHECK(together);
    CHECK(uniform_partition(7, 7).bound == 7);
    auto u4a = uniform_partition(4, 1), u4b = uniform_partition(4, 2);
    CHECK(u4b.groups.size() > u4a.groups.size());
    CHECK(u4b.bound == 2);
}

TEST_CASE("property: Hilbert function shape") {
    std::mt19937_64 rng(17);
    for (std::size_t r = 1; r <= 8; ++r)
        for (const auto& t : enumerate(r)) {
            const auto m = testing_support::random_mults(rng, r, 0, 4);
            const auto rep = hilbert_function(t, m);
            CHECK(rep.degree == scheme_degree(m));
            CHECK(rep.values.back() == rep.degree);
            CHECK(rep.at(rep.saturation + 5) == rep.degree);
            std::int64_t prev = 0;
            for (std::size_t k = 0; k < rep.values.size(); ++k) {
                CHECK(rep.values[k] <= forms_of_degree(static_cast<std::int64_t>(k)));
                CHECK(rep.values[k] >= prev);
                prev = rep.values[k];
            }
            // first differences are nonincreasing once they start to drop
            bool dropped = false;
            for (std::size_t k = 1; k < rep.delta.size(); ++k) {
                if (rep.delta[k] < rep.delta[k - 1]) dropped = true;
                if (dropped) CHECK(rep.delta[k] <= rep.delta[k - 1]);
            }
        }
}

TEST_CASE("property: Betti numbers satisfy the Hilbert-Burch count") {
    std::mt19937_64 rng(19);
    for (std::size_t r = 1; r <= 6; ++r)
        for (const auto& t : enumerate(r)) {
            const auto m = testing_support::random_mults(rng, r, 1, 4);
            const auto b = betti_numbers(t, m);
            // the numerator 1 - sum t^d + sum t^e has a double root at t = 1
            // and its second derivative there is twice the degree
            std::int64_t gens = 0, syz = 0, g1 = 0, s1 = 0, g2 = 0, s2 = 0;
            for (auto [d, n] : b.f0) gens += n, g1 += d * n, g2 += d * d * n;
            for (auto [d, n] : b.f1) syz += n, s1 += d * n, s2 += d * d * n;
            CHECK(syz == gens - 1);
            CHECK(s1 == g1);
            CHECK(s2 - g2 == 2 * scheme_degree(m));
            const auto rep = hilbert_function(t, m);
            std::int64_t alpha = 0;
            while (rep.at(alpha) == forms_of_degree(alpha)) ++alpha;
            CHECK(b.f0.begin()->first == alpha);
        }
}
