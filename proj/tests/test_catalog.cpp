#include <doctest.h>

#include <set>

#include "fatpoint/catalog.hpp"
#include "fatpoint/error.hpp"

using namespace fatpoint;

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

// number of candidates of square <= -2 by binomial counting
std::int64_t count_negative_two(std::int64_t r) {
    std::int64_t n = 0;
    for (std::int64_t j = 3; j <= r; ++j) n += choose(r, j);           // lines
    for (std::int64_t j = 6; j <= r; ++j) n += choose(r, j);           // conics
    if (r == 8) n += 8;                                                // 3L - 2E_k - rest
    return n;
}

}  // namespace

TEST_CASE("classes of square at most -2") {
    CHECK(square_at_most(negative_candidates(8, Mode::eight_points), -2).size() == 264);
    CHECK(square_at_most(negative_candidates(7, Mode::eight_points), -2).size() == 107);  // 99 lines, 8 conics
    CHECK(square_at_most(negative_candidates(6, Mode::eight_points), -2).size() == 43);
    for (std::int64_t r = 2; r <= 8; ++r)
        CHECK(static_cast<std::int64_t>(square_at_most(negative_candidates(r, Mode::eight_points), -2).size()) ==
              count_negative_two(r));
    CHECK(square_at_most(negative_candidates(2, Mode::eight_points), -2).empty());
    CHECK(square_at_most(negative_candidates(2, Mode::conic), -2).empty());
}

TEST_CASE("bound -1 returns the whole family") {
    for (std::size_t r = 2; r <= 8; ++r) {
        const auto fam = negative_candidates(r, Mode::eight_points);
        CHECK(square_at_most(fam, -1).size() == fam.size());
    }
}

TEST_CASE("square -1 classes for eight points number 240") {
    // E_i, L-2, 2L-5, 3L-2E-6, 4L-2E^3-5, 5L-2E^6-2, 6L-3E-2E^7
    CHECK(negative_candidates(8, Mode::eight_points).exceptional_curves().size() == 8 + 28 + 56 + 56 + 56 + 28 + 8);
    CHECK(negative_candidates(7, Mode::eight_points).exceptional_curves().size() == 7 + 21 + 21 + 7);
    CHECK(negative_candidates(6, Mode::eight_points).exceptional_curves().size() == 27);
}

TEST_CASE("eight-point family composition") {
    const auto fam = negative_candidates(8, Mode::eight_points);
    std::set<DivisorClass> seen;
    int cubic = 0, m8 = 0;
    for (const auto& c : fam.classes()) {
        CHECK(self_intersection(c) <= -1);
        CHECK(seen.insert(c).second);
        if (c.degree() == 3 && self_intersection(c) == -2) ++cubic;
        if (c.degree() >= 4) ++m8;
    }
    CHECK(cubic == 8);
    CHECK(m8 > 0);
    CHECK(std::is_sorted(fam.classes().begin(), fam.classes().end()));
    // no cubics for r <= 6, no M8 for r = 7
    const auto six = negative_candidates(6, Mode::eight_points), seven = negative_candidates(7, Mode::eight_points);
    for (const auto& c : six.classes()) CHECK(c.degree() <= 2);
    for (const auto& c : seven.classes()) CHECK(c.degree() <= 3);
}

TEST_CASE("conic family sizes") {
    for (std::size_t r = 2; r <= 20; ++r) {
        const auto fam = negative_candidates(r, Mode::conic);
        const std::size_t expected = r + ((std::size_t{1} << r) - 1 - r) + (r > 4 ? 1 : 0);
        CHECK(fam.size() == expected);
        std::size_t visited = 0;
        fam.for_each([&](const DivisorClass& c) {
            CHECK(in_conic_family(c));
            ++visited;
            return true;
        });
        CHECK(visited == expected);
        CHECK(fam.materialized() == (r <= CandidateFamily::kConicMaterializeLimit));
    }
    const auto big = negative_candidates(20, Mode::conic);
    CHECK(big.contains(DivisorClass(2, std::vector<std::int64_t>(20, 1))));
    CHECK_FALSE(big.contains(DivisorClass(2, std::vector<std::int64_t>(20, 0))));
    CHECK_THROWS(big.classes());
}

TEST_CASE("range checks") {
    CHECK_THROWS_AS(negative_candidates(9, Mode::eight_points), UnsupportedError);
    CHECK_THROWS_AS(negative_candidates(1, Mode::conic), UnsupportedError);
}
