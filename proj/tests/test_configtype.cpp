#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fatpoint/catalog.hpp"
#include "fatpoint/configtype.hpp"
#include "fatpoint/error.hpp"

using namespace fatpoint;

namespace {

DivisorClass line(std::size_t r, std::initializer_list<std::size_t> pts) {
    std::vector<std::int64_t> m(r, 0);
    for (auto p : pts) m[p - 1] = 1;
    return {1, m};
}

// Independent count: all pairwise nonnegative subsets of the square <= -2
// candidates, deduplicated by trying every permutation.
std::size_t brute_force_types(std::size_t r) {
    const auto pool = square_at_most(negative_candidates(r, Mode::eight_points), -2);
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(r);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::vector<DivisorClass>> seen;
    std::vector<DivisorClass> current;
    auto record = [&] {
        std::vector<DivisorClass> best;
        for (const auto& perm : perms) {
            auto img = relabel(current, perm);
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = img;
        }
        seen.insert(best);
    };
    auto extend = [&](auto&& self, std::size_t from) -> void {
        record();
        for (std::size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (const auto& c : current) ok = ok && intersect(c, pool[i]) >= 0;
            if (!ok) continue;
            current.push_back(pool[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return seen.size();
}

}  // namespace

TEST_CASE("validation of class sets") {
    CHECK_THROWS_AS(validate({line(8, {1, 2, 3}), line(8, {1, 2, 4})}, 8), InputError);
    CHECK(intersect(line(8, {1, 2, 3}), line(8, {4, 5, 6})) == 1);
    CHECK_NOTHROW(validate({line(8, {1, 2, 3}), line(8, {4, 5, 6})}, 8));
    CHECK_NOTHROW(validate({line(8, {1, 2, 3}), line(8, {1, 4, 5}), line(8, {2, 4, 6}), line(8, {3, 5, 7})}, 8));
    CHECK_THROWS_AS(validate({DivisorClass(1, {1, 1, 0, 0, 0, 0, 0, 0})}, 8), InputError);  // square -1
}

TEST_CASE("canonical keys") {
    CHECK(validate({line(8, {1, 2, 3})}, 8).canonical_key() == validate({line(8, {6, 7, 8})}, 8).canonical_key());
    CHECK(validate({}, 6).canonical_key() != validate({DivisorClass(2, {1, 1, 1, 1, 1, 1})}, 6).canonical_key());
}

TEST_CASE("canonical key: four lines plus either conic") {
    const std::vector<DivisorClass> lines{line(8, {1, 2, 3}), line(8, {1, 4, 5}), line(8, {2, 4, 6}), line(8, {3, 5, 7})};
    const DivisorClass q1(2, {1, 0, 1, 1, 0, 1, 1, 1}), q2(2, {1, 1, 0, 0, 1, 1, 1, 1}), c(3, {1, 1, 1, 1, 1, 1, 1, 2});
    CHECK(lookup_index(8, validate(lines, 8).canonical_key()) == 10u);
    auto with1 = lines, with2 = lines;
    with1.push_back(q1);
    with2.push_back(q2);
    auto t1 = validate(with1, 8), t2 = validate(with2, 8);
    CHECK(t1.canonical_key() == t2.canonical_key());
    CHECK(lookup_index(8, t1.canonical_key()) == 77u);

    // among the 45 conic and cubic candidates only q1, q2, c meet all four lines nonnegatively
    std::vector<DivisorClass> compatible;
    std::size_t higher = 0;
    for (const auto& k : square_at_most(negative_candidates(8, Mode::eight_points), -2)) {
        if (k.degree() < 2) continue;
        ++higher;
        if (std::all_of(lines.begin(), lines.end(), [&](const DivisorClass& l) { return intersect(k, l) >= 0; }))
            compatible.push_back(k);
    }
    CHECK(higher == 45);
    std::sort(compatible.begin(), compatible.end());
    std::vector<DivisorClass> expect{q1, q2, c};
    std::sort(expect.begin(), expect.end());
    CHECK(compatible == expect);
    CHECK(intersect(q1, q2) >= 0);
    CHECK(intersect(q1, c) < 0);
    CHECK(intersect(q2, c) < 0);
}

TEST_CASE("enumeration counts") {
    const std::size_t expected[] = {0, 1, 1, 2, 3, 5, 11, 29, 146};
    for (std::size_t r = 1; r <= 8; ++r) {
        CHECK(enumerate(r).size() == expected[r]);
        CHECK(builtin_count(r) == expected[r]);
        CHECK(check_enumeration(r).ok());
    }
}

TEST_CASE("enumeration agrees with brute force for r <= 6") {
    for (std::size_t r = 2; r <= 6; ++r) CHECK(brute_force_types(r) == enumerate(r).size());
}

TEST_CASE("line-only eight-point types") { CHECK(enumerate_raw(8, true).size() == 69); }

TEST_CASE("stored types") {
    CHECK(builtin(7, 25).classes() == std::vector<DivisorClass>{DivisorClass(2, std::vector<std::int64_t>(7, 1))});
    auto t10 = builtin(6, 10).classes();
    std::vector<DivisorClass> expect{line(6, {1, 2, 3}), line(6, {1, 4, 5}), line(6, {2, 4, 6}), line(6, {3, 5, 6})};
    std::sort(t10.begin(), t10.end());
    std::sort(expect.begin(), expect.end());
    CHECK(t10 == expect);
    CHECK(builtin(8, 33).classes() == std::vector<DivisorClass>{DivisorClass(3, {1, 1, 1, 1, 1, 1, 1, 2})});
    CHECK_THROWS_AS(builtin(8, 147), LookupError);
    CHECK_THROWS_AS(builtin(9, 1), LookupError);
}

TEST_CASE("notation parsing") {
    auto t = parse_notation("1: abc, ade", 6);
    std::vector<DivisorClass> expect{line(6, {1, 2, 3}), line(6, {1, 4, 5})};
    auto got = t.classes();
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    CHECK(parse_notation("2: abcdef", 6).classes() == std::vector<DivisorClass>{DivisorClass(2, {1, 1, 1, 1, 1, 1})});
    CHECK(parse_notation("3: abcdefgh", 8).classes() == std::vector<DivisorClass>{DivisorClass(3, {1, 1, 1, 1, 1, 1, 1, 2})});
    CHECK_THROWS_AS(parse_notation("1: abz", 6), InputError);
    CHECK_THROWS_AS(parse_notation("1: abc, abd", 6), InputError);
}

TEST_CASE("property: notation round trip and table identity for every stored type") {
    for (std::size_t r = 1; r <= 8; ++r)
        for (std::size_t i = 1; i <= builtin_count(r); ++i) {
            const auto& t = builtin(r, i);
            CHECK(t.notation() == builtin_notation(r, i));
            auto again = parse_notation(t.notation(), r);
            CHECK(again.canonical_key() == t.canonical_key());
            CHECK(lookup_index(r, t.canonical_key()) == i);
        }
}

TEST_CASE("property: keys are invariant under relabeling") {
    std::mt19937_64 rng(3);
    for (std::size_t r = 3; r <= 8; ++r)
        for (const auto& t : enumerate(r)) {
            std::vector<std::size_t> perm(r);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto moved = validate(relabel(t.classes(), perm), r);
            CHECK(moved.canonical_key() == t.canonical_key());
        }
}

TEST_CASE("property: distinct stored types have distinct keys") {
    for (std::size_t r = 1; r <= 8; ++r) {
        std::set<std::string> keys;
        for (const auto& t : enumerate(r)) keys.insert(t.canonical_key());
        CHECK(keys.size() == enumerate(r).size());
    }
}

TEST_CASE("property: canonical labels realize the key") {
    for (const auto& t : enumerate(8)) {
        auto cf = canonical_form(t.classes(), 8);
        CHECK(cf.key == t.canonical_key());
        auto img = validate(relabel(t.classes(), cf.labels), 8);
        CHECK(canonical_form(img.classes(), 8).key == cf.key);
    }
}
