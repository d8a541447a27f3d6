#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fatpoint/error.hpp"
#include "fatpoint/represent.hpp"

using namespace fatpoint;

namespace {

IntMatrix ints(const std::vector<std::vector<long>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (auto v : r) m.back().emplace_back(v);
    }
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix u(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> k(-3, 3);
    for (int s = 0; s < 20 && n > 1; ++s) {
        auto a = pick(rng), b = pick(rng);
        if (a == b) continue;
        const long c = k(rng);
        for (std::size_t j = 0; j < n; ++j) u[a][j] += c * u[b][j];
    }
    return u;
}

// rank of the K-perp coordinate matrix over F_p (p > 0) or Q (p = 0)
std::size_t rank_mod(const std::vector<std::vector<std::int64_t>>& rows, long p) {
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : rows) {
        m.emplace_back();
        for (auto v : r) m.back().emplace_back(p ? ((v % p) + p) % p : v);
    }
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            if (p) {
                // multiply by the inverse of the pivot mod p
                mpz_class inv;
                mpz_class pivot = m[rank][c].get_num(), mod = p;
                mpz_invert(inv.get_mpz_t(), pivot.get_mpz_t(), mod.get_mpz_t());
                mpz_class f = (m[i][c].get_num() * inv) % p;
                for (std::size_t j = 0; j < cols; ++j) {
                    mpz_class v = (m[i][j].get_num() - f * m[rank][j].get_num()) % p;
                    if (v < 0) v += p;
                    m[i][j] = v;
                }
            } else {
                const mpq_class f = m[i][c] / m[rank][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::int64_t> factors(std::size_t r, std::size_t idx) { return torsion(builtin(r, idx)).invariant_factors; }

}  // namespace

TEST_CASE("Smith normal form examples") {
    auto id = smith_normal_form(ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id.diagonal == std::vector<mpz_class>{1, 1, 1});
    std::mt19937_64 rng(1);
    auto scrambled = multiply(multiply(random_unimodular(rng, 2), ints({{2, 0}, {0, 4}})), random_unimodular(rng, 2));
    CHECK(smith_normal_form(scrambled).diagonal == std::vector<mpz_class>{2, 4});
    CHECK(smith_normal_form(ints({{2, 0}, {0, 3}})).diagonal == std::vector<mpz_class>{1, 6});
    CHECK(smith_normal_form(ints({{0, 0}, {0, 0}})).diagonal.empty());
}

TEST_CASE("property: U M V is the diagonal form with a divisibility chain") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> v(-9, 9);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int it = 0; it < 200; ++it) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        IntMatrix m(rows, std::vector<mpz_class>(cols));
        for (auto& row : m)
            for (auto& x : row) x = v(rng);
        auto s = smith_normal_form(m);
        CHECK(multiply(multiply(s.u, m), s.v) == s.diagonal_form);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.diagonal_form[i][j] == 0);
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        for (const auto& d : s.diagonal) CHECK(d > 0);
        // invariant under unimodular change of basis
        auto moved = multiply(multiply(random_unimodular(rng, rows), m), random_unimodular(rng, cols));
        CHECK(smith_normal_form(moved).diagonal == s.diagonal);
    }
}

TEST_CASE("orthogonal complement of K") {
    for (std::size_t r = 3; r <= 8; ++r) {
        const auto basis = kperp_basis(r);
        CHECK(basis.size() == r);
        for (const auto& b : basis) CHECK(intersect(b, canonical_class(r)) == 0);
        std::mt19937_64 rng(r);
        std::uniform_int_distribution<std::int64_t> v(-5, 5);
        for (int it = 0; it < 50; ++it) {
            DivisorClass c = DivisorClass::zero(r);
            std::vector<std::int64_t> coeff(r);
            for (std::size_t j = 0; j < r; ++j) coeff[j] = v(rng), c += coeff[j] * basis[j];
            CHECK(in_kperp(c));
            CHECK(kperp_coordinates(c) == coeff);
            CHECK(coordinates_in_basis(c, basis) == coeff);
        }
    }
    CHECK_THROWS_AS(kperp_coordinates(DivisorClass::line(8)), InputError);
}

TEST_CASE("torsion of eight-point types") {
    CHECK(factors(8, 32) == std::vector<std::int64_t>{3, 3});
    CHECK(factors(8, 30) == std::vector<std::int64_t>{2, 2, 2});
    CHECK(factors(8, 27) == std::vector<std::int64_t>{3});
    CHECK(factors(8, 28) == std::vector<std::int64_t>{3});
    auto empty = torsion(builtin(8, 1));
    CHECK(empty.invariant_factors.empty());
    CHECK(empty.free_rank == 8);
    CHECK(empty.to_string() == "0");
}

TEST_CASE("torsion p-ranks agree with ranks over F_p") {
    // number of invariant factors divisible by p equals rank over Q minus rank over F_p
    for (std::size_t idx = 1; idx <= 146; ++idx) {
        const auto& cls = builtin(8, idx).classes();
        if (!std::all_of(cls.begin(), cls.end(), [](const DivisorClass& c) { return in_kperp(c); })) continue;
        std::vector<std::vector<std::int64_t>> rows;
        for (const auto& c : cls) rows.push_back(kperp_coordinates(c));
        const auto g = torsion(builtin(8, idx));
        CHECK(g.free_rank == 8 - rank_mod(rows, 0));
        for (long p : {2, 3, 5, 7}) {
            const auto divisible = std::count_if(g.invariant_factors.begin(), g.invariant_factors.end(),
                                                 [&](std::int64_t f) { return f % p == 0; });
            CAPTURE(idx);
            CAPTURE(p);
            CHECK(static_cast<std::size_t>(divisible) == rank_mod(rows, 0) - rank_mod(rows, p));
        }
    }
}

TEST_CASE("computed torsion of the first 32 eight-point types") {
    std::map<std::size_t, std::vector<std::int64_t>> nonzero{
        {11, {2}}, {16, {2}}, {19, {2}}, {24, {2}}, {25, {2}}, {29, {2}}, {23, {2, 2}},
        {31, {2, 2}}, {30, {2, 2, 2}}, {27, {3}}, {28, {3}}, {32, {3, 3}}};
    for (std::size_t idx = 1; idx <= 32; ++idx) {
        CAPTURE(idx);
        CHECK(factors(8, idx) == (nonzero.count(idx) ? nonzero[idx] : std::vector<std::int64_t>{}));
    }
}

TEST_CASE("property: torsion does not depend on the lattice basis") {
    std::mt19937_64 rng(12);
    for (std::size_t idx = 1; idx <= 146; ++idx) {
        const auto& cls = builtin(8, idx).classes();
        if (!std::all_of(cls.begin(), cls.end(), [](const DivisorClass& c) { return in_kperp(c); })) {
            CHECK_THROWS_AS(torsion(builtin(8, idx)), InputError);
            continue;
        }
        auto u = random_unimodular(rng, 8);
        const auto basis = kperp_basis(8);
        std::vector<DivisorClass> other;
        for (std::size_t i = 0; i < 8; ++i) {
            DivisorClass c = DivisorClass::zero(8);
            for (std::size_t j = 0; j < 8; ++j) c += u[i][j].get_si() * basis[j];
            other.push_back(c);
        }
        CHECK(torsion_in_basis(builtin(8, idx), other) == torsion(builtin(8, idx)));
    }
}

TEST_CASE("representability verdicts") {
    CHECK(representability(8, 96).to_string() == "never");
    CHECK(representability(8, 46).to_string() == "only_char(2)");
    CHECK(representability(7, 5).to_string() == "always");
    CHECK(representability(7, 23).to_string() == "except_char(2)");
    CHECK(representability(8, 46).allows_characteristic(2));
    CHECK_FALSE(representability(8, 46).allows_characteristic(0));
    CHECK_FALSE(representability(7, 23).allows_characteristic(2));
    CHECK_THROWS_AS(representability(8, 147), LookupError);
    std::size_t never = 0;
    for (std::size_t i = 1; i <= 146; ++i) never += representability(8, i).verdict == Verdict::never;
    CHECK(never == 3);
}
