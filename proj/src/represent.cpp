#include "fatpoint/represent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fatpoint/error.hpp"

namespace fatpoint {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix id(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

void add_row(IntMatrix& a, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += q * a[src][j];
}

void add_col(IntMatrix& a, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (auto& row : a) row[dst] += q * row[src];
}

void swap_cols(IntMatrix& a, std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw DimensionError("matrix shapes do not match");
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
    return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != cols) throw DimensionError("ragged matrix");
    IntMatrix a = m;
    IntMatrix u = identity(rows);
    IntMatrix v = identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry of the trailing block goes to the pivot
        auto bring_min = [&](bool whole_block) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (!whole_block && i != t && j != t) continue;
                    if (a[i][j] == 0) continue;
                    if (bi == rows || abs(a[i][j]) < abs(a[bi][bj])) bi = i, bj = j;
                }
            if (bi == rows) return false;
            std::swap(a[t], a[bi]);
            std::swap(u[t], u[bi]);
            swap_cols(a, t, bj);
            swap_cols(v, t, bj);
            return true;
        };
        if (!bring_min(true)) break;
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                add_row(a, i, t, -q);
                add_row(u, i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                add_col(a, j, t, -q);
                add_col(v, j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                bring_min(false);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t()) == 0) {
                        add_row(a, t, i, 1);
                        add_row(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }
    }
    SmithResult out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
        if (a[t][t] != 0) out.diagonal.push_back(a[t][t]);
    out.diagonal_form = std::move(a);
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

std::int64_t FinAbGroup::torsion_order() const {
    std::int64_t n = 1;
    for (auto d : invariant_factors) n *= d;
    return n;
}

std::string FinAbGroup::to_string() const {
    std::ostringstream os;
    if (invariant_factors.empty()) os << "0";
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) os << (i ? " + " : "") << "Z/" << invariant_factors[i];
    return os.str();
}

std::vector<DivisorClass> kperp_basis(std::size_t r) {
    if (r < 3) throw UnsupportedError("the fixed K-perp basis needs r >= 3");
    std::vector<DivisorClass> basis;
    for (std::size_t j = 0; j + 1 < r; ++j) {
        std::vector<std::int64_t> m(r, 0);
        m[j] = -1;
        m[j + 1] = 1;
        basis.emplace_back(0, std::move(m));
    }
    std::vector<std::int64_t> m(r, 0);
    m[0] = m[1] = m[2] = 1;
    basis.emplace_back(1, std::move(m));
    return basis;
}

bool in_kperp(const DivisorClass& c) { return intersect(c, canonical_class(c.points())) == 0; }

std::vector<std::int64_t> kperp_coordinates(const DivisorClass& c) {
    const std::size_t r = c.points();
    if (!in_kperp(c)) throw InputError("type not anticanonical-orthogonal: " + c.to_string());
    if (r < 3) throw UnsupportedError("the fixed K-perp basis needs r >= 3");
    const std::int64_t a = c.degree();
    std::vector<std::int64_t> coords(r);
    std::int64_t prev = 0;
    for (std::size_t j = 0; j + 1 < r; ++j) {
        prev = prev + (j < 3 ? a : 0) - c.mult(j);
        coords[j] = prev;
    }
    // coefficient of E_r must come out as -m_r
    if (-prev - (r <= 3 ? a : 0) != -c.mult(r - 1)) throw InvariantError("K-perp coordinates inconsistent");
    coords[r - 1] = a;
    return coords;
}

std::vector<std::int64_t> coordinates_in_basis(const DivisorClass& c, const std::vector<DivisorClass>& basis) {
    if (!in_kperp(c)) throw InputError("type not anticanonical-orthogonal: " + c.to_string());
    const std::size_t r = c.points();
    // solve coords * B = c with B the basis rows in Z^{r+1}
    IntMatrix b;
    for (const auto& e : basis) {
        std::vector<mpz_class> row{mpz_class(static_cast<long>(e.degree()))};
        for (auto x : e.mults()) row.emplace_back(static_cast<long>(x));
        b.push_back(std::move(row));
    }
    auto snf = smith_normal_form(b);  // U B V = D
    std::vector<mpz_class> cv{mpz_class(static_cast<long>(c.degree()))};
    for (auto x : c.mults()) cv.emplace_back(static_cast<long>(x));
    std::vector<mpz_class> w(r + 1, 0);  // c V
    for (std::size_t j = 0; j <= r; ++j)
        for (std::size_t l = 0; l <= r; ++l) w[j] += cv[l] * snf.v[l][j];
    std::vector<mpz_class> y(basis.size(), 0);
    for (std::size_t i = 0; i <= r; ++i) {
        if (i < snf.diagonal.size()) {
            if (!mpz_divisible_p(w[i].get_mpz_t(), snf.diagonal[i].get_mpz_t()))
                throw InputError("class is not in the span of the basis");
            y[i] = w[i] / snf.diagonal[i];
        } else if (w[i] != 0) {
            throw InputError("class is not in the span of the basis");
        }
    }
    std::vector<std::int64_t> coords(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) s += y[i] * snf.u[i][j];
        coords[j] = s.get_si();
    }
    return coords;
}

namespace {

FinAbGroup group_from_rows(const IntMatrix& rows, std::size_t rank_of_lattice) {
    FinAbGroup g;
    if (rows.empty()) {
        g.free_rank = rank_of_lattice;
        return g;
    }
    auto snf = smith_normal_form(rows);
    g.free_rank = rank_of_lattice - snf.diagonal.size();
    for (const auto& d : snf.diagonal)
        if (d > 1) g.invariant_factors.push_back(d.get_si());
    return g;
}

}  // namespace

FinAbGroup torsion(const ConfigurationType& type) {
    IntMatrix rows;
    for (const auto& c : type.classes()) {
        auto coords = kperp_coordinates(c);
        rows.emplace_back(coords.begin(), coords.end());
    }
    return group_from_rows(rows, type.r());
}

FinAbGroup torsion_in_basis(const ConfigurationType& type, const std::vector<DivisorClass>& basis) {
    if (basis.size() != type.r()) throw DimensionError("a K-perp basis has r elements");
    IntMatrix rows;
    for (const auto& c : type.classes()) {
        auto coords = coordinates_in_basis(c, basis);
        rows.emplace_back(coords.begin(), coords.end());
    }
    return group_from_rows(rows, type.r());
}

std::string RepresentabilityVerdict::to_string() const {
    switch (verdict) {
        case Verdict::always: return "always";
        case Verdict::never: return "never";
        case Verdict::only_char: return "only_char(" + std::to_string(p) + ")";
        case Verdict::except_char: return "except_char(" + std::to_string(p) + ")";
    }
    return "?";
}

bool RepresentabilityVerdict::allows_characteristic(std::uint64_t ch) const {
    switch (verdict) {
        case Verdict::always: return true;
        case Verdict::never: return false;
        case Verdict::only_char: return ch == static_cast<std::uint64_t>(p);
        case Verdict::except_char: return ch != static_cast<std::uint64_t>(p);
    }
    return false;
}

RepresentabilityVerdict representability(std::size_t r, std::size_t index) {
    if (index < 1 || index > builtin_count(r))
        throw LookupError("no type " + std::to_string(index) + " for r = " + std::to_string(r));
    RepresentabilityVerdict v;
    v.type = {r, index};
    if (r <= 6) {
        v.source = "every formal type on at most six points is representable";
        return v;
    }
    if (r == 7) {
        v.source = "seven-point representability classification";
        if (index == 23) v.verdict = Verdict::except_char, v.p = 2;
        if (index == 24) v.verdict = Verdict::only_char, v.p = 2;
        return v;
    }
    v.source = "eight-point representability classification";
    static const std::set<std::size_t> except2{23, 31, 44, 90, 112, 128, 131};
    static const std::set<std::size_t> only2{46, 130};
    static const std::set<std::size_t> never{30, 45, 96};
    if (except2.count(index)) v.verdict = Verdict::except_char, v.p = 2;
    if (only2.count(index)) v.verdict = Verdict::only_char, v.p = 2;
    if (never.count(index)) v.verdict = Verdict::never;
    return v;
}

}  // namespace fatpoint
