#include "fatpoint/geometry.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <json.hpp>

#include "fatpoint/error.hpp"
#include "fatpoint/field.hpp"

namespace fatpoint {

namespace {

struct QOps {
    using E = mpq_class;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E mul(const E& a, const E& b) const { return a * b; }
    E div(const E& a, const E& b) const { return a / b; }
    bool is_zero(const E& a) const { return a == 0; }
    E from(const mpq_class& v) const { return v; }
    mpq_class to_q(const E& a) const { return a; }
};

struct FOps {
    const FiniteField* f;
    using E = std::uint32_t;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const { return f->add(a, b); }
    E sub(E a, E b) const { return f->sub(a, b); }
    E mul(E a, E b) const { return f->mul(a, b); }
    E div(E a, E b) const { return f->div(a, b); }
    bool is_zero(E a) const { return a == 0; }
    E from(const mpq_class& v) const { return static_cast<E>(v.get_num().get_ui()); }
    mpq_class to_q(E a) const { return mpq_class(static_cast<unsigned long>(a)); }
};

template <class Fn>
decltype(auto) with_ops(const ExactField& f, Fn&& fn) {
    if (f.kind == ExactField::Kind::rationals) return fn(QOps{});
    return fn(FOps{&finite_field(f.p, f.k)});
}

template <class Ops>
std::size_t rank(const Ops& ops, std::vector<std::vector<typename Ops::E>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && ops.is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        for (std::size_t i = rk + 1; i < rows.size(); ++i) {
            if (ops.is_zero(rows[i][c])) continue;
            const auto factor = ops.div(rows[i][c], rows[rk][c]);
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = ops.sub(rows[i][j], ops.mul(factor, rows[rk][j]));
        }
        ++rk;
    }
    return rk;
}

template <class Ops>
typename Ops::E det3(const Ops& ops, const std::array<typename Ops::E, 3>& a, const std::array<typename Ops::E, 3>& b,
                     const std::array<typename Ops::E, 3>& c) {
    auto minor = [&](const auto& x0, const auto& x1, const auto& y0, const auto& y1) {
        return ops.sub(ops.mul(x0, y1), ops.mul(x1, y0));
    };
    auto t0 = ops.mul(a[0], minor(b[1], b[2], c[1], c[2]));
    auto t1 = ops.mul(a[1], minor(b[0], b[2], c[0], c[2]));
    auto t2 = ops.mul(a[2], minor(b[0], b[1], c[0], c[1]));
    return ops.add(ops.sub(t0, t1), t2);
}

template <class Ops>
std::array<typename Ops::E, 3> lift(const Ops& ops, const Point& p) {
    return {ops.from(p[0]), ops.from(p[1]), ops.from(p[2])};
}


mpq_class parse_coordinate(const ExactField& f, const std::string& text) {
    try {
        if (f.kind == ExactField::Kind::rationals) {
            mpq_class v(text, 10);
            v.canonicalize();
            if (v.get_den() == 0) throw InputError("zero denominator");
            return v;
        }
        mpz_class v(text, 10);
        const auto& ff = finite_field(f.p, f.k);
        if (f.kind == ExactField::Kind::prime_field) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.p);
            return mpq_class(r);
        }
        if (v < 0 || !ff.contains(v.get_ui()) || !v.fits_ulong_p())
            throw InputError("coordinate " + text + " is not an element of " + ff.name());
        return mpq_class(v);
    } catch (const std::invalid_argument&) {
        throw InputError("bad coordinate '" + text + "'");
    }
}

}  // namespace

ExactField ExactField::prime(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 31)) throw InputError("field characteristic must be a prime below 2^31");
    return {Kind::prime_field, p, 1};
}

ExactField ExactField::galois(std::uint32_t p, unsigned k) {
    if (k == 1) return prime(p);
    finite_field(p, k);  // validates
    return {Kind::extension_field, p, k};
}

std::string ExactField::name() const {
    if (kind == Kind::rationals) return "Q";
    return finite_field(p, k).name();
}

bool same_point(const ExactField& f, const Point& a, const Point& b) {
    return with_ops(f, [&](const auto& ops) {
        auto x = lift(ops, a), y = lift(ops, b);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!ops.is_zero(ops.sub(ops.mul(x[i], y[j]), ops.mul(x[j], y[i])))) return false;
        return true;
    });
}

bool collinear(const ExactField& f, const Point& a, const Point& b, const Point& c) {
    return with_ops(f, [&](const auto& ops) { return ops.is_zero(det3(ops, lift(ops, a), lift(ops, b), lift(ops, c))); });
}

PointSet::PointSet(ExactField field, std::vector<Point> points) : field_(field), points_(std::move(points)) {
    for (auto& p : points_) {
        bool nonzero = false;
        for (auto& x : p) {
            x.canonicalize();
            if (field_.is_finite()) {
                const auto& ff = finite_field(field_.p, field_.k);
                if (x.get_den() != 1 || x < 0 || !x.get_num().fits_ulong_p() || !ff.contains(x.get_num().get_ui()))
                    throw InputError("coordinate " + x.get_str() + " is not an element of " + ff.name());
            }
            nonzero = nonzero || x != 0;
        }
        if (!nonzero) throw InputError("(0:0:0) is not a point");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (same_point(field_, points_[i], points_[j]))
                throw InputError("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
    std::vector<Point> out;
    for (auto i : indices) out.push_back(points_.at(i));
    return PointSet(field_, std::move(out));
}

PointSet PointSet::transformed(const std::array<std::array<mpq_class, 3>, 3>& m) const {
    return with_ops(field_, [&](const auto& ops) {
        using E = typename std::decay_t<decltype(ops)>::E;
        std::array<std::array<E, 3>, 3> a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                mpq_class v = m[i][j];
                if (field_.is_finite()) {
                    if (v.get_den() != 1) throw InputError("matrix entries must be field elements");
                    v = parse_coordinate(field_, v.get_num().get_str());
                }
                a[i][j] = ops.from(v);
            }
        std::array<E, 3> c0{a[0][0], a[1][0], a[2][0]}, c1{a[0][1], a[1][1], a[2][1]}, c2{a[0][2], a[1][2], a[2][2]};
        if (ops.is_zero(det3(ops, c0, c1, c2))) throw InputError("singular projectivity");
        std::vector<Point> out;
        for (const auto& p : points_) {
            auto x = lift(ops, p);
            Point y;
            for (int i = 0; i < 3; ++i) {
                E s = ops.zero();
                for (int j = 0; j < 3; ++j) s = ops.add(s, ops.mul(a[i][j], x[j]));
                y[i] = ops.to_q(s);
            }
            out.push_back(y);
        }
        return PointSet(field_, std::move(out));
    });
}

namespace {

using Monomial = std::array<std::int64_t, 3>;

std::vector<Monomial> monomials_of_degree(std::int64_t d) {
    std::vector<Monomial> out;
    for (std::int64_t a = d; a >= 0; --a)
        for (std::int64_t b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

std::size_t monomial_index(const Monomial& e, std::int64_t d) {
    // position in monomials_of_degree(d)
    const std::int64_t a = e[0], b = e[1];
    const std::int64_t before = (d - a) * (d - a + 1) / 2;
    return static_cast<std::size_t>(before + (d - a - b));
}

template <class Ops>
std::vector<std::vector<typename Ops::E>> condition_rows(const Ops& ops, const PointSet& pts,
                                                         const std::vector<std::int64_t>& mults, std::int64_t d) {
    using E = typename Ops::E;
    const auto monomials = monomials_of_degree(d);
    // binomials in the field via Pascal's rule
    std::vector<std::vector<E>> binom(d + 1);
    for (std::int64_t n = 0; n <= d; ++n) {
        binom[n].assign(n + 1, ops.one());
        for (std::int64_t k = 1; k < n; ++k) binom[n][k] = ops.add(binom[n - 1][k - 1], binom[n - 1][k]);
    }
    std::vector<std::vector<E>> rows;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::int64_t m = std::min(std::max<std::int64_t>(mults[i], 0), d + 1);
        if (m == 0) continue;
        auto p = lift(ops, pts[i]);
        int j = 2;
        while (ops.is_zero(p[j])) --j;
        const int u0 = j == 0 ? 1 : 0, u1 = j == 2 ? 1 : 2;
        std::array<std::vector<E>, 3> pw;
        for (int c = 0; c < 3; ++c) {
            pw[c].assign(d + 1, ops.one());
            for (std::int64_t e = 1; e <= d; ++e) pw[c][e] = ops.mul(pw[c][e - 1], p[c]);
        }
        // coefficient of x^s y^t after X_u0 = x + p_u0, X_u1 = y + p_u1, X_j = p_j
        for (std::int64_t s = 0; s < m; ++s)
            for (std::int64_t t = 0; s + t < m; ++t) {
                std::vector<E> row(monomials.size(), ops.zero());
                bool any = false;
                for (std::size_t c = 0; c < monomials.size(); ++c) {
                    const auto& e = monomials[c];
                    const auto a = e[u0], b = e[u1];
                    if (s > a || t > b) continue;
                    E v = ops.mul(binom[a][s], pw[u0][a - s]);
                    v = ops.mul(v, ops.mul(binom[b][t], pw[u1][b - t]));
                    v = ops.mul(v, pw[j][e[j]]);
                    if (!ops.is_zero(v)) any = true;
                    row[c] = std::move(v);
                }
                if (any) rows.push_back(std::move(row));
            }
    }
    return rows;
}

// basis of the solution space of rows * x = 0
template <class Ops>
std::vector<std::vector<typename Ops::E>> kernel(const Ops& ops, std::vector<std::vector<typename Ops::E>> rows,
                                                 std::size_t cols) {
    using E = typename Ops::E;
    std::vector<std::size_t> pivots;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t piv = rk;
        while (piv < rows.size() && ops.is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rk], rows[piv]);
        const E lead = rows[rk][c];
        for (auto& x : rows[rk]) x = ops.div(x, lead);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rk || ops.is_zero(rows[i][c])) continue;
            const E factor = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = ops.sub(rows[i][j], ops.mul(factor, rows[rk][j]));
        }
        pivots.push_back(c);
        ++rk;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<E>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<E> v(cols, ops.zero());
        v[f] = ops.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = ops.sub(ops.zero(), rows[i][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::int64_t linear_system_dim(const PointSet& pts, const std::vector<std::int64_t>& mults, std::int64_t d) {
    if (mults.size() != pts.size())
        throw DimensionError("expected " + std::to_string(pts.size()) + " multiplicities, got " + std::to_string(mults.size()));
    if (d < 0) return 0;
    return with_ops(pts.field(), [&](const auto& ops) -> std::int64_t {
        auto rows = condition_rows(ops, pts, mults, d);
        return forms_of_degree(d) - static_cast<std::int64_t>(rank(ops, rows));
    });
}

std::vector<std::vector<mpq_class>> linear_system_basis(const PointSet& pts, const std::vector<std::int64_t>& mults,
                                                        std::int64_t d) {
    if (mults.size() != pts.size())
        throw DimensionError("expected " + std::to_string(pts.size()) + " multiplicities, got " + std::to_string(mults.size()));
    if (d < 0) return {};
    return with_ops(pts.field(), [&](const auto& ops) {
        auto basis = kernel(ops, condition_rows(ops, pts, mults, d), static_cast<std::size_t>(forms_of_degree(d)));
        std::vector<std::vector<mpq_class>> out;
        for (const auto& v : basis) {
            std::vector<mpq_class> row;
            for (const auto& x : v) row.push_back(ops.to_q(x));
            out.push_back(std::move(row));
        }
        return out;
    });
}

bool form_vanishes(const ExactField& f, const std::vector<mpq_class>& coeffs, std::int64_t d, const Point& p) {
    const auto mons = monomials_of_degree(d);
    if (coeffs.size() != mons.size()) throw DimensionError("coefficient count does not match the degree");
    return with_ops(f, [&](const auto& ops) {
        auto x = lift(ops, p);
        using E = typename std::decay_t<decltype(ops)>::E;
        std::array<std::vector<E>, 3> pw;
        for (int c = 0; c < 3; ++c) {
            pw[c].assign(d + 1, ops.one());
            for (std::int64_t e = 1; e <= d; ++e) pw[c][e] = ops.mul(pw[c][e - 1], x[c]);
        }
        E sum = ops.zero();
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (coeffs[i] == 0) continue;
            const auto& e = mons[i];
            sum = ops.add(sum, ops.mul(ops.from(coeffs[i]), ops.mul(pw[0][e[0]], ops.mul(pw[1][e[1]], pw[2][e[2]]))));
        }
        return ops.is_zero(sum);
    });
}

std::int64_t generators_in_degree(const PointSet& pts, const std::vector<std::int64_t>& mults, std::int64_t d) {
    if (mults.size() != pts.size())
        throw DimensionError("expected " + std::to_string(pts.size()) + " multiplicities, got " + std::to_string(mults.size()));
    if (d < 0) return 0;
    return with_ops(pts.field(), [&](const auto& ops) -> std::int64_t {
        using E = typename std::decay_t<decltype(ops)>::E;
        const std::int64_t dim_d = linear_system_dim(pts, mults, d);
        if (d == 0) return dim_d;
        const auto prev = kernel(ops, condition_rows(ops, pts, mults, d - 1), static_cast<std::size_t>(forms_of_degree(d - 1)));
        const auto mons = monomials_of_degree(d - 1);
        std::vector<std::vector<E>> image;
        for (const auto& f : prev)
            for (int var = 0; var < 3; ++var) {
                std::vector<E> g(static_cast<std::size_t>(forms_of_degree(d)), ops.zero());
                for (std::size_t c = 0; c < mons.size(); ++c) {
                    if (ops.is_zero(f[c])) continue;
                    auto e = mons[c];
                    ++e[var];
                    g[monomial_index(e, d)] = f[c];
                }
                image.push_back(std::move(g));
            }
        return dim_d - static_cast<std::int64_t>(rank(ops, image));
    });
}

BettiNumbers betti_oracle(const PointSet& pts, const std::vector<std::int64_t>& mults) {
    const auto rep = hilbert_oracle(pts, mults);
    BettiNumbers out;
    const std::int64_t tau = rep.saturation;
    for (std::int64_t t = 1; t <= tau + 1; ++t)
        if (auto g = generators_in_degree(pts, mults, t)) out.f0[t] = g;
    for (std::int64_t i = 1; i <= tau + 3; ++i) {
        const std::int64_t d3 = rep.at(i) - 3 * rep.at(i - 1) + 3 * rep.at(i - 2) - rep.at(i - 3);
        auto it = out.f0.find(i);
        const std::int64_t s = (it == out.f0.end() ? 0 : it->second) + d3;
        if (s < 0) throw InvariantError("negative syzygy count from oracle data");
        if (s) out.f1[i] = s;
    }
    return out;
}

ConfigurationType detect_neg(const PointSet& pts) {
    const std::size_t r = pts.size();
    if (r < 1 || r > 8) throw UnsupportedError("type detection needs 1 <= r <= 8 points");
    const auto& f = pts.field();
    auto mask_mults = [&](unsigned mask, std::int64_t value) {
        std::vector<std::int64_t> m(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1u) m[i] = value;
        return m;
    };

    // full point sets of lines through at least two of the points
    std::set<unsigned> line_masks;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            unsigned mask = (1u << i) | (1u << j);
            for (std::size_t k = 0; k < r; ++k)
                if (k != i && k != j && collinear(f, pts[i], pts[j], pts[k])) mask |= 1u << k;
            line_masks.insert(mask);
        }

    std::vector<DivisorClass> classes;
    for (unsigned mask : line_masks)
        if (std::popcount(mask) >= 3) classes.emplace_back(1, mask_mults(mask, 1));

    std::vector<unsigned> conic_sets;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (std::popcount(mask) < 6) continue;
        bool three_on_line = false;
        for (unsigned lm : line_masks) three_on_line = three_on_line || std::popcount(lm & mask) >= 3;
        if (three_on_line) continue;
        if (linear_system_dim(pts, mask_mults(mask, 1), 2) >= 1) conic_sets.push_back(mask);
    }
    for (unsigned mask : conic_sets) {
        bool maximal = true;
        for (unsigned other : conic_sets) maximal = maximal && !(other != mask && (other & mask) == mask);
        if (maximal) classes.emplace_back(2, mask_mults(mask, 1));
    }

    if (r == 8) {
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<std::int64_t> m(r, 1);
            m[k] = 2;
            if (linear_system_dim(pts, m, 3) != 1) continue;
            bool reducible = false;
            for (std::size_t i = 0; i < r && !reducible; ++i) {
                auto b = m;
                ++b[i];
                reducible = linear_system_dim(pts, b, 3) >= 1;
            }
            std::vector<unsigned> line_supports(line_masks.begin(), line_masks.end());
            line_supports.push_back(0);
            for (std::size_t i = 0; i < r; ++i) line_supports.push_back(1u << i);
            for (unsigned t : line_supports) {
                if (reducible) break;
                auto b = m;
                for (std::size_t i = 0; i < r; ++i)
                    if (t >> i & 1u) b[i] = std::max<std::int64_t>(0, b[i] - 1);
                reducible = linear_system_dim(pts, b, 2) >= 1;
            }
            if (!reducible) classes.emplace_back(3, m);
        }
    }
    return validate(std::move(classes), r, Mode::eight_points);
}

Identification identify_type(const PointSet& pts) {
    Identification out;
    out.detected = detect_neg(pts);
    const std::size_t r = pts.size();
    auto idx = lookup_index(r, out.detected.canonical_key());
    if (!idx) throw InvariantError("detected configuration {" + out.detected.notation() + "} is not an enumerated type");
    out.type = {r, *idx};
    const auto& stored = builtin(r, *idx);
    auto cs = canonical_form(out.detected.classes(), r);
    auto cb = canonical_form(stored.classes(), r);
    std::vector<std::size_t> inverse_b(r);
    for (std::size_t i = 0; i < r; ++i) inverse_b[cb.labels[i]] = i;
    out.permutation.resize(r);
    for (std::size_t i = 0; i < r; ++i) out.permutation[i] = inverse_b[cs.labels[i]];
    auto image = relabel(out.detected.classes(), out.permutation);
    std::sort(image.begin(), image.end());
    if (image != stored.classes()) throw InvariantError("relabeling does not map the detected type onto the stored one");
    return out;
}

HilbertReport hilbert_oracle(const PointSet& pts, const std::vector<std::int64_t>& mults) {
    if (mults.size() != pts.size())
        throw DimensionError("expected " + std::to_string(pts.size()) + " multiplicities, got " + std::to_string(mults.size()));
    HilbertReport out;
    out.mults = mults;
    for (auto m : mults) {
        if (m < 0) throw InputError("multiplicities must be nonnegative");
        out.degree += m * (m + 1) / 2;
    }
    for (std::int64_t t = 0;; ++t) {
        const std::int64_t h = forms_of_degree(t) - linear_system_dim(pts, mults, t);
        out.values.push_back(h);
        if (h == out.degree) break;
        if (t > out.degree + 2) throw InvariantError("oracle Hilbert function failed to reach the degree");
    }
    out.saturation = static_cast<std::int64_t>(out.values.size()) - 1;
    out.delta = first_differences(out.values);
    return out;
}

namespace {

PointSet point_set_from_json(const nlohmann::json& j) {
    try {
        ExactField field;
        const auto& jf = j.at("field");
        const std::string kind = jf.at("kind").get<std::string>();
        if (kind == "Q") {
            field = ExactField::rationals();
        } else if (kind == "Fp") {
            field = ExactField::prime(jf.at("p").get<std::uint32_t>());
        } else if (kind == "GF") {
            field = ExactField::galois(jf.at("p").get<std::uint32_t>(), jf.value("k", 1u));
        } else {
            throw InputError("unknown field kind '" + kind + "'");
        }
        std::vector<Point> points;
        for (const auto& jp : j.at("points")) {
            if (!jp.is_array() || jp.size() != 3) throw InputError("each point needs three coordinates");
            Point p;
            for (int i = 0; i < 3; ++i)
                p[i] = parse_coordinate(field, jp[i].is_string() ? jp[i].get<std::string>() : jp[i].dump());
            points.push_back(p);
        }
        return PointSet(field, std::move(points));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed point file: ") + e.what());
    }
}

nlohmann::json point_set_to_json(const PointSet& pts) {
    nlohmann::json j;
    const auto& f = pts.field();
    if (f.kind == ExactField::Kind::rationals) {
        j["field"] = {{"kind", "Q"}};
    } else if (f.kind == ExactField::Kind::prime_field) {
        j["field"] = {{"kind", "Fp"}, {"p", f.p}};
    } else {
        j["field"] = {{"kind", "GF"}, {"k", f.k}, {"p", f.p}};
    }
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts.points()) j["points"].push_back({p[0].get_str(), p[1].get_str(), p[2].get_str()});
    return j;
}

nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

}  // namespace

PointSet parse_point_file(const std::string& json_text) { return point_set_from_json(parse_json(json_text, "point file")); }

std::string to_point_file(const PointSet& pts) { return point_set_to_json(pts).dump(); }

std::vector<Witness> parse_witness_file(const std::string& json_text) {
    const auto j = parse_json(json_text, "witness file");
    std::vector<Witness> out;
    try {
        for (const auto& w : j.at("witnesses")) {
            TableRef ref{w.at("r").get<std::size_t>(), w.at("type").get<std::size_t>()};
            out.push_back({ref, point_set_from_json(w)});
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed witness file: ") + e.what());
    }
    return out;
}

std::string to_witness_file(const std::vector<Witness>& witnesses) {
    // one witness per line
    std::string out = "{\"witnesses\": [\n";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        auto e = point_set_to_json(witnesses[i].points);
        e["r"] = witnesses[i].type.r;
        e["type"] = witnesses[i].type.index;
        out += e.dump() + (i + 1 < witnesses.size() ? ",\n" : "\n");
    }
    return out + "]}\n";
}

}  // namespace fatpoint
