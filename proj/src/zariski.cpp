#include "fatpoint/zariski.hpp"

#include <numeric>

#include "fatpoint/error.hpp"

namespace fatpoint {

DivisorClass ZariskiResult::fixed_sum() const {
    DivisorClass s = DivisorClass::zero(input.points());
    for (const auto& [c, k] : fixed_part) s += k * c;
    return s;
}

ZariskiResult small_r_rules(const DivisorClass& f) {
    const std::size_t r = f.points();
    if (r > 1) throw UnsupportedError("small-r rules apply only to r <= 1");
    ZariskiResult out;
    out.input = f;
    const std::int64_t t = f.degree();
    const std::int64_t m = r == 1 ? f.mult(0) : 0;
    if (t < 0 || t < m) {
        out.nef_part = f;
        return out;
    }
    out.effective = true;
    if (r == 1 && m < 0) {
        // tL + |m|E_1: the exceptional curve is fixed
        out.nef_part = DivisorClass(t, {0});
        out.fixed_part.emplace_back(DivisorClass::exceptional(1, 0), -m);
    } else {
        out.nef_part = f;
    }
    out.h0 = riemann_roch_value(out.nef_part);
    return out;
}

ZariskiResult decompose(const DivisorClass& f, const NegSet& neg, const DecomposeOptions& opts) {
    if (f.points() != neg.r()) throw DimensionError("class and NegSet have different point counts");
    if (f.points() <= 1) return small_r_rules(f);

    const std::size_t n = neg.size();
    std::vector<std::size_t> natural;
    const std::vector<std::size_t>* order = opts.order;
    if (!order) {
        natural.resize(n);
        std::iota(natural.begin(), natural.end(), 0);
        order = &natural;
    }
    if (order->size() != n) throw InputError("ordering does not cover the NegSet");

    ZariskiResult out;
    out.input = f;
    DivisorClass h = f;
    std::vector<std::int64_t> pairing(n);
    for (std::size_t i = 0; i < n; ++i) pairing[i] = intersect(h, neg.classes()[i]);
    std::vector<std::int64_t> count(n, 0);
    std::int64_t potential = intersect(h, neg.ample());

    while (true) {
        if (opts.trace) out.potentials.push_back(potential);
        if (h.is_zero()) {
            out.effective = true;
            out.h0 = 1;
            break;
        }
        if (potential <= 0) {
            out.effective = false;
            break;
        }
        std::size_t pick = n;
        for (auto i : *order)
            if (pairing[i] < 0) {
                pick = i;
                break;
            }
        if (pick == n) {
            out.effective = true;
            out.h0 = riemann_roch_value(h);
            break;
        }
        h -= neg.classes()[pick];
        ++count[pick];
        for (std::size_t j = 0; j < n; ++j) pairing[j] -= neg.gram(pick, j);
        const std::int64_t next = potential - neg.ample_degree(pick);
        if (next >= potential) throw InvariantError("reduction potential failed to decrease");
        potential = next;
        ++out.iterations;
    }
    out.nef_part = h;
    for (std::size_t i = 0; i < n; ++i)
        if (count[i] > 0) out.fixed_part.emplace_back(neg.classes()[i], count[i]);
    if (!out.effective) out.h0 = 0;
    return out;
}

std::int64_t h0(const DivisorClass& f, const NegSet& neg) { return decompose(f, neg).h0; }

bool is_effective(const DivisorClass& f, const NegSet& neg) { return decompose(f, neg).effective; }

bool is_nef(const DivisorClass& f, const NegSet& neg) {
    if (f.points() != neg.r()) throw DimensionError("class and NegSet have different point counts");
    if (f.points() <= 1) {
        const std::int64_t t = f.degree();
        const std::int64_t m = f.points() == 1 ? f.mult(0) : 0;
        return t >= m && m >= 0 && t >= 0;
    }
    for (const auto& c : neg.classes())
        if (intersect(f, c) < 0) return false;
    return true;
}

}  // namespace fatpoint
