#include "fatpoint/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "fatpoint/conic.hpp"
#include "fatpoint/error.hpp"
#include "fatpoint/represent.hpp"
#include "fatpoint/zariski.hpp"

namespace fatpoint {

namespace {

void check_mults(const std::vector<std::int64_t>& mults, std::size_t r) {
    if (mults.size() != r)
        throw DimensionError("expected " + std::to_string(r) + " multiplicities, got " + std::to_string(mults.size()));
    bool any = false;
    for (auto m : mults) {
        if (m < 0) throw InputError("multiplicities must be nonnegative");
        any = any || m > 0;
    }
    if (!any) throw InputError("empty scheme: all multiplicities are zero");
}

ZariskiResult run(const DivisorClass& f, const NegSet& neg) {
    return f.points() <= 1 ? small_r_rules(f) : decompose(f, neg);
}

std::int64_t sections(const DivisorClass& f, const NegSet& neg) { return run(f, neg).h0; }

template <class F>
void parallel_for(std::size_t n, F&& body) {
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::int64_t value_at(const std::vector<std::int64_t>& values, std::int64_t t) {
    if (t < 0) return 0;
    if (static_cast<std::size_t>(t) >= values.size()) return values.back();
    return values[static_cast<std::size_t>(t)];
}

}  // namespace

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FATPOINT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return n;
}

std::int64_t HilbertReport::at(std::int64_t t) const { return value_at(values, t); }

std::vector<std::int64_t> first_differences(const std::vector<std::int64_t>& values) {
    std::vector<std::int64_t> d;
    for (std::size_t t = 0; t < values.size(); ++t) d.push_back(values[t] - (t ? values[t - 1] : 0));
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::vector<std::int64_t> hilbert_values(const NegSet& neg, const std::vector<std::int64_t>& mults) {
    check_mults(mults, neg.r());
    const std::int64_t deg = scheme_degree(mults);
    std::vector<std::int64_t> values;
    for (std::int64_t t = 0;; ++t) {
        const std::int64_t h = forms_of_degree(t) - sections(fat_point_class(mults, t), neg);
        values.push_back(h);
        if (h == deg) break;
        if (t > deg + 2) throw InvariantError("Hilbert function failed to reach the degree");
    }
    return values;
}

HilbertReport hilbert_function(const ConfigurationType& type, const std::vector<std::int64_t>& mults, Mode mode) {
    HilbertReport out;
    out.mults = mults;
    out.type = type;
    out.mode = mode;
    auto neg = complete(type, mode);
    out.values = hilbert_values(neg, mults);
    out.degree = scheme_degree(mults);
    out.saturation = static_cast<std::int64_t>(out.values.size()) - 1;
    out.delta = first_differences(out.values);
    return out;
}

BettiNumbers betti_numbers(const ConfigurationType& type, const std::vector<std::int64_t>& mults, Mode mode) {
    const std::size_t r = type.r();
    if (mode == Mode::eight_points && r > 6)
        throw UnsupportedError(
            "Betti numbers unsupported for this r: for 7 or 8 points off a conic the multiplication maps "
            "need not have maximal rank, so the resolution is not determined by this method");
    auto neg = complete(type, mode);
    auto values = hilbert_values(neg, mults);
    const auto tau = static_cast<std::int64_t>(values.size()) - 1;

    std::map<std::int64_t, std::int64_t> t_gen;
    for (std::int64_t i = 0; i <= tau + 1; ++i) {
        const auto f = fat_point_class(mults, i);
        const auto next = fat_point_class(mults, i + 1);
        auto z = run(f, neg);
        std::int64_t gens;
        if (!z.effective) {
            gens = sections(next, neg);
        } else {
            const auto hl = z.nef_part + DivisorClass::line(r);
            const std::int64_t h0_hl = sections(hl, neg);
            std::int64_t coker_h = 0;
            if (mode == Mode::eight_points) coker_h = std::max<std::int64_t>(0, h0_hl - 3 * z.h0);
            gens = coker_h + sections(next, neg) - h0_hl;
        }
        if (gens < 0) throw InvariantError("negative generator count");
        if (gens) t_gen[i + 1] = gens;
    }
    BettiNumbers out;
    out.f0 = t_gen;
    for (std::int64_t i = 1; i <= tau + 3; ++i) {
        const std::int64_t d3 =
            value_at(values, i) - 3 * value_at(values, i - 1) + 3 * value_at(values, i - 2) - value_at(values, i - 3);
        auto it = t_gen.find(i);
        const std::int64_t s = (it == t_gen.end() ? 0 : it->second) + d3;
        if (s < 0) throw InvariantError("negative syzygy count in degree " + std::to_string(i));
        if (s) out.f1[i] = s;
    }
    return out;
}

HilbertReport hilbert_with_betti(const ConfigurationType& type, const std::vector<std::int64_t>& mults, Mode mode) {
    auto rep = hilbert_function(type, mults, mode);
    auto b = betti_numbers(type, mults, mode);
    rep.betti_f0 = std::move(b.f0);
    rep.betti_f1 = std::move(b.f1);
    return rep;
}

std::string format_betti(const BettiTable& table) {
    if (table.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, count] : table) {
        os << (first ? "" : ",") << deg << '^' << count;
        first = false;
    }
    return os.str();
}

ExtremalResult extremal_double(const std::vector<std::int64_t>& h, std::size_t r, std::int64_t m, Mode mode,
                               bool representable_only) {
    if (m < 1) throw InputError("multiplicity must be at least 1");
    struct Candidate {
        std::string label;
        ConfigurationType type;
    };
    std::vector<Candidate> cands;
    if (mode == Mode::eight_points) {
        for (const auto& t : enumerate(r)) {
            const auto idx = t.table_id()->index;
            if (representable_only && representability(r, idx).verdict == Verdict::never) continue;
            cands.push_back({std::to_string(idx), t});
        }
    } else {
        for (const auto& c : enumerate_conic_types(r)) cands.push_back({c.label(), conic_neg(c)});
    }
    ExtremalResult out;
    const std::vector<std::int64_t> ones(r, 1), multiple(r, m);
    for (const auto& c : cands) {
        if (hilbert_function(c.type, ones, mode).values != h) continue;
        out.matching.push_back(c.label);
        out.h_multiple.push_back(hilbert_function(c.type, multiple, mode).values);
    }
    if (out.matching.empty()) return out;
    std::size_t len = 0;
    for (const auto& v : out.h_multiple) len = std::max(len, v.size());
    auto dominates = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        for (std::size_t t = 0; t < len; ++t)
            if (value_at(x, static_cast<std::int64_t>(t)) < value_at(y, static_cast<std::int64_t>(t))) return false;
        return true;
    };
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < out.h_multiple.size(); ++i) {
            bool extreme = true;
            for (std::size_t j = 0; j < out.h_multiple.size() && extreme; ++j)
                extreme = pass == 0 ? dominates(out.h_multiple[i], out.h_multiple[j])
                                    : dominates(out.h_multiple[j], out.h_multiple[i]);
            if (!extreme) continue;
            (pass == 0 ? out.h_max : out.h_min) = out.h_multiple[i];
            (pass == 0 ? out.max_types : out.min_types).push_back(out.matching[i]);
        }
    }
    return out;
}

UniformPartition uniform_partition(std::size_t r, std::size_t max_mult, bool representable_only) {
    if (max_mult < 1) throw InputError("multiplicity bound must be at least 1");
    const auto& types = enumerate(r);
    std::vector<std::size_t> indices;
    for (const auto& t : types) {
        const auto idx = t.table_id()->index;
        if (representable_only && representability(r, idx).verdict == Verdict::never) continue;
        indices.push_back(idx);
    }
    std::vector<std::vector<std::vector<std::int64_t>>> seqs(indices.size());
    parallel_for(indices.size(), [&](std::size_t k) {
        const auto& t = types[indices[k] - 1];
        auto neg = complete(t, Mode::eight_points);
        for (std::size_t m = 1; m <= max_mult; ++m)
            seqs[k].push_back(hilbert_values(neg, std::vector<std::int64_t>(r, static_cast<std::int64_t>(m))));
    });
    UniformPartition out;
    out.r = r;
    out.max_mult = max_mult;
    std::map<std::vector<std::vector<std::int64_t>>, std::size_t> group_of;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        out.sequences[indices[k]] = seqs[k];
        auto [it, fresh] = group_of.emplace(seqs[k], out.groups.size());
        if (fresh) out.groups.emplace_back();
        out.groups[it->second].push_back(indices[k]);
    }
    for (std::size_t a = 0; a < out.groups.size(); ++a)
        for (std::size_t b = a + 1; b < out.groups.size(); ++b) {
            const auto& sa = out.sequences[out.groups[a].front()];
            const auto& sb = out.sequences[out.groups[b].front()];
            std::size_t m = 0;
            while (sa[m] == sb[m]) ++m;
            out.separations.push_back({a, b, m + 1});
            out.bound = std::max(out.bound, m + 1);
        }
    return out;
}

}  // namespace fatpoint
