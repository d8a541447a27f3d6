#include "fatpoint/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>

#include "fatpoint/error.hpp"

namespace fatpoint {

namespace {

using Mults = std::vector<std::int64_t>;

// Lexicographically increasing 0/1 vectors with at least min_ones ones.
void for_each_subset(std::size_t r, int min_ones, const std::function<bool(const Mults&)>& visit) {
    if (r >= 63) throw UnsupportedError("too many points for subset enumeration");
    Mults m(r);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v) {
        if (std::popcount(v) < min_ones) continue;
        for (std::size_t i = 0; i < r; ++i) m[i] = static_cast<std::int64_t>((v >> (r - 1 - i)) & 1);
        if (!visit(m)) return;
    }
}

std::vector<DivisorClass> build_eight_point(std::size_t r) {
    std::vector<DivisorClass> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(DivisorClass::exceptional(r, i));
    for_each_subset(r, 2, [&](const Mults& m) {
        out.emplace_back(1, m);
        return true;
    });
    for_each_subset(r, 5, [&](const Mults& m) {
        out.emplace_back(2, m);
        return true;
    });
    // 3L - 2E_k - (j-1 others), j in {7, 8}
    for (std::size_t k = 0; k < r; ++k) {
        for_each_subset(r, 6, [&](const Mults& m) {
            if (m[k] != 0) return true;
            Mults c = m;
            c[k] = 2;
            out.emplace_back(3, c);
            return true;
        });
    }
    if (r == 8) {
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = a + 1; b < 8; ++b)
                for (std::size_t c = b + 1; c < 8; ++c) {
                    Mults m(8, 1);
                    m[a] = m[b] = m[c] = 2;
                    out.emplace_back(4, m);
                }
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = a + 1; b < 8; ++b) {
                Mults m(8, 2);
                m[a] = m[b] = 1;
                out.emplace_back(5, m);
            }
        for (std::size_t a = 0; a < 8; ++a) {
            Mults m(8, 2);
            m[a] = 3;
            out.emplace_back(6, m);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void visit_conic(std::size_t r, const std::function<bool(const DivisorClass&)>& visit) {
    for (std::size_t i = 0; i < r; ++i)
        if (!visit(DivisorClass::exceptional(r, i))) return;
    bool go = true;
    for_each_subset(r, 2, [&](const Mults& m) { return go = visit(DivisorClass(1, m)); });
    if (go && r > 4) visit(conic_class(r));
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::eight_points ? "eight_points" : "conic"; }

Mode parse_mode(const std::string& text) {
    if (text == "eight_points" || text == "eight-points") return Mode::eight_points;
    if (text == "conic") return Mode::conic;
    throw InputError("unknown mode '" + text + "'");
}

CandidateFamily::CandidateFamily(std::size_t r, Mode mode) : r_(r), mode_(mode) {
    if (mode == Mode::eight_points) {
        if (r < 2 || r > 8) throw UnsupportedError("eight-point candidate family needs 2 <= r <= 8");
        classes_ = build_eight_point(r);
        materialized_ = true;
    } else {
        if (r < 2) throw UnsupportedError("conic candidate family needs r >= 2");
        if (r <= kConicMaterializeLimit) {
            visit_conic(r, [&](const DivisorClass& c) {
                classes_.push_back(c);
                return true;
            });
            materialized_ = true;
        }
    }
    if (materialized_)
        for (std::size_t i = 0; i < classes_.size(); ++i)
            by_square_[self_intersection(classes_[i])].push_back(i);
}

const std::vector<DivisorClass>& CandidateFamily::classes() const {
    if (!materialized_) throw UnsupportedError("conic family for r > 14 is only available lazily");
    return classes_;
}

const std::map<std::int64_t, std::vector<std::size_t>>& CandidateFamily::by_self_intersection() const {
    if (!materialized_) throw UnsupportedError("conic family for r > 14 is only available lazily");
    return by_square_;
}

void CandidateFamily::for_each(const std::function<bool(const DivisorClass&)>& visit) const {
    if (materialized_) {
        for (const auto& c : classes_)
            if (!visit(c)) return;
        return;
    }
    visit_conic(r_, visit);
}

std::vector<DivisorClass> CandidateFamily::exceptional_curves() const {
    std::vector<DivisorClass> out;
    if (materialized_) {
        auto it = by_square_.find(-1);
        if (it != by_square_.end())
            for (auto i : it->second) out.push_back(classes_[i]);
        return out;
    }
    // E_i, the lines through two points, and Q never has square -1 here (r > 14)
    for (std::size_t i = 0; i < r_; ++i) out.push_back(DivisorClass::exceptional(r_, i));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < r_; ++j) {
            Mults m(r_, 0);
            m[i] = m[j] = 1;
            out.emplace_back(1, m);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_conic_family(const DivisorClass& c) {
    const auto& m = c.mults();
    const auto r = static_cast<std::ptrdiff_t>(m.size());
    if (r < 2) return false;
    if (c.degree() == 0) return std::count(m.begin(), m.end(), -1) == 1 && std::count(m.begin(), m.end(), 0) + 1 == r;
    if (c.degree() == 1)
        return std::all_of(m.begin(), m.end(), [](auto x) { return x == 0 || x == 1; }) &&
               std::count(m.begin(), m.end(), 1) >= 2;
    if (c.degree() == 2) return r > 4 && c == conic_class(m.size());
    return false;
}

bool CandidateFamily::contains(const DivisorClass& c) const {
    if (c.points() != r_) return false;
    if (materialized_) return std::binary_search(classes_.begin(), classes_.end(), c);
    return in_conic_family(c);
}

std::size_t CandidateFamily::size() const {
    if (materialized_) return classes_.size();
    return r_ + ((std::size_t{1} << r_) - 1 - r_) + 1;
}

CandidateFamily negative_candidates(std::size_t r, Mode mode) { return CandidateFamily(r, mode); }

const CandidateFamily& eight_point_family(std::size_t r) {
    if (r < 2 || r > 8) throw UnsupportedError("eight-point candidate family needs 2 <= r <= 8");
    static std::array<std::once_flag, 9> flags;
    static std::array<std::optional<CandidateFamily>, 9> cache;
    std::call_once(flags[r], [r] { cache[r].emplace(r, Mode::eight_points); });
    return *cache[r];
}

std::vector<DivisorClass> square_at_most(const CandidateFamily& family, std::int64_t bound) {
    std::vector<DivisorClass> out;
    family.for_each([&](const DivisorClass& c) {
        if (self_intersection(c) <= bound) out.push_back(c);
        return true;
    });
    return out;
}

}  // namespace fatpoint
