#include "fatpoint/lattice.hpp"

#include <charconv>
#include <sstream>

#include "fatpoint/error.hpp"

namespace fatpoint {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw InvariantError("integer overflow in lattice arithmetic");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw InvariantError("integer overflow in lattice arithmetic");
    return out;
}

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : checked_mul(n, n - 1) / 2; }

std::int64_t forms_of_degree(std::int64_t t) { return t < 0 ? 0 : binom2(t + 2); }

DivisorClass DivisorClass::exceptional(std::size_t r, std::size_t i) {
    if (i >= r) throw DimensionError("exceptional index out of range");
    DivisorClass e = zero(r);
    e.mults_[i] = -1;
    return e;
}

bool DivisorClass::is_zero() const {
    if (d_ != 0) return false;
    for (auto m : mults_)
        if (m != 0) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (o.points() != points()) throw DimensionError("class dimension mismatch");
    d_ = checked_add(d_, o.d_);
    for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = checked_add(mults_[i], o.mults_[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (o.points() != points()) throw DimensionError("class dimension mismatch");
    d_ = checked_add(d_, -o.d_);
    for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = checked_add(mults_[i], -o.mults_[i]);
    return *this;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
    DivisorClass out = a;
    out.d_ = checked_mul(k, a.d_);
    for (auto& m : out.mults_) m = checked_mul(k, m);
    return out;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return a.mults_ <=> b.mults_;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    os << d_ << ';';
    for (std::size_t i = 0; i < mults_.size(); ++i) os << (i ? "," : "") << mults_[i];
    return os.str();
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
    if (a.points() != b.points())
        throw DimensionError("cannot intersect classes on " + std::to_string(a.points()) + " and " +
                             std::to_string(b.points()) + " points");
    std::int64_t s = checked_mul(a.degree(), b.degree());
    const auto& ma = a.mults();
    const auto& mb = b.mults();
    for (std::size_t i = 0; i < ma.size(); ++i) s = checked_add(s, -checked_mul(ma[i], mb[i]));
    return s;
}

DivisorClass canonical_class(std::size_t r) { return {-3, std::vector<std::int64_t>(r, -1)}; }

DivisorClass ample_reference(std::size_t r) {
    if (r < 2) throw UnsupportedError("ample reference class needs r >= 2");
    return {static_cast<std::int64_t>(r) + 1, std::vector<std::int64_t>(r, 1)};
}

DivisorClass conic_class(std::size_t r) { return {2, std::vector<std::int64_t>(r, 1)}; }

DivisorClass fat_point_class(const std::vector<std::int64_t>& mults, std::int64_t t) {
    for (auto m : mults)
        if (m < 0) throw InputError("multiplicities must be nonnegative");
    return {t, mults};
}

std::int64_t riemann_roch_value(const DivisorClass& f) {
    std::int64_t num = checked_add(intersect(f, f), -intersect(canonical_class(f.points()), f));
    if (num % 2 != 0) throw InvariantError("odd Riemann-Roch numerator for " + f.to_string());
    return num / 2 + 1;
}

std::int64_t scheme_degree(const std::vector<std::int64_t>& mults) {
    std::int64_t s = 0;
    for (auto m : mults) {
        if (m < 0) throw InputError("multiplicities must be nonnegative");
        s = checked_add(s, binom2(m + 1));
    }
    return s;
}

DivisorClass parse_class(std::string_view text) {
    std::vector<std::int64_t> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find_first_of(",;", pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
            throw InputError("malformed class '" + std::string(text) + "'");
        vals.push_back(v);
        pos = end + 1;
    }
    std::int64_t d = vals.front();
    return {d, std::vector<std::int64_t>(vals.begin() + 1, vals.end())};
}

}  // namespace fatpoint
