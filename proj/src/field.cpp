#include "fatpoint/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "fatpoint/error.hpp"

namespace fatpoint {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1) {
    if (!is_prime(p) || p >= (1u << 31)) throw InputError("field characteristic must be a prime below 2^31");
    if (k < 1) throw InputError("extension degree must be at least 1");
    for (unsigned i = 0; i < k; ++i) {
        q_ *= p;
        if (k > 1 && q_ > kMaxExtensionOrder) throw UnsupportedError("extension field too large (order > 2^20)");
    }
    if (k == 1) return;

    std::vector<std::uint32_t> digits(k), c(k);
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (std::uint64_t code = 0; code < q_; ++code) {
        std::uint64_t x = code;
        for (unsigned i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(x % p), x /= p;
        if (c[0] == 0) continue;
        // walk the powers of the root; primitive iff the first return to 1 is at q-1
        std::fill(digits.begin(), digits.end(), 0);
        digits[0] = 1;
        bool primitive = true;
        for (std::uint64_t e = 0; e < q_ - 1; ++e) {
            std::uint64_t v = 0;
            for (unsigned i = k; i-- > 0;) v = v * p + digits[i];
            if (e > 0 && v == 1) {
                primitive = false;
                break;
            }
            exp_[e] = static_cast<std::uint32_t>(v);
            const std::uint64_t top = digits[k - 1];
            for (unsigned i = k - 1; i > 0; --i) digits[i] = static_cast<std::uint32_t>((digits[i - 1] + (p - c[i]) * top) % p);
            digits[0] = static_cast<std::uint32_t>(((p - c[0]) * top) % p);
        }
        if (!primitive) continue;
        modulus_ = code;
        for (std::uint64_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = static_cast<std::uint32_t>(e);
        return;
    }
    throw InvariantError("no primitive polynomial found");
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
    if (p_ == 2) return a ^ b;
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_, b /= p_, scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_, scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t out = 1;
    while (e) {
        if (e & 1) out = mul(out, a);
        a = mul(a, a);
        e >>= 1;
    }
    return out;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    if (a == 0) throw InputError("division by zero in " + name());
    if (k_ == 1) return pow(a, p_ - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::string FiniteField::name() const {
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

const FiniteField& finite_field(std::uint32_t p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FiniteField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = std::make_unique<FiniteField>(p, k);
    return *slot;
}

}  // namespace fatpoint
