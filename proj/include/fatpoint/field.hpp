#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fatpoint {

bool is_prime(std::uint64_t n);

// F_p (k = 1) or GF(p^k). Elements are integers in [0, q); for k > 1 the
// base-p digits of an element are its coefficients in powers of a root of
// the smallest primitive polynomial (x^k + c_{k-1}x^{k-1} + ... + c_0,
// ordered by the integer whose base-p digits are c_0..c_{k-1}).
class FiniteField {
public:
    static constexpr std::uint64_t kMaxExtensionOrder = 1u << 20;

    FiniteField(std::uint32_t p, unsigned k = 1);

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t modulus_code() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // image of an integer in the prime subfield
    std::uint32_t from_int(std::int64_t v) const;
    bool contains(std::uint64_t v) const { return v < q_; }

    std::string name() const;

private:
    std::uint32_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::uint64_t modulus_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

// Shared instance per (p, k).
const FiniteField& finite_field(std::uint32_t p, unsigned k = 1);

}  // namespace fatpoint
