#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoint {

// Class d*L - sum m_i*E_i in the Picard lattice of the plane blown up at r points.
class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(std::int64_t d, std::vector<std::int64_t> mults)
        : d_(d), mults_(std::move(mults)) {}
    DivisorClass(std::int64_t d, std::initializer_list<std::int64_t> mults)
        : d_(d), mults_(mults) {}

    static DivisorClass zero(std::size_t r) { return {0, std::vector<std::int64_t>(r, 0)}; }
    static DivisorClass line(std::size_t r) { return {1, std::vector<std::int64_t>(r, 0)}; }
    // E_i (0-based i); stored as multiplicity -1
    static DivisorClass exceptional(std::size_t r, std::size_t i);

    std::int64_t degree() const { return d_; }
    const std::vector<std::int64_t>& mults() const { return mults_; }
    std::int64_t mult(std::size_t i) const { return mults_[i]; }
    std::size_t points() const { return mults_.size(); }
    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(std::int64_t k, const DivisorClass& a);

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    // lexicographic in (d, m_1, ..., m_r)
    friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

    std::string to_string() const;  // "d;m1,...,mr"

private:
    std::int64_t d_ = 0;
    std::vector<std::int64_t> mults_;
};

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);
inline std::int64_t self_intersection(const DivisorClass& a) { return intersect(a, a); }

DivisorClass canonical_class(std::size_t r);
DivisorClass ample_reference(std::size_t r);
// 2L - E_1 - ... - E_r
DivisorClass conic_class(std::size_t r);
DivisorClass fat_point_class(const std::vector<std::int64_t>& mults, std::int64_t t);
std::int64_t riemann_roch_value(const DivisorClass& f);
std::int64_t scheme_degree(const std::vector<std::int64_t>& mults);

// "d,m1,...,mr" as accepted on the command line
DivisorClass parse_class(std::string_view text);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t binom2(std::int64_t n);  // C(n, 2) for n >= 0, else 0
std::int64_t forms_of_degree(std::int64_t t);  // C(t+2, 2) for t >= 0, else 0

}  // namespace fatpoint
