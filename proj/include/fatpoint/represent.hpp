#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fatpoint/configtype.hpp"

namespace fatpoint {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct SmithResult {
    IntMatrix diagonal_form;  // U * M * V
    IntMatrix u;
    IntMatrix v;
    std::vector<mpz_class> diagonal;  // nonzero entries, d_1 | d_2 | ...
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
SmithResult smith_normal_form(const IntMatrix& m);

struct FinAbGroup {
    std::vector<std::int64_t> invariant_factors;  // each >= 2, dividing chain
    std::size_t free_rank = 0;

    std::int64_t torsion_order() const;
    std::string to_string() const;
    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

// E_1-E_2, ..., E_{r-1}-E_r, L-E_1-E_2-E_3 (r >= 3)
std::vector<DivisorClass> kperp_basis(std::size_t r);
bool in_kperp(const DivisorClass& c);
std::vector<std::int64_t> kperp_coordinates(const DivisorClass& c);
// Coordinates with respect to an arbitrary Z-basis of K-perp.
std::vector<std::int64_t> coordinates_in_basis(const DivisorClass& c, const std::vector<DivisorClass>& basis);

FinAbGroup torsion(const ConfigurationType& type);
FinAbGroup torsion_in_basis(const ConfigurationType& type, const std::vector<DivisorClass>& basis);

enum class Verdict { always, only_char, except_char, never };

struct RepresentabilityVerdict {
    TableRef type;
    Verdict verdict = Verdict::always;
    int p = 0;  // characteristic for only_char / except_char
    std::string source;

    std::string to_string() const;  // "always", "except_char(2)", ...
    // characteristic 0 stands for the rationals
    bool allows_characteristic(std::uint64_t ch) const;
};

RepresentabilityVerdict representability(std::size_t r, std::size_t index);

}  // namespace fatpoint
