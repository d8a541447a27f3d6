#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fatpoint/configtype.hpp"

namespace fatpoint {

enum class ConicCaseKind { I, II, III, IV };

// Points on a conic: irreducible (I, II) or a pair of lines (III, IV).
// For two lines, a and b count the points on each line (a <= b), and
// eps = 1 when the singular point is one of the points.
struct ConicCase {
    ConicCaseKind kind = ConicCaseKind::I;
    std::size_t r = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    int eps = 0;

    std::string label() const;
    friend bool operator==(const ConicCase&, const ConicCase&) = default;
};

std::string to_string(ConicCaseKind kind);
ConicCaseKind parse_conic_kind(const std::string& text);

// Throws InputError when the parameters are inconsistent.
void check_conic_case(const ConicCase& c);

ConfigurationType conic_neg(const ConicCase& c);
std::vector<ConicCase> enumerate_conic_types(std::size_t r);
std::vector<std::int64_t> delta_h_closed_form(const ConicCase& c, int m);

}  // namespace fatpoint
