#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fatpoint/lattice.hpp"
#include "fatpoint/negcompletion.hpp"

namespace fatpoint {

struct ZariskiResult {
    DivisorClass input;
    bool effective = false;
    DivisorClass nef_part;
    // distinct classes with their subtraction counts, in NegSet order
    std::vector<std::pair<DivisorClass, std::int64_t>> fixed_part;
    std::int64_t h0 = 0;
    std::size_t iterations = 0;
    // H.A_r before each subtraction and at exit (only when traced)
    std::vector<std::int64_t> potentials;

    DivisorClass fixed_sum() const;
};

struct DecomposeOptions {
    bool trace = false;
    // visit NegSet classes in this order instead of the stored one
    const std::vector<std::size_t>* order = nullptr;
};

ZariskiResult decompose(const DivisorClass& f, const NegSet& neg, const DecomposeOptions& opts = {});
std::int64_t h0(const DivisorClass& f, const NegSet& neg);
bool is_effective(const DivisorClass& f, const NegSet& neg);
bool is_nef(const DivisorClass& f, const NegSet& neg);
ZariskiResult small_r_rules(const DivisorClass& f);

}  // namespace fatpoint
