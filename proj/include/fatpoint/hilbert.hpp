#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoint/configtype.hpp"
#include "fatpoint/negcompletion.hpp"

namespace fatpoint {

using BettiTable = std::map<std::int64_t, std::int64_t>;  // degree -> count, nonzero only

struct HilbertReport {
    std::vector<std::int64_t> mults;
    ConfigurationType type;
    Mode mode = Mode::eight_points;
    std::vector<std::int64_t> values;  // h_Z(0..tau)
    std::vector<std::int64_t> delta;
    std::int64_t degree = 0;
    std::int64_t saturation = 0;
    std::optional<BettiTable> betti_f0;
    std::optional<BettiTable> betti_f1;

    // h_Z(t) for any integer t
    std::int64_t at(std::int64_t t) const;
};

// Values only, against an already completed NegSet.
std::vector<std::int64_t> hilbert_values(const NegSet& neg, const std::vector<std::int64_t>& mults);

HilbertReport hilbert_function(const ConfigurationType& type, const std::vector<std::int64_t>& mults, Mode mode);
inline HilbertReport hilbert_function(const ConfigurationType& type, const std::vector<std::int64_t>& mults) {
    return hilbert_function(type, mults, type.mode());
}

struct BettiNumbers {
    BettiTable f0;
    BettiTable f1;
};

// Only for conic mode or r <= 6.
BettiNumbers betti_numbers(const ConfigurationType& type, const std::vector<std::int64_t>& mults, Mode mode);
inline BettiNumbers betti_numbers(const ConfigurationType& type, const std::vector<std::int64_t>& mults) {
    return betti_numbers(type, mults, type.mode());
}
HilbertReport hilbert_with_betti(const ConfigurationType& type, const std::vector<std::int64_t>& mults, Mode mode);
inline HilbertReport hilbert_with_betti(const ConfigurationType& type, const std::vector<std::int64_t>& mults) {
    return hilbert_with_betti(type, mults, type.mode());
}

// "4^1,6^4"; "0" for an empty table
std::string format_betti(const BettiTable& table);

// first differences; trailing zeros dropped
std::vector<std::int64_t> first_differences(const std::vector<std::int64_t>& values);

struct ExtremalResult {
    std::vector<std::string> matching;  // type labels
    std::vector<std::vector<std::int64_t>> h_multiple;  // h_{mZ} per matching type
    std::optional<std::vector<std::int64_t>> h_max;
    std::optional<std::vector<std::int64_t>> h_min;
    std::vector<std::string> max_types;
    std::vector<std::string> min_types;
};

// Types whose reduced scheme has Hilbert function h, and the pointwise
// extremes of h_{mZ} among them. Eight-point mode labels are table indices.
ExtremalResult extremal_double(const std::vector<std::int64_t>& h, std::size_t r, std::int64_t m, Mode mode,
                               bool representable_only = false);

struct UniformPartition {
    std::size_t r = 0;
    std::size_t max_mult = 0;
    std::vector<std::vector<std::size_t>> groups;  // table indices
    struct Separation {
        std::size_t a, b;     // group positions
        std::size_t least_m;  // smallest m with differing h_{mZ}
    };
    std::vector<Separation> separations;
    std::size_t bound = 1;  // max over pairs of least_m
    // h_{mZ} per type index for m = 1..max_mult
    std::map<std::size_t, std::vector<std::vector<std::int64_t>>> sequences;
};

UniformPartition uniform_partition(std::size_t r, std::size_t max_mult, bool representable_only = false);

// worker count: hardware concurrency capped by FATPOINT_THREADS
std::size_t worker_count();

}  // namespace fatpoint
