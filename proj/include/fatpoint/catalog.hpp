#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoint/lattice.hpp"

namespace fatpoint {

enum class Mode { eight_points, conic };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

// Candidate negative classes. Conic mode keeps the line family implicit
// above a size threshold and walks it by subset mask.
class CandidateFamily {
public:
    static constexpr std::size_t kConicMaterializeLimit = 14;

    CandidateFamily(std::size_t r, Mode mode);

    std::size_t r() const { return r_; }
    Mode mode() const { return mode_; }
    bool materialized() const { return materialized_; }

    // Sorted, lexicographic in (d, mults). Throws if not materialized.
    const std::vector<DivisorClass>& classes() const;
    const std::map<std::int64_t, std::vector<std::size_t>>& by_self_intersection() const;

    // Visits every class in lexicographic order; return false to stop.
    void for_each(const std::function<bool(const DivisorClass&)>& visit) const;
    // Only the classes of square exactly -1, in lexicographic order.
    std::vector<DivisorClass> exceptional_curves() const;

    bool contains(const DivisorClass& c) const;
    std::size_t size() const;

private:
    std::size_t r_;
    Mode mode_;
    bool materialized_ = false;
    std::vector<DivisorClass> classes_;
    std::map<std::int64_t, std::vector<std::size_t>> by_square_;
};

CandidateFamily negative_candidates(std::size_t r, Mode mode);
// Membership in E_i, L - (two or more points), Q without building the family.
bool in_conic_family(const DivisorClass& c);
// Process-wide cached eight-point families for 2 <= r <= 8.
const CandidateFamily& eight_point_family(std::size_t r);
std::vector<DivisorClass> square_at_most(const CandidateFamily& family, std::int64_t bound);

}  // namespace fatpoint
