#pragma once

#include <cstddef>
#include <vector>

#include "fatpoint/catalog.hpp"
#include "fatpoint/configtype.hpp"
#include "fatpoint/lattice.hpp"

namespace fatpoint {

// neg(X) together with the compatible square -1 candidates, plus the
// pairings the reduction loop needs.
class NegSet {
public:
    NegSet(std::size_t r, Mode mode, std::vector<DivisorClass> classes, ConfigurationType source);

    std::size_t r() const { return r_; }
    Mode mode() const { return mode_; }
    const std::vector<DivisorClass>& classes() const { return classes_; }
    const ConfigurationType& source_type() const { return source_; }
    std::size_t size() const { return classes_.size(); }

    // gram(i, j) = C_i . C_j
    std::int64_t gram(std::size_t i, std::size_t j) const { return gram_[i * classes_.size() + j]; }
    // C_i . A_r, always > 0
    std::int64_t ample_degree(std::size_t i) const { return ample_[i]; }
    const DivisorClass& ample() const { return ample_class_; }

private:
    std::size_t r_;
    Mode mode_;
    std::vector<DivisorClass> classes_;
    ConfigurationType source_;
    std::vector<std::int64_t> gram_;
    std::vector<std::int64_t> ample_;
    DivisorClass ample_class_;
};

NegSet complete(const ConfigurationType& type, Mode mode);
inline NegSet complete(const ConfigurationType& type) { return complete(type, type.mode()); }

}  // namespace fatpoint
