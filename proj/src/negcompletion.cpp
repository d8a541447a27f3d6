#include "fatpoint/negcompletion.hpp"

#include <algorithm>

#include "fatpoint/error.hpp"

namespace fatpoint {

NegSet::NegSet(std::size_t r, Mode mode, std::vector<DivisorClass> classes, ConfigurationType source)
    : r_(r), mode_(mode), classes_(std::move(classes)), source_(std::move(source)) {
    std::sort(classes_.begin(), classes_.end());
    const std::size_t n = classes_.size();
    gram_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) gram_[i * n + j] = gram_[j * n + i] = intersect(classes_[i], classes_[j]);
    if (r >= 2) {
        ample_class_ = ample_reference(r);
        for (const auto& c : classes_) {
            auto a = intersect(c, ample_class_);
            if (a <= 0) throw InvariantError("class " + c.to_string() + " is not positive on the ample reference");
            ample_.push_back(a);
        }
    }
}

NegSet complete(const ConfigurationType& type, Mode mode) {
    const std::size_t r = type.r();
    if (r < 2) {
        // the loop is never run for r <= 1; keep the exceptional curve for completeness
        std::vector<DivisorClass> cs;
        for (std::size_t i = 0; i < r; ++i) cs.push_back(DivisorClass::exceptional(r, i));
        return NegSet(r, mode, std::move(cs), type);
    }
    std::vector<DivisorClass> minus_one;
    if (mode == Mode::eight_points) {
        if (r > 8) throw UnsupportedError("eight-point completion needs r <= 8");
        minus_one = eight_point_family(r).exceptional_curves();
    } else {
        // re-validate so that only conic-compatible data is completed in conic mode
        if (type.mode() != Mode::conic) validate(type.classes(), r, Mode::conic);
        for (std::size_t i = 0; i < r; ++i) minus_one.push_back(DivisorClass::exceptional(r, i));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                std::vector<std::int64_t> m(r, 0);
                m[i] = m[j] = 1;
                minus_one.emplace_back(1, std::move(m));
            }
        if (r == 5) minus_one.push_back(conic_class(r));
    }
    std::vector<DivisorClass> out = type.classes();
    for (const auto& c : minus_one) {
        bool ok = true;
        for (const auto& d : type.classes())
            if (intersect(c, d) < 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(c);
    }
    return NegSet(r, mode, std::move(out), type);
}

}  // namespace fatpoint
