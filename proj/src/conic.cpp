#include "fatpoint/conic.hpp"

#include <sstream>

#include "fatpoint/error.hpp"

namespace fatpoint {

namespace {

using Seq = std::vector<std::int64_t>;

void append(Seq& s, std::int64_t value, std::int64_t count) {
    if (count < 0) throw InvariantError("negative block length in closed form");
    for (std::int64_t i = 0; i < count; ++i) s.push_back(value);
}

DivisorClass line_through(std::size_t r, std::size_t from, std::size_t to, bool with_first) {
    std::vector<std::int64_t> m(r, 0);
    for (std::size_t i = from; i < to; ++i) m[i] = 1;
    if (with_first) m[0] = 1;
    return {1, std::move(m)};
}

enum class Shape { collinear, irreducible, two_lines };

Shape shape_of(const ConicCase& c) {
    switch (c.kind) {
        case ConicCaseKind::I:
            return c.r <= 2 ? Shape::collinear : Shape::irreducible;
        case ConicCaseKind::II:
            return Shape::irreducible;
        case ConicCaseKind::III:
            return Shape::two_lines;
        case ConicCaseKind::IV:
            return c.a == 0 ? Shape::collinear : Shape::two_lines;
    }
    return Shape::collinear;
}

}  // namespace

std::string to_string(ConicCaseKind kind) {
    switch (kind) {
        case ConicCaseKind::I: return "I";
        case ConicCaseKind::II: return "II";
        case ConicCaseKind::III: return "III";
        case ConicCaseKind::IV: return "IV";
    }
    return "?";
}

ConicCaseKind parse_conic_kind(const std::string& text) {
    if (text == "I") return ConicCaseKind::I;
    if (text == "II") return ConicCaseKind::II;
    if (text == "III") return ConicCaseKind::III;
    if (text == "IV") return ConicCaseKind::IV;
    throw InputError("unknown conic case '" + text + "'");
}

std::string ConicCase::label() const {
    std::ostringstream os;
    os << to_string(kind) << "(r=" << r;
    if (kind == ConicCaseKind::III || kind == ConicCaseKind::IV) os << ",a=" << a << ",b=" << b << ",eps=" << eps;
    os << ")";
    return os.str();
}

void check_conic_case(const ConicCase& c) {
    auto fail = [&](const std::string& why) { throw InputError("inconsistent conic case " + c.label() + ": " + why); };
    if (c.r < 1) fail("r must be positive");
    switch (c.kind) {
        case ConicCaseKind::I:
            if (c.r > 5) fail("case I needs r <= 5");
            break;
        case ConicCaseKind::II:
            if (c.r < 6) fail("case II needs r >= 6");
            break;
        case ConicCaseKind::III:
            if (c.a < 3) fail("case III needs a >= 3");
            if (c.a > c.b) fail("need a <= b");
            if (c.eps != 0 && c.eps != 1) fail("eps must be 0 or 1");
            if (c.a + c.b != c.r + static_cast<std::size_t>(c.eps)) fail("need a + b = r + eps");
            break;
        case ConicCaseKind::IV:
            if (c.a > 2) fail("case IV needs a <= 2");
            if (c.b < 3) fail("case IV needs b >= 3");
            if (c.eps != 0) fail("case IV needs eps = 0");
            if (c.a + c.b != c.r) fail("need a + b = r");
            break;
    }
}

ConfigurationType conic_neg(const ConicCase& c) {
    check_conic_case(c);
    std::vector<DivisorClass> classes;
    switch (c.kind) {
        case ConicCaseKind::I:
            break;
        case ConicCaseKind::II:
            classes.push_back(conic_class(c.r));
            break;
        case ConicCaseKind::III:
            classes.push_back(line_through(c.r, 0, c.a, false));
            classes.push_back(c.eps == 0 ? line_through(c.r, c.a, c.r, false) : line_through(c.r, c.a, c.r, true));
            break;
        case ConicCaseKind::IV:
            classes.push_back(line_through(c.r, 0, c.b, false));
            break;
    }
    return validate(std::move(classes), c.r, Mode::conic);
}

std::vector<ConicCase> enumerate_conic_types(std::size_t r) {
    if (r < 2) throw UnsupportedError("conic enumeration needs r >= 2");
    std::vector<ConicCase> out;
    out.push_back({r <= 5 ? ConicCaseKind::I : ConicCaseKind::II, r, 0, 0, 0});
    for (std::size_t a = 0; a <= 2; ++a)
        if (r >= a + 3) out.push_back({ConicCaseKind::IV, r, a, r - a, 0});
    for (int eps = 0; eps <= 1; ++eps)
        for (std::size_t a = 3; 2 * a <= r + static_cast<std::size_t>(eps); ++a)
            out.push_back({ConicCaseKind::III, r, a, r + static_cast<std::size_t>(eps) - a, eps});
    return out;
}

std::vector<std::int64_t> delta_h_closed_form(const ConicCase& c, int m) {
    check_conic_case(c);
    if (m != 1 && m != 2) throw InputError("closed forms exist only for m = 1, 2");
    const auto r = static_cast<std::int64_t>(c.r);
    const auto a = static_cast<std::int64_t>(c.a);
    const auto b = static_cast<std::int64_t>(c.b);
    Seq s{1};
    const Shape shape = shape_of(c);
    if (m == 1) {
        switch (shape) {
            case Shape::collinear:
                append(s, 1, r - 1);
                break;
            case Shape::irreducible:
                if (r % 2 == 1) {
                    append(s, 2, (r - 1) / 2);
                } else {
                    append(s, 2, (r - 2) / 2);
                    s.push_back(1);
                }
                break;
            case Shape::two_lines:
                if (c.eps == 0 && a < b) {
                    append(s, 2, a);
                    append(s, 1, b - a - 1);
                } else if (c.eps == 0) {
                    append(s, 2, a - 1);
                    s.push_back(1);
                } else {
                    append(s, 2, a - 1);
                    append(s, 1, b - a);
                }
                break;
        }
        return s;
    }
    if (shape == Shape::collinear) {
        append(s, 2, r);
        append(s, 1, r - 1);
        return s;
    }
    s.push_back(2);
    if (shape == Shape::irreducible) {
        if (r == 3) return {1, 2, 3, 3};
        s.push_back(3);
        if (r == 4) {
            s.insert(s.end(), {4, 2});
        } else if (r % 2 == 1) {
            append(s, 4, (r - 1) / 2);
            append(s, 2, (r - 5) / 2);
            s.push_back(1);
        } else {
            append(s, 4, r / 2 - 1);
            s.push_back(3);
            append(s, 2, (r - 6) / 2);
            s.push_back(1);
        }
        return s;
    }
    s.push_back(3);
    if (c.eps == 0) {
        if (2 * a < b) {
            append(s, 4, a);
            append(s, 3, a - 1);
            append(s, 2, b - 2 * a - 1);
            append(s, 1, b - 1);
        } else if (a < b && b < 2 * a) {
            append(s, 4, a);
            append(s, 3, b - a - 1);
            append(s, 2, 2 * a - b - 1);
            append(s, 1, 2 * b - 2 * a - 1);
        } else if (b == 2 * a) {
            append(s, 4, a);
            append(s, 3, a - 2);
            s.push_back(2);
            append(s, 1, 2 * (a - 1));
        } else if (a == b && a >= 3) {
            append(s, 4, a - 1);
            s.push_back(3);
            append(s, 2, a - 3);
            s.push_back(1);
        } else {
            throw InputError("no closed form for " + c.label());
        }
    } else {
        if (a == b) {
            append(s, 4, a - 2);
            s.push_back(3);
            append(s, 2, a - 2);
        } else if (b <= 2 * a - 1) {
            append(s, 4, a - 1);
            append(s, 3, b - a - 1);
            append(s, 2, 2 * a - b - 1);
            append(s, 1, 2 * (b - a));
        } else {
            append(s, 4, a - 1);
            append(s, 3, a - 2);
            append(s, 2, b - 2 * a + 1);
            append(s, 1, b - 1);
        }
    }
    return s;
}

}  // namespace fatpoint
