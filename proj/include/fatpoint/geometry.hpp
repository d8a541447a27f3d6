#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fatpoint/configtype.hpp"
#include "fatpoint/hilbert.hpp"

namespace fatpoint {

// Q, F_p, or GF(p^k). Ranks over these agree with ranks over the algebraic
// closure, so dimensions computed here are the geometric ones.
struct ExactField {
    enum class Kind { rationals, prime_field, extension_field };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0;
    unsigned k = 1;

    static ExactField rationals() { return {}; }
    static ExactField prime(std::uint32_t p);
    static ExactField galois(std::uint32_t p, unsigned k);

    std::uint64_t characteristic() const { return kind == Kind::rationals ? 0 : p; }
    bool is_finite() const { return kind != Kind::rationals; }
    std::string name() const;  // "Q", "F_7", "GF(2^3)"
    friend bool operator==(const ExactField&, const ExactField&) = default;
};

using Point = std::array<mpq_class, 3>;

// Distinct projective points. Finite-field coordinates are stored as
// integers in [0, q).
class PointSet {
public:
    PointSet(ExactField field, std::vector<Point> points);

    const ExactField& field() const { return field_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    PointSet subset(const std::vector<std::size_t>& indices) const;
    // image under the projectivity x -> M x; throws if M is singular
    PointSet transformed(const std::array<std::array<mpq_class, 3>, 3>& m) const;

private:
    ExactField field_;
    std::vector<Point> points_;
};

// Same point in the given field (coordinates already reduced)?
bool same_point(const ExactField& f, const Point& a, const Point& b);
bool collinear(const ExactField& f, const Point& a, const Point& b, const Point& c);

// dim of degree-d forms vanishing to order >= mults[i] at point i
std::int64_t linear_system_dim(const PointSet& pts, const std::vector<std::int64_t>& mults, std::int64_t d);

ConfigurationType detect_neg(const PointSet& pts);

struct Identification {
    TableRef type;
    // permutation[i] = label in the stored type of point i
    std::vector<std::size_t> permutation;
    ConfigurationType detected;
};
Identification identify_type(const PointSet& pts);

// Basis of that space. Coefficients follow the monomial order
// X0^a X1^b X2^c with a descending, then b descending.
std::vector<std::vector<mpq_class>> linear_system_basis(const PointSet& pts, const std::vector<std::int64_t>& mults,
                                                        std::int64_t d);
bool form_vanishes(const ExactField& f, const std::vector<mpq_class>& coeffs, std::int64_t d, const Point& p);

// minimal generators of I(Z) in degree d: dim I_d - dim(R_1 I_{d-1})
std::int64_t generators_in_degree(const PointSet& pts, const std::vector<std::int64_t>& mults, std::int64_t d);
// generators by direct linear algebra, syzygies from s_i = t_i + third difference of h
BettiNumbers betti_oracle(const PointSet& pts, const std::vector<std::int64_t>& mults);

// values, delta, degree and saturation only
HilbertReport hilbert_oracle(const PointSet& pts, const std::vector<std::int64_t>& mults);

// {"field": {"kind": "Q"} | {"kind": "Fp", "p": 2} | {"kind": "GF", "p": 2, "k": 3},
//  "points": [["1","0","0"], ...]}
PointSet parse_point_file(const std::string& json_text);
std::string to_point_file(const PointSet& pts);

struct Witness {
    TableRef type;
    PointSet points;
};
// {"witnesses": [{"r": 8, "type": 12, "field": {...}, "points": [...]}, ...]}
std::vector<Witness> parse_witness_file(const std::string& json_text);
std::string to_witness_file(const std::vector<Witness>& witnesses);

}  // namespace fatpoint
