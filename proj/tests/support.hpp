#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoint/configtype.hpp"
#include "fatpoint/geometry.hpp"

namespace testing_support {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const std::vector<fatpoint::Witness>& witnesses() {
    static const auto all = fatpoint::parse_witness_file(slurp(FATPOINT_DATA_DIR "/witnesses.json"));
    return all;
}

// ten points: p1..p5 on one line, p6..p9 on another, p10 where they meet
inline fatpoint::ConfigurationType two_line_type() {
    using fatpoint::DivisorClass;
    return fatpoint::validate({DivisorClass(1, {1, 1, 1, 1, 1, 0, 0, 0, 0, 1}), DivisorClass(1, {0, 0, 0, 0, 0, 1, 1, 1, 1, 1})},
                              10, fatpoint::Mode::conic);
}

inline const std::vector<std::int64_t>& two_line_mults() {
    static const std::vector<std::int64_t> m{4, 2, 2, 2, 2, 3, 3, 2, 2, 3};
    return m;
}

// lines y = 0 and x = 0 over Q
inline fatpoint::PointSet two_line_points() {
    std::vector<fatpoint::Point> pts;
    for (int i = 1; i <= 5; ++i) pts.push_back({mpq_class(i), mpq_class(0), mpq_class(1)});
    for (int i = 1; i <= 4; ++i) pts.push_back({mpq_class(0), mpq_class(i), mpq_class(1)});
    pts.push_back({mpq_class(0), mpq_class(0), mpq_class(1)});
    return fatpoint::PointSet(fatpoint::ExactField::rationals(), pts);
}

inline fatpoint::PointSet q_points(const std::vector<std::array<long, 3>>& coords) {
    std::vector<fatpoint::Point> pts;
    for (const auto& c : coords) pts.push_back({mpq_class(c[0]), mpq_class(c[1]), mpq_class(c[2])});
    return fatpoint::PointSet(fatpoint::ExactField::rationals(), pts);
}

inline fatpoint::PointSet fano(const fatpoint::ExactField& f) {
    std::vector<fatpoint::Point> pts;
    for (const auto& c : std::vector<std::array<long, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})
        pts.push_back({mpq_class(c[0]), mpq_class(c[1]), mpq_class(c[2])});
    return fatpoint::PointSet(f, pts);
}

inline std::vector<std::int64_t> random_mults(std::mt19937_64& rng, std::size_t r, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<std::int64_t> m(r);
    for (auto& x : m) x = pick(rng);
    return m;
}

}  // namespace testing_support
