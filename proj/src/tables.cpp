#include "fatpoint/tables.hpp"

#include <map>
#include <sstream>

#include "fatpoint/configtype.hpp"
#include "fatpoint/error.hpp"
#include "fatpoint/hilbert.hpp"

namespace fatpoint {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string listing(std::size_t r, std::size_t first, std::size_t last) {
    std::ostringstream os;
    for (std::size_t i = first; i <= last; ++i) os << i << ' ' << enumerate(r)[i - 1].notation() << '\n';
    return os.str();
}

std::string hilbert_table(std::size_t r_lo, std::size_t r_hi, bool with_betti) {
    std::ostringstream os;
    for (std::size_t r = r_lo; r <= r_hi; ++r)
        for (std::int64_t m = 1; m <= 2; ++m) {
            // std::map keeps first-seen order irrelevant; groups are ordered by smallest index
            std::map<std::string, std::vector<std::size_t>> groups;
            std::vector<std::string> order;
            const std::vector<std::int64_t> mults(r, m);
            for (const auto& t : enumerate(r)) {
                std::string data = "h=" + join(hilbert_function(t, mults).values);
                if (with_betti) {
                    auto b = betti_numbers(t, mults);
                    data += " F0=" + format_betti(b.f0) + " F1=" + format_betti(b.f1);
                }
                auto [it, fresh] = groups.try_emplace(data);
                if (fresh) order.push_back(data);
                it->second.push_back(t.table_id()->index);
            }
            for (const auto& data : order) {
                os << "r=" << r << " m=" << m << " types=";
                const auto& idx = groups[data];
                for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
                os << ' ' << data << '\n';
            }
        }
    return os.str();
}

}  // namespace

std::string reproduce_table(int number) {
    switch (number) {
        case 1: return listing(6, 1, builtin_count(6));
        case 2: return hilbert_table(1, 6, true);
        case 3: return listing(7, 1, builtin_count(7));
        case 4: return hilbert_table(7, 7, false);
        case 5: return listing(8, 1, 100);
        case 6: return listing(8, 101, builtin_count(8));
        case 7: return hilbert_table(8, 8, false);
        default: throw LookupError("no table " + std::to_string(number) + "; tables are numbered 1 to 7");
    }
}

}  // namespace fatpoint
