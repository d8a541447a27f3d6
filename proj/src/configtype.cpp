#include "fatpoint/configtype.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "fatpoint/error.hpp"
#include "type_tables.hpp"

namespace fatpoint {

namespace {

constexpr int kKeyOffset = 64;

std::string encode(const std::vector<DivisorClass>& sorted, std::size_t r) {
    std::string key;
    key.reserve(2 + sorted.size() * (r + 1));
    key.push_back(static_cast<char>(r));
    key.push_back(static_cast<char>(sorted.size()));
    for (const auto& c : sorted) {
        key.push_back(static_cast<char>(c.degree() + kKeyOffset));
        for (auto m : c.mults()) key.push_back(static_cast<char>(m + kKeyOffset));
    }
    return key;
}

// Individualization-refinement search for the lexicographically least relabeled class list.
class Canonizer {
public:
    Canonizer(const std::vector<DivisorClass>& classes, std::size_t r) : classes_(classes), r_(r) {
        for (const auto& c : classes) {
            if (c.points() != r) throw DimensionError("class has wrong number of points");
            for (auto m : c.mults())
                if (m + kKeyOffset < 1 || m + kKeyOffset > 126) throw UnsupportedError("multiplicity too large to encode");
            if (c.degree() + kKeyOffset < 1 || c.degree() + kKeyOffset > 126) throw UnsupportedError("degree too large to encode");
        }
        column_.assign(r, std::vector<std::int64_t>(classes.size()));
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t p = 0; p < r; ++p) column_[p][c] = classes[c].mult(p);
    }

    CanonicalForm run() {
        std::vector<int> colors(r_, 0);
        search(colors);
        if (r_ == 0) best_.key = encode(classes_, 0);
        return best_;
    }

private:
    void refine(std::vector<int>& colors) const {
        const std::size_t nc = classes_.size();
        std::size_t distinct = count_distinct(colors);
        while (true) {
            std::vector<std::vector<std::int64_t>> csig(nc);
            for (std::size_t c = 0; c < nc; ++c) {
                std::vector<std::int64_t> parts;
                for (std::size_t p = 0; p < r_; ++p)
                    if (column_[p][c] != 0) parts.push_back(colors[p] * 1024 + column_[p][c] + 512);
                std::sort(parts.begin(), parts.end());
                csig[c].push_back(classes_[c].degree());
                csig[c].insert(csig[c].end(), parts.begin(), parts.end());
            }
            auto ccol = rank(csig);
            std::vector<std::vector<std::int64_t>> psig(r_);
            for (std::size_t p = 0; p < r_; ++p) {
                std::vector<std::int64_t> parts;
                for (std::size_t c = 0; c < nc; ++c)
                    if (column_[p][c] != 0) parts.push_back(ccol[c] * 1024 + column_[p][c] + 512);
                std::sort(parts.begin(), parts.end());
                psig[p].push_back(colors[p]);
                psig[p].insert(psig[p].end(), parts.begin(), parts.end());
            }
            colors = rank(psig);
            std::size_t now = count_distinct(colors);
            if (now == distinct) return;
            distinct = now;
        }
    }

    static std::vector<int> rank(const std::vector<std::vector<std::int64_t>>& sigs) {
        std::vector<std::size_t> order(sigs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sigs[a] < sigs[b]; });
        std::vector<int> out(sigs.size());
        int k = -1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i == 0 || sigs[order[i]] != sigs[order[i - 1]]) ++k;
            out[order[i]] = k;
        }
        return out;
    }

    static std::size_t count_distinct(const std::vector<int>& colors) {
        std::set<int> s(colors.begin(), colors.end());
        return s.size();
    }

    void search(std::vector<int> colors) {
        refine(colors);
        std::map<int, std::vector<std::size_t>> cells;
        for (std::size_t p = 0; p < r_; ++p) cells[colors[p]].push_back(p);
        const std::vector<std::size_t>* target = nullptr;
        for (const auto& [col, members] : cells)
            if (members.size() > 1) {
                target = &members;
                break;
            }
        if (!target) {
            leaf(colors);
            return;
        }
        const int c = colors[(*target)[0]];
        // twins give isomorphic subtrees; branch on one point per twin class
        std::vector<std::size_t> reps;
        for (auto v : *target) {
            bool twin = false;
            for (auto w : reps)
                if (column_[v] == column_[w]) {
                    twin = true;
                    break;
                }
            if (!twin) reps.push_back(v);
        }
        for (auto v : reps) {
            std::vector<int> next(colors);
            for (std::size_t p = 0; p < r_; ++p) {
                if (colors[p] > c || (colors[p] == c && p != v)) next[p] = colors[p] + 1;
            }
            search(std::move(next));
        }
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<std::size_t> labels(colors.begin(), colors.end());
        auto image = relabel(classes_, labels);
        std::sort(image.begin(), image.end());
        std::string key = encode(image, r_);
        if (!have_ || key < best_.key) {
            best_.key = std::move(key);
            best_.labels = std::move(labels);
            have_ = true;
        }
    }

    const std::vector<DivisorClass>& classes_;
    std::size_t r_;
    std::vector<std::vector<std::int64_t>> column_;
    CanonicalForm best_;
    bool have_ = false;
};

std::string letters_of(const DivisorClass& c) {
    std::string s;
    std::string doubled;
    for (std::size_t i = 0; i < c.points(); ++i) {
        if (c.mult(i) == 0) continue;
        std::string name;
        if (c.points() <= 26)
            name = std::string(1, static_cast<char>('a' + i));
        else
            name = "[" + std::to_string(i + 1) + "]";
        if (c.degree() == 3 && c.mult(i) == 2)
            doubled = name;
        else
            s += name;
    }
    return s + doubled;
}

}  // namespace

DivisorClass relabel(const DivisorClass& c, const std::vector<std::size_t>& perm) {
    std::vector<std::int64_t> m(c.points());
    for (std::size_t i = 0; i < c.points(); ++i) m[perm.at(i)] = c.mult(i);
    return {c.degree(), std::move(m)};
}

std::vector<DivisorClass> relabel(const std::vector<DivisorClass>& classes, const std::vector<std::size_t>& perm) {
    std::vector<DivisorClass> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(relabel(c, perm));
    return out;
}

CanonicalForm canonical_form(const std::vector<DivisorClass>& classes, std::size_t r) {
    return Canonizer(classes, r).run();
}

ConfigurationType validate(std::vector<DivisorClass> classes, std::size_t r, Mode mode) {
    if (mode == Mode::eight_points && (r < 1 || r > 8))
        throw UnsupportedError("eight-point configuration types need 1 <= r <= 8");
    if (mode == Mode::conic && r < 1) throw UnsupportedError("conic configuration types need r >= 1");
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    for (const auto& c : classes) {
        if (c.points() != r) throw DimensionError("class " + c.to_string() + " is not on " + std::to_string(r) + " points");
        bool ok = r >= 2 && self_intersection(c) <= -2;
        if (ok) {
            ok = mode == Mode::eight_points ? eight_point_family(r).contains(c) : in_conic_family(c);
        }
        if (!ok) throw InputError("not in catalog: " + c.to_string());
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (intersect(classes[i], classes[j]) < 0)
                throw InputError("incompatible classes " + classes[i].to_string() + " and " + classes[j].to_string() +
                                 " (pairing " + std::to_string(intersect(classes[i], classes[j])) + ")");
    if (mode == Mode::conic && classes.size() > 2)
        throw InputError("points on a conic carry at most two negative classes");
    ConfigurationType t;
    t.r_ = r;
    t.mode_ = mode;
    t.key_ = canonical_form(classes, r).key;
    t.classes_ = std::move(classes);
    return t;
}

std::string to_notation(const std::vector<DivisorClass>& classes) {
    std::map<std::int64_t, std::vector<std::string>> groups;
    for (const auto& c : classes) groups[c.degree()].push_back(letters_of(c));
    if (groups.empty()) return "empty";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, names] : groups) {
        std::sort(names.begin(), names.end());
        os << (first ? "" : "; ") << d << ": ";
        for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
        first = false;
    }
    return os.str();
}

std::string ConfigurationType::notation() const { return to_notation(classes_); }

ConfigurationType parse_notation(std::string_view text, std::size_t r, Mode mode) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    std::vector<DivisorClass> classes;
    if (text.empty() || text == "empty" || text == "∅") return validate({}, r, mode);
    std::int64_t degree = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find_first_of(",;", pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (tok.empty()) throw InputError("malformed type notation: empty group");
        if (auto colon = tok.find(':'); colon != std::string_view::npos) {
            auto num = trim(tok.substr(0, colon));
            if (num.size() != 1 || num[0] < '1' || num[0] > '3')
                throw InputError("malformed type notation: degree '" + std::string(num) + "'");
            degree = num[0] - '0';
            tok = trim(tok.substr(colon + 1));
        }
        if (degree == 0) throw InputError("malformed type notation: missing degree prefix");
        std::vector<std::int64_t> m(r, 0);
        std::size_t last = 0;
        for (char ch : tok) {
            if (ch < 'a' || ch >= static_cast<char>('a' + std::min<std::size_t>(r, 26)))
                throw InputError(std::string("letter '") + ch + "' out of range for r = " + std::to_string(r));
            std::size_t i = static_cast<std::size_t>(ch - 'a');
            if (m[i] != 0) throw InputError("repeated letter in type notation");
            m[i] = 1;
            last = i;
        }
        if (tok.empty()) throw InputError("malformed type notation: empty point list");
        if (degree == 3) m[last] = 2;
        classes.emplace_back(degree, std::move(m));
    }
    return validate(std::move(classes), r, mode);
}

std::vector<ConfigurationType> enumerate_raw(std::size_t r, bool lines_only) {
    if (r < 1 || r > 8) throw UnsupportedError("enumeration needs 1 <= r <= 8");
    std::vector<ConfigurationType> out;
    out.push_back(validate({}, r));
    if (r < 2) return out;
    std::vector<DivisorClass> cands;
    for (const auto& c : square_at_most(eight_point_family(r), -2))
        if (!lines_only || c.degree() == 1) cands.push_back(c);

    std::vector<std::vector<DivisorClass>> level{{}};
    while (!level.empty()) {
        std::map<std::string, std::vector<DivisorClass>> next;
        for (const auto& base : level) {
            for (const auto& c : cands) {
                if (std::binary_search(base.begin(), base.end(), c)) continue;
                bool ok = true;
                for (const auto& d : base)
                    if (intersect(c, d) < 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto grown = base;
                grown.push_back(c);
                auto cf = canonical_form(grown, r);
                if (next.count(cf.key)) continue;
                auto image = relabel(grown, cf.labels);
                std::sort(image.begin(), image.end());
                next.emplace(std::move(cf.key), std::move(image));
            }
        }
        level.clear();
        for (auto& [key, classes] : next) {
            out.push_back(validate(classes, r));
            level.push_back(std::move(classes));
        }
    }
    return out;
}

namespace {

struct BuiltinTable {
    std::vector<ConfigurationType> types;
    std::map<std::string, std::size_t> by_key;
};

const BuiltinTable& builtin_table(std::size_t r) {
    if (r < 1 || r > 8) throw LookupError("no stored type table for r = " + std::to_string(r));
    static std::array<std::once_flag, 9> flags;
    static std::array<BuiltinTable, 9> tables;
    std::call_once(flags[r], [r] {
        auto& tab = tables[r];
        const auto& rows = detail::type_table_rows(r);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto t = parse_notation(rows[i], r);
            t.set_table_id({r, i + 1});
            if (!tab.by_key.emplace(t.canonical_key(), i + 1).second)
                throw InvariantError("duplicate stored type at r = " + std::to_string(r) + " row " + std::to_string(i + 1));
            tab.types.push_back(std::move(t));
        }
    });
    return tables[r];
}

}  // namespace

std::size_t builtin_count(std::size_t r) { return builtin_table(r).types.size(); }

const ConfigurationType& builtin(std::size_t r, std::size_t index) {
    const auto& tab = builtin_table(r);
    if (index < 1 || index > tab.types.size())
        throw LookupError("no type " + std::to_string(index) + " for r = " + std::to_string(r));
    return tab.types[index - 1];
}

const std::string& builtin_notation(std::size_t r, std::size_t index) {
    const auto& rows = detail::type_table_rows(r);
    if (index < 1 || index > rows.size())
        throw LookupError("no type " + std::to_string(index) + " for r = " + std::to_string(r));
    return rows[index - 1];
}

std::optional<std::size_t> lookup_index(std::size_t r, const std::string& key) {
    const auto& tab = builtin_table(r);
    auto it = tab.by_key.find(key);
    if (it == tab.by_key.end()) return std::nullopt;
    return it->second;
}

EnumerationCheck check_enumeration(std::size_t r) {
    EnumerationCheck out;
    auto raw = enumerate_raw(r);
    const auto& tab = builtin_table(r);
    out.enumerated = raw.size();
    out.table_rows = tab.types.size();
    std::set<std::size_t> seen;
    for (const auto& t : raw) {
        auto idx = lookup_index(r, t.canonical_key());
        if (idx)
            seen.insert(*idx);
        else
            out.unmatched_enumerated.push_back(t.notation());
    }
    for (std::size_t i = 1; i <= tab.types.size(); ++i)
        if (!seen.count(i)) out.unmatched_rows.push_back(i);
    return out;
}

const std::vector<ConfigurationType>& enumerate(std::size_t r) {
    if (r < 1 || r > 8) throw UnsupportedError("enumeration needs 1 <= r <= 8");
    static std::array<std::once_flag, 9> flags;
    static std::array<std::vector<ConfigurationType>, 9> cache;
    std::call_once(flags[r], [r] {
        auto check = check_enumeration(r);
        if (!check.ok()) {
            std::ostringstream os;
            os << "enumeration for r = " << r << " disagrees with the stored table:";
            for (const auto& n : check.unmatched_enumerated) os << " extra {" << n << "}";
            for (auto i : check.unmatched_rows) os << " missing row " << i;
            throw InvariantError(os.str());
        }
        const auto& tab = builtin_table(r);
        cache[r] = tab.types;
    });
    return cache[r];
}

}  // namespace fatpoint
