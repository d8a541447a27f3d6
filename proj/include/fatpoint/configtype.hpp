#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoint/catalog.hpp"
#include "fatpoint/lattice.hpp"

namespace fatpoint {

struct TableRef {
    std::size_t r = 0;
    std::size_t index = 0;
    friend bool operator==(const TableRef&, const TableRef&) = default;
};

// A pairwise nonnegative set of candidate classes of square <= -2.
class ConfigurationType {
public:
    ConfigurationType() = default;

    std::size_t r() const { return r_; }
    Mode mode() const { return mode_; }
    const std::vector<DivisorClass>& classes() const { return classes_; }
    const std::string& canonical_key() const { return key_; }
    const std::optional<TableRef>& table_id() const { return table_id_; }
    void set_table_id(TableRef ref) { table_id_ = ref; }

    std::string notation() const;

private:
    friend ConfigurationType validate(std::vector<DivisorClass>, std::size_t, Mode);
    std::size_t r_ = 0;
    Mode mode_ = Mode::eight_points;
    std::vector<DivisorClass> classes_;
    std::string key_;
    std::optional<TableRef> table_id_;
};

// Throws InputError on a non-candidate or on an incompatible pair.
ConfigurationType validate(std::vector<DivisorClass> classes, std::size_t r, Mode mode = Mode::eight_points);

struct CanonicalForm {
    std::string key;
    // labels[i] is the canonical label of point i
    std::vector<std::size_t> labels;
};

CanonicalForm canonical_form(const std::vector<DivisorClass>& classes, std::size_t r);
inline std::string canonical_key(const ConfigurationType& t) { return t.canonical_key(); }

// new_mults[perm[i]] = mults[i]
DivisorClass relabel(const DivisorClass& c, const std::vector<std::size_t>& perm);
std::vector<DivisorClass> relabel(const std::vector<DivisorClass>& classes, const std::vector<std::size_t>& perm);

ConfigurationType parse_notation(std::string_view text, std::size_t r, Mode mode = Mode::eight_points);
std::string to_notation(const std::vector<DivisorClass>& classes);

// Raw extend-and-dedupe closure, ordered by (size, canonical key).
std::vector<ConfigurationType> enumerate_raw(std::size_t r, bool lines_only = false);

struct EnumerationCheck {
    std::size_t enumerated = 0;
    std::size_t table_rows = 0;
    std::vector<std::string> unmatched_enumerated;  // notations
    std::vector<std::size_t> unmatched_rows;
    bool ok() const { return unmatched_enumerated.empty() && unmatched_rows.empty(); }
};
EnumerationCheck check_enumeration(std::size_t r);

// Enumerated types in table order (cached); throws if enumeration and table disagree.
const std::vector<ConfigurationType>& enumerate(std::size_t r);

std::size_t builtin_count(std::size_t r);
const ConfigurationType& builtin(std::size_t r, std::size_t index);
const std::string& builtin_notation(std::size_t r, std::size_t index);
std::optional<std::size_t> lookup_index(std::size_t r, const std::string& key);

}  // namespace fatpoint
