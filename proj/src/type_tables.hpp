#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fatpoint::detail {

// Row i (1-based) of the stored type table for r points is rows[i-1].
const std::vector<std::string>& type_table_rows(std::size_t r);

}  // namespace fatpoint::detail
