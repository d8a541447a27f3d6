#pragma once

#include <string>

namespace fatpoint {

// Regenerates one of the bundled reference tables (1..7) as text.
// Type listings: "N notation" per row. Hilbert tables: one line per group of
// types sharing the same data, "r=R m=M types=... h=... [F0=... F1=...]".
std::string reproduce_table(int number);

}  // namespace fatpoint
