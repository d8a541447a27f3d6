#include "type_tables.hpp"

#include <array>

#include "fatpoint/error.hpp"

namespace fatpoint::detail {

namespace {

// Letters name points; "2: ..." is a conic, "3: ..." a cubic doubled at its last letter.
const std::array<std::vector<std::string>, 8> kRows = {{
    {  // r = 1
        "empty",
    },
    {  // r = 2
        "empty",
    },
    {  // r = 3
        "empty",
        "1: abc",
    },
    {  // r = 4
        "empty",
        "1: abc",
        "1: abcd",
    },
    {  // r = 5
        "empty",
        "1: abc",
        "1: abcd",
        "1: abcde",
        "1: abc, ade",
    },
    {  // r = 6
        "empty",
        "1: abc",
        "1: abcd",
        "1: abcde",
        "1: abc, ade",
        "1: abcdef",
        "1: abcd, aef",
        "1: abc, def",
        "1: abc, ade, bdf",
        "1: abc, ade, bdf, cef",
        "2: abcdef",
    },
    {  // r = 7
        "empty",
        "1: abcdefg",
        "1: abcdef",
        "1: abcde",
        "1: abcd",
        "1: abc",
        "1: abcde, afg",
        "1: abcd, efg",
        "1: abcd, defg",
        "1: abcd, def",
        "1: abc, def",
        "1: abc, ade",
        "1: abcd, ceg, def",
        "1: abc, adg, def",
        "1: abc, ade, afg",
        "1: abc, ade, cef",
        "1: abcg, ade, bdf, cef",
        "1: abc, ade, bdf, ceg",
        "1: abc, ade, afg, cef",
        "1: abc, adf, bde, cef",
        "1: abc, adg, beg, cfg, def",
        "1: abc, adf, aeg, bde, cef",
        "1: abc, adf, aeg, bde, cdg, cef",
        "1: abc, adf, aeg, bde, bfg, cdg, cef",
        "2: abcdefg",
        "2: abcdef",
        "1: abg; 2: abcdef",
        "1: abg, cdg; 2: abcdef",
        "1: abg, cdg, efg; 2: abcdef",
    },
    {  // r = 8
        "empty",
        "1: abc",
        "1: abc, def",
        "1: abc, ade",
        "1: abc, ade, afg",
        "1: abc, ade, bdf",
        "1: abc, ade, bfg",
        "1: abc, ade, fgh",
        "1: abc, ade, bdf, cgh",
        "1: abc, ade, bdf, ceg",
        "1: abc, ade, bdf, cef",
        "1: abc, ade, bfg, dfh",
        "1: abc, ade, afg, bdf",
        "1: abc, ade, afg, bdh",
        "1: abc, ade, afg, bdf, ceg",
        "1: abc, ade, afg, bdf, beg",
        "1: abc, ade, afg, bdf, ceh",
        "1: abc, ade, afg, bdf, beh",
        "1: abc, ade, afg, bdh, ceh",
        "1: abc, ade, afg, bdh, cfh",
        "1: abc, ade, bdf, cgh, efg",
        "1: abc, ade, afg, bdf, beh, ceg",
        "1: abc, ade, afg, bdf, beg, cdg",
        "1: abc, ade, afg, bdf, beg, dgh",
        "1: abc, ade, afg, bdf, beg, cdh",
        "1: abc, ade, afg, bdf, bgh, ceh",
        "1: abc, ade, afg, bdh, cfh, egh",
        "1: abc, ade, afg, bdf, beh, ceg, cfh",
        "1: abc, ade, afg, bdf, beh, cdh, ceg",
        "1: abc, ade, afg, bdf, beg, cdg, cef",
        "1: abc, ade, afg, bdf, beg, cdg, ceh",
        "1: abc, ade, afg, bdf, beh, ceg, cfh, dgh",
        "3: abcdefgh",
        "1: abc; 3: abcdefgh",
        "1: abc, def; 3: abcdefgh",
        "1: abc, ade; 3: abcdefgh",
        "1: abc, ade, afg; 3: abcdefgh",
        "1: abc, ade, bdf; 3: abcdefgh",
        "1: abc, ade, bfg; 3: abcdefgh",
        "1: abc, ade, bdf, ceg; 3: abcdefgh",
        "1: abc, ade, bdf, cef; 3: abcdefgh",
        "1: abc, ade, afg, bdf; 3: abcdefgh",
        "1: abc, ade, afg, bdf, ceg; 3: abcdefgh",
        "1: abc, ade, afg, bdf, beg; 3: abcdefgh",
        "1: abc, ade, afg, bdf, beg, cdg; 3: abcdefgh",
        "1: abc, ade, afg, bdf, beg, cdg, cef; 3: abcdefgh",
        "2: abcdef; 3: abcdefgh",
        "1: abc; 2: bcdefg; 3: abcdefgh",
        "1: abc, ade; 2: bcdefg; 3: abcdefgh",
        "1: abc, ade, afg; 2: bcdefg; 3: abcdefgh",
        "2: abcdef",
        "2: abcdef, abcdgh",
        "2: abcdef, abcdgh, abefgh",
        "2: abcdef, abcdgh, abefgh, cdefgh",
        "1: abc, ade, fgh; 2: bcdegh",
        "1: abc, ade, bdf, cgh; 2: abefgh",
        "1: abc, ade, afg, bdf; 2: cdefgh",
        "1: abc, ade, afg, bdf, beg; 2: cdefgh",
        "1: abc, ade, afg, bdf, beh; 2: cdefgh",
        "1: abc, ade, afg, bdh, ceh; 2: bcdefg",
        "1: abc, ade, afg, bdh, cfh; 2: bcdefg",
        "1: abc, ade, afg, bdh, cfh, egh; 2: bcdefg",
        "1: abc; 2: cdefgh",
        "1: abc, ade; 2: bcdegh",
        "1: abc, ade, afg; 2: bcdefg",
        "1: abc, ade, bdf; 2: cdefgh",
        "1: abc, ade, bfg; 2: cdefgh",
        "1: abc, ade, afg, bdh; 2: cdefgh",
        "1: abc; 2: bcdefg",
        "1: abc, ade; 2: cdefgh",
        "1: abc, ade, afg; 2: cdefgh",
        "1: abc, ade, bdf; 2: bcdegh",
        "1: abc, ade, bfg; 2: bcdegh",
        "1: abc, ade, afg, bdh; 2: bcdefg",
        "1: abc, ade; 2: acefgh",
        "1: abc, def; 2: bcefgh",
        "1: abc, ade, bdf, ceg; 2: acdfgh",
        "1: abc, ade, bdf, cef; 2: bcdegh",
        "1: abc, ade, bfg, dfh; 2: bcdegh",
        "1: abc; 2: abefgh, cdefgh",
        "1: abc, ade; 2: acefgh, bcdegh",
        "1: abc, ade, bdf; 2: acdfgh, bcdegh",
        "1: abc; 2: abefgh, acdefg",
        "1: abc, ade; 2: acefgh, bdefgh",
        "1: abc, ade, bdf; 2: abefgh, cdefgh",
        "1: abc, ade; 2: abdfgh, acefgh",
        "1: abc, def; 2: acdfgh, bcefgh",
        "1: abc, ade, bfg; 2: acefgh, bcdegh",
        "1: abc, ade, bdf, ceg; 2: abefgh, acdfgh",
        "1: abc, ade, bdf, cef; 2: acdfgh, bcdegh",
        "1: abc, ade, bfg, dfh; 2: acefgh, bcdegh",
        "1: abc; 2: abefgh, acdefg, bcdfgh",
        "1: abc, def; 2: abdegh, acdfgh, bcefgh",
        "1: abc, ade; 2: abdfgh, acefgh, bcdegh",
        "1: abc, ade, bdf; 2: abefgh, acdfgh, bcdegh",
        "1: abc, ade, bdf, cef; 2: abefgh, acdfgh, bcdegh",
        "1: abc, ade, afgh; 2: bcdegh",
        "1: abc, defg",
        "1: abc, ade, afgh",
        "1: abc, ade, afgh, bdf",
        "1: abc, ade, afg, bdf, cegh",
        "1: abc, adeh; 2: bcdefg",
        "1: abc, ade, afgh, bdf; 2: bcdegh",
        "1: abc, adef",
        "1: abc, ade, bdfg",
        "1: abc, ade, bdf, cegh",
        "1: abc, ade, afg, bdf, begh",
        "1: abc, ade, bdfg; 2: acefgh",
        "1: abc, ade, bfgh",
        "1: abc, ade, bdf, cefg",
        "1: abc, adgh, def; 2: bcefgh",
        "1: abc, ade, afgh, bdf, cef; 2: bcdegh",
        "1: abcd",
        "1: abc, ade, afg, bdfh",
        "1: abcd, efgh",
        "1: abcd, aefg",
        "1: abc, adef, bdgh",
        "1: abc, ade, bdfg, cefh",
        "1: abc, ade, afg, bdfh, cegh",
        "1: abgh; 2: abcdef",
        "1: efgh; 2: abcdef, abcdgh",
        "1: abc, adgh, def",
        "1: abc, ade, bfg, cdfh",
        "1: abc, ade, afgh, bdf, ceg",
        "1: abc, ade, afgh, bdf, cef",
        "1: abc, ade, bfg, cegh, dfh",
        "1: abc, ade, afg, bdh, cefh",
        "1: abc, ade, afg, bdf, beg, cdgh",
        "1: abc, ade, afg, bdf, beh, cdgh",
        "1: abc, ade, afg, bdf, beg, cdg, cefh",
        "1: abc, ade, afg, bdf, beg, cefh, dgh",
        "1: abcde",
        "1: abcde, afgh",
        "1: abcde, fgh",
        "1: abcde, afg",
        "1: abcde, afg, bfh",
        "1: abcde, afg, bfh, cgh",
        "1: abcdef",
        "1: abcdef, agh",
        "1: abcdefg",
        "1: abcdefgh",
        "2: abcdefg",
        "1: abh; 2: abcdefg",
        "1: abh, cdh; 2: abcdefg",
        "1: abh, cdh, efh; 2: abcdefg",
        "2: abcdefgh",
    },
}};

}  // namespace

const std::vector<std::string>& type_table_rows(std::size_t r) {
    if (r < 1 || r > 8) throw LookupError("no type table for r = " + std::to_string(r));
    return kRows[r - 1];
}

}  // namespace fatpoint::detail
