#pragma once

#include "reiscfg/word.hpp"

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace reiscfg {

// Golden reference tables, embedded so the library is self-contained; the
// same text ships as data/fixtures/table{1,2}.txt for external tooling.
//
// Fixture text format: '#' comment lines, then "n=<n> alphabet=<a>", then one
// configuration per line, symbols space-separated.
struct Fixture {
    int n = 0;
    int alphabet = 2;
    std::vector<CyclicWord> rows;  // as stored (table 2 row 11: corrected)
};

// which = 1: the 30 rotation-symmetric isolated-ones classes at n = 24.
// which = 2: the 15 rotation-symmetric isolated ternary classes at n = 12,
//            row 11 in corrected form.
const Fixture& table_fixture(int which);

// The defective variant of table-2 row 11 (adjacent nonzeros, trivial
// stabilizer) that the corrected row replaces.
const CyclicWord& table2_row11_defective();

// Exact text of the embedded fixture file.
const std::string& fixture_text(int which);

Fixture parse_fixture(std::istream& in);

std::set<uint64_t> fixture_canonical_set(int which);

}  // namespace reiscfg
