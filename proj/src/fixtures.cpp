#include "reiscfg/fixtures.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

namespace reiscfg {

namespace {

#include "fixtures_data.inc"

Fixture parse_or_die(const char* text) {
    std::istringstream in(text);
    return parse_fixture(in);
}

}  // namespace

Fixture parse_fixture(std::istream& in) {
    Fixture f;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            int n = 0, a = 0;
            if (std::sscanf(line.c_str(), "n=%d alphabet=%d", &n, &a) != 2)
                throw DomainError("fixture: first content line must be "
                                  "\"n=<n> alphabet=<a>\"");
            f.n = n;
            f.alphabet = a;
            have_header = true;
            continue;
        }
        CyclicWord w = CyclicWord::parse(line, f.alphabet);
        if (w.n != f.n) throw DomainError("fixture: row length does not match n");
        f.rows.push_back(std::move(w));
    }
    if (!have_header) throw DomainError("fixture: missing header line");
    return f;
}

const Fixture& table_fixture(int which) {
    static const Fixture t1 = parse_or_die(kTable1Text);
    static const Fixture t2 = parse_or_die(kTable2Text);
    if (which == 1) return t1;
    if (which == 2) return t2;
    throw DomainError("table_fixture: which must be 1 or 2");
}

const CyclicWord& table2_row11_defective() {
    static const CyclicWord w = CyclicWord::parse(kRow11Defective, 3);
    return w;
}

const std::string& fixture_text(int which) {
    static const std::string t1 = kTable1Text;
    static const std::string t2 = kTable2Text;
    if (which == 1) return t1;
    if (which == 2) return t2;
    throw DomainError("fixture_text: which must be 1 or 2");
}

std::set<uint64_t> fixture_canonical_set(int which) {
    std::set<uint64_t> out;
    for (const CyclicWord& w : table_fixture(which).rows)
        out.insert(canonical_packed(pack_word(w), w.n));
    return out;
}

}  // namespace reiscfg
