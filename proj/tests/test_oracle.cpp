#include "doctest.h"

#include "reiscfg/fixtures.hpp"
#include "reiscfg/oracle.hpp"
#include "reiscfg/word.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace reiscfg;

namespace {

CyclicWord random_word(std::mt19937& rng, int n, int alphabet) {
    CyclicWord w;
    w.n = n;
    w.alphabet = alphabet;
    std::uniform_int_distribution<int> sym(0, alphabet - 1);
    for (int i = 0; i < n; ++i) w.symbols.push_back(static_cast<uint8_t>(sym(rng)));
    return w;
}

std::vector<ClassRecord> rotsym_subset(const ClassTable& t) {
    std::vector<ClassRecord> out;
    for (const ClassRecord& r : t.records)
        if (r.stabilizer >= 2) out.push_back(r);
    return out;
}

bool records_equal(const ClassRecord& a, const ClassRecord& b) {
    return a.packed == b.packed && a.axes_mask == b.axes_mask && a.k == b.k &&
           a.stabilizer == b.stabilizer && a.min_run == b.min_run;
}

}  // namespace

TEST_CASE("CyclicWord: parsing and rendering") {
    CyclicWord a = CyclicWord::parse("001001");
    CyclicWord b = CyclicWord::parse("0 0 1 0 0 1");
    CyclicWord c = CyclicWord::parse("0,0,1,0,0,1");
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.n == 6);
    CHECK(a.alphabet == 2);
    CHECK(a.digits() == "001001");
    CHECK(a.spaced() == "0 0 1 0 0 1");

    CHECK(CyclicWord::parse("0102").alphabet == 3);
    CHECK(CyclicWord::parse("0011", 3).alphabet == 3);
    CHECK_THROWS_AS(CyclicWord::parse("013"), DomainError);
    CHECK_THROWS_AS(CyclicWord::parse(""), DomainError);
    CHECK_THROWS_AS(CyclicWord::parse("12", 2), DomainError);  // '2' outside alphabet
}

TEST_CASE("packed representation: roundtrip, rotation, reversal") {
    CyclicWord w = CyclicWord::parse("100110");
    uint64_t v = pack_word(w);
    CHECK(unpack_word(v, 6, 2) == w);
    CHECK(unpack_word(rotate1(v, 6), 6, 2).digits() == "001101");
    CHECK(unpack_word(reverse_packed(v, 6), 6, 2).digits() == "011001");
    // packed order is lexicographic order
    CHECK(pack_word(CyclicWord::parse("001011")) < pack_word(CyclicWord::parse("001101")));
    CHECK(pack_word(CyclicWord::parse("0102")) < pack_word(CyclicWord::parse("0120")));
}

TEST_CASE("canonical form: pinned examples") {
    CHECK(canonical_form(CyclicWord::parse("110000")).digits() == "000011");
    CHECK(canonical_form(CyclicWord::parse("102000102000")).digits() == "000102000102");
    CHECK(canonical_form(CyclicWord::parse("000011")).digits() == "000011");
    CHECK(canonical_form(CyclicWord::parse("1")).digits() == "1");
    // reversal can win where no rotation does
    CHECK(canonical_form(CyclicWord::parse("001101")).digits() == "001011");
}

TEST_CASE("canonical form: idempotent and constant on each dihedral orbit") {
    std::mt19937 rng(424242);
    for (int n = 1; n <= 16; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            int alphabet = (trial % 2) ? 3 : 2;
            CyclicWord w = random_word(rng, n, alphabet);
            uint64_t canon = canonical_packed(pack_word(w), n);
            CHECK(canonical_packed(canon, n) == canon);  // idempotence
            CHECK(is_canonical_packed(canon, n));

            uint64_t cur = pack_word(w);
            for (int r = 0; r < n; ++r) {
                REQUIRE(canonical_packed(cur, n) == canon);
                REQUIRE(canonical_packed(reverse_packed(cur, n), n) == canon);
                cur = rotate1(cur, n);
            }
        }
    }
}

TEST_CASE("symmetry profile: stabilizer structure on random words") {
    std::mt19937 rng(777);
    for (int n = 1; n <= 16; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            CyclicWord w = random_word(rng, n, (trial % 2) ? 3 : 2);
            SymmetryProfile p = symmetry_profile(w);
            REQUIRE(n % p.stabilizer_order == 0);
            REQUIRE(p.minimal_period * p.stabilizer_order == n);
            // rotation by t fixes the word exactly when the period divides t
            uint64_t v = pack_word(w);
            uint64_t cur = v;
            for (int t = 1; t <= n; ++t) {
                cur = rotate1(cur, n);
                REQUIRE((cur == v) == (t % p.minimal_period == 0));
            }
        }
    }
}

TEST_CASE("symmetry profile: pinned axes") {
    SymmetryProfile p = symmetry_profile(CyclicWord::parse("010101"));
    CHECK(p.stabilizer_order == 3);
    CHECK(p.minimal_period == 2);
    REQUIRE(p.axes.size() == 3);
    for (const AxisInfo& a : p.axes) {
        CHECK(a.kind == AxisKind::PointPoint);
        CHECK(a.values[0] + a.values[1] == 1);  // one endpoint 0, the other 1
    }

    p = symmetry_profile(CyclicWord::parse("1111"));
    CHECK(p.stabilizer_order == 4);
    REQUIRE(p.axes.size() == 4);
    int pp = 0, gg = 0;
    for (const AxisInfo& a : p.axes) {
        if (a.kind == AxisKind::PointPoint) ++pp;
        if (a.kind == AxisKind::GapGap) ++gg;
    }
    CHECK(pp == 2);
    CHECK(gg == 2);

    p = symmetry_profile(CyclicWord::parse("000011"));
    CHECK(p.stabilizer_order == 1);
    REQUIRE(p.axes.size() == 1);
    CHECK(p.axes[0].kind == AxisKind::GapGap);
    CHECK(p.axes[0].c == 3);

    p = symmetry_profile(CyclicWord::parse("001011"));
    CHECK(p.axes.empty());

    // odd n: every axis touches exactly one point
    p = symmetry_profile(CyclicWord::parse("110"));
    REQUIRE(p.axes.size() == 1);
    CHECK(p.axes[0].kind == AxisKind::PointGap);
    CHECK(p.axes[0].points[0] == 2);
    CHECK(p.axes[0].values[0] == 0);
}

TEST_CASE("axis descriptions use 1-based positions") {
    SymmetryProfile p = symmetry_profile(CyclicWord::parse("010101"));
    bool found = false;
    for (const AxisInfo& a : p.axes)
        if (axis_description(a, 6) ==
            "point-point axis through positions 1 and 4 (values 0,1)")
            found = true;
    CHECK(found);

    AxisInfo gg;
    gg.kind = AxisKind::GapGap;
    gg.c = 23;
    CHECK(axis_description(gg, 24) == "gap-gap axis through the arcs (12,13) and (24,1)");

    p = symmetry_profile(CyclicWord::parse("000011"));
    CHECK(axis_description(p.axes[0], 6) == "gap-gap axis through the arcs (2,3) and (5,6)");

    p = symmetry_profile(CyclicWord::parse("110"));
    CHECK(axis_description(p.axes[0], 3) ==
          "point-gap axis through position 3 (value 0) and the arc (1,2)");
}

TEST_CASE("gap predicate and minimal zero run") {
    CHECK(min_zero_run(CyclicWord::parse("0000")) == kAllZeroRun);
    CHECK(min_zero_run(CyclicWord::parse("0001")) == 3);
    CHECK(min_zero_run(CyclicWord::parse("010101")) == 1);
    CHECK(min_zero_run(CyclicWord::parse("001001")) == 2);
    CHECK(min_zero_run(CyclicWord::parse("011000")) == 0);
    CHECK(min_zero_run(CyclicWord::parse("102000102000", 3)) == 1);

    CHECK(satisfies_gap(CyclicWord::parse("010101"), 1));
    CHECK_FALSE(satisfies_gap(CyclicWord::parse("0110"), 1));
    CHECK(satisfies_gap(CyclicWord::parse("0000"), 3));
    CHECK(satisfies_gap(CyclicWord::parse("0001"), 3));        // lone run of 3
    CHECK_FALSE(satisfies_gap(CyclicWord::parse("0001"), 4));
    CHECK(satisfies_gap(CyclicWord::parse("011000"), 0));
    CHECK_THROWS_AS(satisfies_gap(CyclicWord::parse("01"), -1), DomainError);
}

TEST_CASE("naive tables: hand-derivable small counts") {
    ClassTable t4 = build_table_naive(4, 2);
    CHECK(t4.records.size() == 6);  // includes the all-zero class
    ClassTable t6 = build_table_naive(6, 2);
    CHECK(t6.records.size() == 13);
    CHECK(t6.records[0].k == 0);
    CHECK(t6.records[0].min_run == kAllZeroRun);

    ClassTable t1 = build_table_naive(1, 2);
    CHECK(t1.records.size() == 2);
}

TEST_CASE("naive scan cap") {
    CHECK_THROWS_AS(build_table_naive(26, 2), CapExceeded);
    CHECK_THROWS_AS(build_table_naive(17, 3), CapExceeded);
    CHECK_THROWS_AS(build_table_naive(0, 2), DomainError);
    CHECK_THROWS_AS(build_table_naive(33, 2), DomainError);
}

TEST_CASE("seed engine agrees with the naive engine for n <= 14") {
    for (int alphabet : {2, 3}) {
        for (int n = 1; n <= 14; ++n) {
            ClassTable naive = build_table_naive(n, alphabet);
            ClassTable seed = build_table_seed(n, alphabet);
            std::vector<ClassRecord> expect = rotsym_subset(naive);
            REQUIRE(seed.records.size() == expect.size());
            for (size_t i = 0; i < expect.size(); ++i)
                REQUIRE(records_equal(seed.records[i], expect[i]));
        }
    }
}

TEST_CASE("seed engine reaches beyond the naive cap") {
    ClassTable t = build_table_seed(26, 2);
    CHECK(t.rotsym_only);
    CHECK(!t.records.empty());
    for (const ClassRecord& r : t.records) CHECK(r.stabilizer >= 2);
}

TEST_CASE("worker partitioning never changes the table") {
    const char* saved = std::getenv("REISCFG_WORKERS");
    std::string saved_value = saved ? saved : "";

    setenv("REISCFG_WORKERS", "1", 1);
    ClassTable one = build_table_naive(12, 2);
    setenv("REISCFG_WORKERS", "2", 1);
    ClassTable two = build_table_naive(12, 2);
    setenv("REISCFG_WORKERS", "5", 1);
    ClassTable five = build_table_naive(12, 2);

    if (saved)
        setenv("REISCFG_WORKERS", saved_value.c_str(), 1);
    else
        unsetenv("REISCFG_WORKERS");

    REQUIRE(one.records.size() == two.records.size());
    REQUIRE(one.records.size() == five.records.size());
    for (size_t i = 0; i < one.records.size(); ++i) {
        REQUIRE(records_equal(one.records[i], two.records[i]));
        REQUIRE(records_equal(one.records[i], five.records[i]));
    }
    CHECK(worker_count() >= 1);
}

TEST_CASE("enumerate_classes: sorted, duplicate-free, consistent with count") {
    std::vector<Query> queries;
    for (int n : {1, 2, 3, 5, 8, 12, 16, 20}) {
        Query q;
        q.n = n;
        queries.push_back(q);
        q.min_gap = 1;
        queries.push_back(q);
        q.require_rotsym = true;
        queries.push_back(q);
        q.require_reflective = true;
        queries.push_back(q);
        if (n >= 6) {
            Query qk;
            qk.n = n;
            qk.k = 3;
            queries.push_back(qk);
            qk.min_gap = 2;
            qk.k = 2;
            queries.push_back(qk);
        }
    }
    for (const Query& q : queries) {
        std::vector<CyclicWord> rows = enumerate_classes(q);
        CHECK(count_classes(q) == BigCount(rows.size()));
        for (size_t i = 0; i < rows.size(); ++i) {
            REQUIRE(canonical_form(rows[i]) == rows[i]);
            if (i) {
                int ka = 0, kb = 0;
                for (uint8_t s : rows[i - 1].symbols) ka += (s != 0);
                for (uint8_t s : rows[i].symbols) kb += (s != 0);
                REQUIRE(std::pair(ka, pack_word(rows[i - 1])) <
                        std::pair(kb, pack_word(rows[i])));
            }
        }
    }
}

TEST_CASE("query validation") {
    Query q;
    q.n = 0;
    CHECK_THROWS_AS(count_classes(q), DomainError);
    q.n = 33;
    CHECK_THROWS_AS(count_classes(q), DomainError);
    q.n = 6;
    q.alphabet = 4;
    CHECK_THROWS_AS(count_classes(q), DomainError);
    q.alphabet = 2;
    q.k = 0;
    CHECK_THROWS_AS(count_classes(q), DomainError);
    q.k = 7;
    CHECK_THROWS_AS(count_classes(q), DomainError);
    q.k.reset();
    q.min_gap = -1;
    CHECK_THROWS_AS(count_classes(q), DomainError);
    q.min_gap = 0;
    q.axis_filter = AxisFilter::PointConnecting;
    q.axis_value_a = 0;
    q.axis_value_b = 2;  // outside the binary alphabet
    CHECK_THROWS_AS(count_classes(q), DomainError);

    Query plain;
    plain.n = 8;
    CHECK_THROWS_AS(count_classes(plain, Engine::Seed), DomainError);
}

TEST_CASE("axis filters: full n = 6 binary census") {
    Query q;
    q.n = 6;

    AxisBreakdown b = axis_breakdown(q);
    CHECK(b.no_axis == 1);       // the lone chiral class
    CHECK(b.gap_gap_only == 2);
    CHECK(b.point_axis == 9);
    CHECK(b.no_axis + b.gap_gap_only + b.point_axis == count_classes(q));
    CHECK(b.point_pairs.at({0, 1}) == 4);
    CHECK(b.point_pairs.at({0, 0}) == 2);
    CHECK(b.point_pairs.at({1, 1}) == 3);
    CHECK(b.point_gap_values.empty());  // even n has no point-gap axes

    q.axis_filter = AxisFilter::NoAxis;
    CHECK(count_classes(q) == 1);
    CHECK(enumerate_classes(q)[0].digits() == "001011");

    q.axis_filter = AxisFilter::GapGapOnly;
    CHECK(count_classes(q) == 2);

    q.axis_filter = AxisFilter::PointConnecting;
    q.axis_value_a = 0;
    q.axis_value_b = 1;
    CHECK(count_classes(q) == 4);
    bool has_010101 = false;
    for (const CyclicWord& w : enumerate_classes(q))
        if (w.digits() == "010101") has_010101 = true;
    CHECK(has_010101);
}

TEST_CASE("axis filters: odd n has no point-point pairs and no gap-gap-only classes") {
    Query q;
    q.n = 5;
    q.axis_filter = AxisFilter::GapGapOnly;
    CHECK(count_classes(q) == 0);
    q.axis_filter = AxisFilter::PointConnecting;
    q.axis_value_a = 0;
    q.axis_value_b = 1;
    CHECK(count_classes(q) == 0);

    Query plain;
    plain.n = 5;
    AxisBreakdown b = axis_breakdown(plain);
    CHECK(b.point_pairs.empty());
    CHECK(!b.point_gap_values.empty());
}

TEST_CASE("golden table 1: thirty classes, exact set, k-distribution") {
    Query q;
    q.n = 24;
    q.min_gap = 1;
    q.require_rotsym = true;

    std::vector<CyclicWord> rows = enumerate_classes(q);
    REQUIRE(rows.size() == 30);

    std::set<uint64_t> got;
    std::map<int, int> kdist;
    for (const CyclicWord& w : rows) {
        got.insert(pack_word(w));
        int k = 0;
        for (uint8_t s : w.symbols) k += (s != 0);
        ++kdist[k];
    }
    CHECK(got == fixture_canonical_set(1));
    CHECK(kdist == std::map<int, int>{
                       {2, 1}, {3, 1}, {4, 5}, {6, 9}, {8, 8}, {9, 2}, {10, 3}, {12, 1}});

    AxisBreakdown b = axis_breakdown(q);
    CHECK(b.no_axis == 5);
    CHECK(b.gap_gap_only == 4);
    CHECK(b.point_axis == 21);
    CHECK(b.point_pairs.at({0, 1}) == 3);
}

TEST_CASE("golden table 2: fifteen ternary classes, row-11 correction") {
    Query q;
    q.n = 12;
    q.alphabet = 3;
    q.min_gap = 1;
    q.require_rotsym = true;

    std::vector<CyclicWord> rows = enumerate_classes(q);
    REQUIRE(rows.size() == 15);
    std::set<uint64_t> got;
    for (const CyclicWord& w : rows) got.insert(pack_word(w));
    CHECK(got == fixture_canonical_set(2));

    q.require_reflective = true;
    CHECK(count_classes(q) == 14);

    // the defective printed row fails both conditions the table demands
    const CyclicWord& bad = table2_row11_defective();
    CHECK_FALSE(satisfies_gap(bad, 1));
    CHECK(symmetry_profile(bad).stabilizer_order == 1);
    CHECK(!got.count(canonical_packed(pack_word(bad), 12)));

    // its corrected replacement is a genuine class of the table
    const Fixture& f = table_fixture(2);
    CHECK(f.rows[10].digits() == "100200100200");
    CHECK(got.count(canonical_packed(pack_word(f.rows[10]), 12)) == 1);

    // the unique class without any axis is row 15
    q.require_reflective = false;
    std::vector<CyclicWord> chiral;
    for (const CyclicWord& w : rows)
        if (symmetry_profile(w).axes.empty()) chiral.push_back(w);
    REQUIRE(chiral.size() == 1);
    CHECK(chiral[0] == canonical_form(f.rows[14]));
    CHECK(f.rows[14].digits() == "102000102000");
}

TEST_CASE("fixture files on disk match the embedded copies") {
    for (int which : {1, 2}) {
        std::string path = std::string(REISCFG_SOURCE_DIR) + "/data/fixtures/table" +
                           std::to_string(which) + ".txt";
        std::ifstream in(path);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == fixture_text(which));

        std::istringstream again(buf.str());
        Fixture f = parse_fixture(again);
        const Fixture& embedded = table_fixture(which);
        CHECK(f.n == embedded.n);
        CHECK(f.alphabet == embedded.alphabet);
        REQUIRE(f.rows.size() == embedded.rows.size());
        for (size_t i = 0; i < f.rows.size(); ++i) CHECK(f.rows[i] == embedded.rows[i]);
    }
}

TEST_CASE("fixture parser: malformed input") {
    std::istringstream no_header("1 0 1\n");
    CHECK_THROWS_AS(parse_fixture(no_header), DomainError);
    std::istringstream bad_row("n=4 alphabet=2\n1 0 1\n");
    CHECK_THROWS_AS(parse_fixture(bad_row), DomainError);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_fixture(empty), DomainError);
    CHECK_THROWS_AS(table_fixture(3), DomainError);
    CHECK_THROWS_AS(fixture_text(0), DomainError);
}

TEST_CASE("cached tables serve both engines consistently") {
    Query q;
    q.n = 12;
    q.min_gap = 1;
    q.require_rotsym = true;
    BigCount via_auto = count_classes(q, Engine::Auto);
    BigCount via_naive = count_classes(q, Engine::Naive);
    BigCount via_seed = count_classes(q, Engine::Seed);
    CHECK(via_auto == 5);
    CHECK(via_naive == 5);
    CHECK(via_seed == 5);
}
