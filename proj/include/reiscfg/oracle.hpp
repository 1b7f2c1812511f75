#pragma once

#include "reiscfg/numtheory.hpp"
#include "reiscfg/word.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace reiscfg {

// Exhaustive-search ground truth, independent of every closed form it
// validates.

struct CapExceeded : DomainError {
    using DomainError::DomainError;
};

enum class AxisFilter {
    None,            // no axis constraint
    NoAxis,          // classes without any reflection axis
    GapGapOnly,      // reflective, but every axis is gap-gap
    PointConnecting  // some point axis carries the given value pair
};

struct Query {
    int n = 0;
    int alphabet = 2;
    long long min_gap = 0;                 // m
    std::optional<long long> k;            // exact nonzero-symbol count
    bool require_rotsym = false;
    bool require_reflective = false;
    AxisFilter axis_filter = AxisFilter::None;
    int axis_value_a = -1, axis_value_b = -1;  // for PointConnecting
};

// One dihedral class: canonical packed word plus the per-class facts every
// query filters on. The all-zero class is kept in the table (k = 0) but every
// query excludes it.
struct ClassRecord {
    uint64_t packed;
    uint32_t axes_mask;     // bit c set iff reflection j -> c-j fixes the word
    uint8_t k;              // nonzero-symbol count
    uint8_t stabilizer;     // rotational stabilizer order
    uint8_t min_run;        // min circular zero-run (kAllZeroRun if k = 0)
};

struct ClassTable {
    int n = 0;
    int alphabet = 2;
    bool rotsym_only = false;  // seed engine: only stabilizer >= 2 classes
    std::vector<ClassRecord> records;  // sorted by (k, packed)
};

enum class Engine { Auto, Naive, Seed };

// Stateless builders (no cache), used by the engine-agreement property suite.
ClassTable build_table_naive(int n, int alphabet);  // full alphabet^n scan
ClassTable build_table_seed(int n, int alphabet);   // periodic words only

// Cached lookup; naive tables are built once per (n, alphabet), seed tables
// once per (n, alphabet). Thread-safe. Naive scan requires alphabet^n within
// the cap below; the seed engine works for any n <= kMaxWordLen.
inline constexpr double kNaiveCapLog2 = 25.0;  // alphabet^n <= 2^25
const ClassTable& class_table(int n, int alphabet, bool rotsym_only);

bool record_matches(const ClassRecord& r, const ClassTable& t, const Query& q);

// Every class satisfying q, exactly once, sorted by (k, canonical). The
// result is identical for any worker count.
std::vector<CyclicWord> enumerate_classes(const Query& q, Engine e = Engine::Auto);

// Cardinality of the above without materializing words.
BigCount count_classes(const Query& q, Engine e = Engine::Auto);

// Partition of the matching classes by axis geometry. The three top-level
// buckets are disjoint; point_pairs counts a class under every distinct
// value pair among its point axes (so those can overlap across pairs).
struct AxisBreakdown {
    BigCount no_axis{0};
    BigCount gap_gap_only{0};
    BigCount point_axis{0};
    std::map<std::pair<int, int>, BigCount> point_pairs;
    std::map<int, BigCount> point_gap_values;  // odd n: value at the point end
};
AxisBreakdown axis_breakdown(const Query& q, Engine e = Engine::Auto);

// Worker cap: REISCFG_WORKERS (>=1) if set, else hardware concurrency.
int worker_count();

}  // namespace reiscfg
