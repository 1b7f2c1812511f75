#include "reiscfg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

namespace reiscfg {

namespace {

void require_query(const Query& q) {
    if (q.n < 1 || q.n > kMaxWordLen)
        throw DomainError("query: n must be between 1 and " +
                          std::to_string(kMaxWordLen));
    if (q.alphabet != 2 && q.alphabet != 3)
        throw DomainError("query: alphabet must be 2 or 3");
    if (q.min_gap < 0) throw DomainError("query: min gap must be >= 0");
    if (q.k && (*q.k < 1 || *q.k > q.n))
        throw DomainError("query: k must satisfy 1 <= k <= n");
    if (q.axis_filter == AxisFilter::PointConnecting) {
        for (int v : {q.axis_value_a, q.axis_value_b})
            if (v < 0 || v >= q.alphabet)
                throw DomainError("query: axis values must lie in the alphabet");
    }
}

uint64_t pow_u64(uint64_t base, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

int packed_digit(uint64_t v, int n, int i) {
    return static_cast<int>((v >> (2 * (n - 1 - i))) & 3);
}

ClassRecord make_record(uint64_t packed, int n, int alphabet) {
    CyclicWord w = unpack_word(packed, n, alphabet);
    SymmetryProfile p = symmetry_profile(w);
    ClassRecord r;
    r.packed = packed;
    r.axes_mask = 0;
    for (const AxisInfo& a : p.axes) r.axes_mask |= (1u << a.c);
    int k = 0;
    for (uint8_t s : w.symbols)
        if (s != 0) ++k;
    r.k = static_cast<uint8_t>(k);
    r.stabilizer = static_cast<uint8_t>(p.stabilizer_order);
    r.min_run = static_cast<uint8_t>(min_zero_run(w));
    return r;
}

void sort_records(std::vector<ClassRecord>& rs) {
    std::sort(rs.begin(), rs.end(), [](const ClassRecord& a, const ClassRecord& b) {
        return std::tie(a.k, a.packed) < std::tie(b.k, b.packed);
    });
}

// Scan indices [begin, end) of the odometer enumeration of alphabet^n words,
// appending a record for every canonical form encountered.
void scan_chunk(int n, int alphabet, uint64_t begin, uint64_t end,
                std::vector<ClassRecord>& out) {
    std::vector<int> digit(n, 0);
    uint64_t idx = begin;
    for (int i = n - 1; i >= 0; --i) {
        digit[i] = static_cast<int>(idx % alphabet);
        idx /= alphabet;
    }
    uint64_t v = 0;
    for (int i = 0; i < n; ++i) v = (v << 2) | static_cast<uint64_t>(digit[i]);

    for (uint64_t count = end - begin; count > 0; --count) {
        if (is_canonical_packed(v, n)) out.push_back(make_record(v, n, alphabet));
        // odometer increment, keeping the packed value in step
        for (int i = n - 1; i >= 0; --i) {
            const int shift = 2 * (n - 1 - i);
            if (digit[i] + 1 < alphabet) {
                ++digit[i];
                v += uint64_t{1} << shift;
                break;
            }
            v -= uint64_t(digit[i]) << shift;
            digit[i] = 0;
        }
    }
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("REISCFG_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

ClassTable build_table_naive(int n, int alphabet) {
    if (n < 1 || n > kMaxWordLen) throw DomainError("n must be between 1 and 32");
    if (n * std::log2(double(alphabet)) > kNaiveCapLog2)
        throw CapExceeded("naive scan cap exceeded: " + std::to_string(alphabet) +
                          "^" + std::to_string(n) + " words");
    const uint64_t total = pow_u64(alphabet, n);
    const int workers =
        static_cast<int>(std::min<uint64_t>(worker_count(), total));

    std::vector<std::vector<ClassRecord>> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        uint64_t begin = total / workers * w + std::min<uint64_t>(w, total % workers);
        uint64_t end =
            total / workers * (w + 1) + std::min<uint64_t>(w + 1, total % workers);
        if (workers == 1)
            scan_chunk(n, alphabet, begin, end, parts[w]);
        else
            pool.emplace_back(scan_chunk, n, alphabet, begin, end, std::ref(parts[w]));
    }
    for (auto& t : pool) t.join();

    ClassTable table;
    table.n = n;
    table.alphabet = alphabet;
    table.rotsym_only = false;
    for (auto& p : parts)
        table.records.insert(table.records.end(), p.begin(), p.end());
    sort_records(table.records);
    return table;
}

ClassTable build_table_seed(int n, int alphabet) {
    if (n < 1 || n > kMaxWordLen) throw DomainError("n must be between 1 and 32");
    ClassTable table;
    table.n = n;
    table.alphabet = alphabet;
    table.rotsym_only = true;
    if (n == 1) return table;  // a single point has no smaller rotation

    std::set<uint64_t> canon;
    for (long long p : divisors(n)) {
        if (p < 2) continue;
        bool prime = true;
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        const int q = n / static_cast<int>(p);
        const uint64_t seeds = pow_u64(alphabet, q);
        for (uint64_t s = 0; s < seeds; ++s) {
            // packed seed: re-encode base-alphabet index as base-4 digits
            uint64_t sp = 0;
            uint64_t x = s;
            for (int i = 0; i < q; ++i) {
                sp |= (x % alphabet) << (2 * i);
                x /= alphabet;
            }
            uint64_t v = 0;
            for (long long rep = 0; rep < p; ++rep) v = (v << (2 * q)) | sp;
            canon.insert(canonical_packed(v, n));
        }
    }
    for (uint64_t v : canon) table.records.push_back(make_record(v, n, alphabet));
    sort_records(table.records);
    return table;
}

const ClassTable& class_table(int n, int alphabet, bool rotsym_only) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, ClassTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, alphabet, rotsym_only);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ClassTable t = rotsym_only ? build_table_seed(n, alphabet)
                                   : build_table_naive(n, alphabet);
        it = cache.emplace(key, std::move(t)).first;
    }
    return it->second;
}

bool record_matches(const ClassRecord& r, const ClassTable& t, const Query& q) {
    if (r.k == 0) return false;  // the all-zero class never counts
    if (q.k && r.k != *q.k) return false;
    if (q.min_gap > 0 && r.min_run < q.min_gap) return false;
    if (q.require_rotsym && r.stabilizer < 2) return false;
    if (q.require_reflective && r.axes_mask == 0) return false;

    const int n = t.n;
    const uint32_t pp_bits =
        (n % 2 == 0) ? (0x55555555u & (n == 32 ? 0xffffffffu : ((1u << n) - 1)))
                     : 0u;
    switch (q.axis_filter) {
        case AxisFilter::None:
            return true;
        case AxisFilter::NoAxis:
            return r.axes_mask == 0;
        case AxisFilter::GapGapOnly:
            // only possible for even n; every axis of an odd-n word has a
            // point endpoint
            return r.axes_mask != 0 && n % 2 == 0 && (r.axes_mask & pp_bits) == 0;
        case AxisFilter::PointConnecting: {
            if (n % 2 != 0) return false;  // pairs need two point endpoints
            int lo = std::min(q.axis_value_a, q.axis_value_b);
            int hi = std::max(q.axis_value_a, q.axis_value_b);
            uint32_t bits = r.axes_mask & pp_bits;
            while (bits) {
                int c = std::countr_zero(bits);
                bits &= bits - 1;
                int a = packed_digit(r.packed, n, c / 2);
                int b = packed_digit(r.packed, n, c / 2 + n / 2);
                if (std::min(a, b) == lo && std::max(a, b) == hi) return true;
            }
            return false;
        }
    }
    return false;
}

namespace {

const ClassTable& table_for(const Query& q, Engine e) {
    require_query(q);
    switch (e) {
        case Engine::Naive:
            return class_table(q.n, q.alphabet, false);
        case Engine::Seed:
            if (!q.require_rotsym)
                throw DomainError(
                    "seed engine only answers rotation-symmetric queries");
            return class_table(q.n, q.alphabet, true);
        case Engine::Auto:
        default:
            return class_table(q.n, q.alphabet, q.require_rotsym);
    }
}

}  // namespace

std::vector<CyclicWord> enumerate_classes(const Query& q, Engine e) {
    const ClassTable& t = table_for(q, e);
    std::vector<CyclicWord> out;
    for (const ClassRecord& r : t.records)
        if (record_matches(r, t, q)) out.push_back(unpack_word(r.packed, t.n, t.alphabet));
    return out;
}

BigCount count_classes(const Query& q, Engine e) {
    const ClassTable& t = table_for(q, e);
    BigCount c = 0;
    for (const ClassRecord& r : t.records)
        if (record_matches(r, t, q)) ++c;
    return c;
}

AxisBreakdown axis_breakdown(const Query& q, Engine e) {
    const ClassTable& t = table_for(q, e);
    const int n = t.n;
    AxisBreakdown out;
    for (const ClassRecord& r : t.records) {
        if (!record_matches(r, t, q)) continue;
        if (r.axes_mask == 0) {
            ++out.no_axis;
            continue;
        }
        CyclicWord w = unpack_word(r.packed, n, t.alphabet);
        SymmetryProfile p = symmetry_profile(w);
        bool touches_point = false;
        std::set<std::pair<int, int>> pairs;
        std::set<int> pg_values;
        for (const AxisInfo& a : p.axes) {
            if (a.kind == AxisKind::PointPoint) {
                touches_point = true;
                pairs.insert({std::min(a.values[0], a.values[1]),
                              std::max(a.values[0], a.values[1])});
            } else if (a.kind == AxisKind::PointGap) {
                touches_point = true;
                pg_values.insert(a.values[0]);
            }
        }
        if (!touches_point) {
            ++out.gap_gap_only;
            continue;
        }
        ++out.point_axis;
        for (const auto& pr : pairs) ++out.point_pairs[pr];
        for (int v : pg_values) ++out.point_gap_values[v];
    }
    return out;
}

}  // namespace reiscfg
