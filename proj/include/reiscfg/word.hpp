#pragma once

#include "reiscfg/numtheory.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace reiscfg {

// Words are cyclic sequences over {0,1} or {0,1,2}. The packed form stores
// symbols as base-4 digits, most significant digit = position 0, so numeric
// order on packed values IS lexicographic order on words of equal length.
inline constexpr int kMaxWordLen = 32;

struct CyclicWord {
    int n = 0;
    int alphabet = 2;
    std::vector<uint8_t> symbols;  // size n, each < alphabet

    void validate() const;  // throws DomainError

    // Parse "001021" or "0 0 1 0 2 1"; alphabet inferred (2 unless a '2'
    // appears, min 2) or forced by the second argument.
    static CyclicWord parse(const std::string& text, int alphabet = 0);

    std::string digits() const;  // "001001"
    std::string spaced() const;  // "0 0 1 0 0 1"

    bool operator==(const CyclicWord& o) const = default;
};

// ---- packed representation -------------------------------------------------
uint64_t pack_word(const CyclicWord& w);
CyclicWord unpack_word(uint64_t v, int n, int alphabet);
// Rotate left by one symbol: (s1,...,s_{n-1},s0).
uint64_t rotate1(uint64_t v, int n);
// Reverse the symbol order.
uint64_t reverse_packed(uint64_t v, int n);
// Lexicographic minimum over all n rotations of v and of its reversal.
uint64_t canonical_packed(uint64_t v, int n);
// True iff v is its own canonical form (early-exit scan, no allocation).
bool is_canonical_packed(uint64_t v, int n);

// ---- class representative ---------------------------------------------------
// Lexicographically least word in the dihedral orbit (2n images), symbol
// order 0 < 1 < 2. Two words are congruent iff their canonical forms agree.
CyclicWord canonical_form(const CyclicWord& w);

// ---- symmetry ----------------------------------------------------------------
enum class AxisKind { PointPoint, PointGap, GapGap };

// Reflection j -> (c - j) mod n that fixes the word. Even n: even c is a
// point-point axis through positions c/2 and c/2 + n/2, odd c is gap-gap
// through the arcs ((c-1)/2, (c+1)/2) and the opposite one. Odd n: every
// axis joins point c*(n+1)/2 mod n to the opposite arc midpoint.
struct AxisInfo {
    AxisKind kind;
    int c;
    std::array<int, 2> points{-1, -1};  // 0-based point endpoints (-1 if none)
    std::array<int, 2> values{-1, -1};  // symbols at those points
};

struct SymmetryProfile {
    int stabilizer_order = 1;  // rotations fixing the word, identity included
    int minimal_period = 0;    // n / stabilizer_order
    std::vector<AxisInfo> axes;
    bool reflective() const { return !axes.empty(); }
    bool rotation_symmetric() const { return stabilizer_order >= 2; }
};

SymmetryProfile symmetry_profile(const CyclicWord& w);

// Human-facing description with 1-based positions, e.g.
// "point-point axis through positions 1 and 13 (values 1,0)" or
// "gap-gap axis through the arcs (12,13) and (24,1)".
std::string axis_description(const AxisInfo& a, int n);

// ---- gap predicate -------------------------------------------------------------
// True iff every circular zero-run between consecutive nonzero symbols has
// length >= m. All-zero words: true. A single nonzero symbol: true iff
// n >= m+1 (its lone circular run has length n-1).
bool satisfies_gap(const CyclicWord& w, long long m);

// Minimal circular zero-run between consecutive nonzeros; n-1 for a single
// nonzero; returns kAllZeroRun for all-zero words.
inline constexpr int kAllZeroRun = 255;
int min_zero_run(const CyclicWord& w);

}  // namespace reiscfg
