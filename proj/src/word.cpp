#include "reiscfg/word.hpp"

#include <algorithm>
#include <sstream>

namespace reiscfg {

void CyclicWord::validate() const {
    if (n < 1 || n > kMaxWordLen)
        throw DomainError("word length must be between 1 and " +
                          std::to_string(kMaxWordLen));
    if (alphabet != 2 && alphabet != 3)
        throw DomainError("alphabet must be 2 or 3");
    if (static_cast<int>(symbols.size()) != n)
        throw DomainError("symbol count does not match n");
    for (uint8_t s : symbols)
        if (s >= alphabet) throw DomainError("symbol out of alphabet range");
}

CyclicWord CyclicWord::parse(const std::string& text, int alphabet) {
    CyclicWord w;
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t') continue;
        if (ch < '0' || ch > '2') throw DomainError("symbols must be 0, 1 or 2");
        w.symbols.push_back(static_cast<uint8_t>(ch - '0'));
    }
    w.n = static_cast<int>(w.symbols.size());
    if (alphabet != 0) {
        w.alphabet = alphabet;
    } else {
        w.alphabet = 2;
        for (uint8_t s : w.symbols)
            if (s == 2) w.alphabet = 3;
    }
    w.validate();
    return w;
}

std::string CyclicWord::digits() const {
    std::string s;
    s.reserve(symbols.size());
    for (uint8_t x : symbols) s.push_back(static_cast<char>('0' + x));
    return s;
}

std::string CyclicWord::spaced() const {
    std::string s;
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (i) s.push_back(' ');
        s.push_back(static_cast<char>('0' + symbols[i]));
    }
    return s;
}

// ---- packed representation --------------------------------------------------

uint64_t pack_word(const CyclicWord& w) {
    uint64_t v = 0;
    for (int i = 0; i < w.n; ++i) v = (v << 2) | w.symbols[i];
    return v;
}

CyclicWord unpack_word(uint64_t v, int n, int alphabet) {
    CyclicWord w;
    w.n = n;
    w.alphabet = alphabet;
    w.symbols.resize(n);
    for (int i = n - 1; i >= 0; --i) {
        w.symbols[i] = static_cast<uint8_t>(v & 3);
        v >>= 2;
    }
    return w;
}

uint64_t rotate1(uint64_t v, int n) {
    const int top_shift = 2 * (n - 1);
    const uint64_t top = v >> top_shift;
    return ((v - (top << top_shift)) << 2) | top;
}

uint64_t reverse_packed(uint64_t v, int n) {
    uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        r = (r << 2) | (v & 3);
        v >>= 2;
    }
    return r;
}

uint64_t canonical_packed(uint64_t v, int n) {
    uint64_t best = v;
    uint64_t cur = v;
    for (int i = 1; i < n; ++i) {
        cur = rotate1(cur, n);
        best = std::min(best, cur);
    }
    cur = reverse_packed(v, n);
    for (int i = 0; i < n; ++i) {
        best = std::min(best, cur);
        cur = rotate1(cur, n);
    }
    return best;
}

bool is_canonical_packed(uint64_t v, int n) {
    uint64_t cur = v;
    for (int i = 1; i < n; ++i) {
        cur = rotate1(cur, n);
        if (cur < v) return false;
    }
    cur = reverse_packed(v, n);
    for (int i = 0; i < n; ++i) {
        if (cur < v) return false;
        cur = rotate1(cur, n);
    }
    return true;
}

CyclicWord canonical_form(const CyclicWord& w) {
    w.validate();
    return unpack_word(canonical_packed(pack_word(w), w.n), w.n, w.alphabet);
}

// ---- symmetry ----------------------------------------------------------------

SymmetryProfile symmetry_profile(const CyclicWord& w) {
    w.validate();
    const int n = w.n;
    SymmetryProfile p;

    const uint64_t v = pack_word(w);
    uint64_t cur = v;
    int stab = 1;
    for (int r = 1; r < n; ++r) {
        cur = rotate1(cur, n);
        if (cur == v) ++stab;
    }
    p.stabilizer_order = stab;
    p.minimal_period = n / stab;

    for (int c = 0; c < n; ++c) {
        bool fixed = true;
        for (int j = 0; j < n; ++j) {
            int cj = c - j;
            cj %= n;
            if (cj < 0) cj += n;
            if (w.symbols[cj] != w.symbols[j]) {
                fixed = false;
                break;
            }
        }
        if (!fixed) continue;
        AxisInfo a;
        a.c = c;
        if (n % 2 == 0) {
            if (c % 2 == 0) {
                a.kind = AxisKind::PointPoint;
                a.points = {c / 2, c / 2 + n / 2};
                a.values = {w.symbols[a.points[0]], w.symbols[a.points[1]]};
            } else {
                a.kind = AxisKind::GapGap;
            }
        } else {
            a.kind = AxisKind::PointGap;
            int j = static_cast<int>((static_cast<long long>(c) * ((n + 1) / 2)) % n);
            a.points = {j, -1};
            a.values = {w.symbols[j], -1};
        }
        p.axes.push_back(a);
    }
    return p;
}

std::string axis_description(const AxisInfo& a, int n) {
    std::ostringstream os;
    switch (a.kind) {
        case AxisKind::PointPoint:
            os << "point-point axis through positions " << a.points[0] + 1
               << " and " << a.points[1] + 1 << " (values " << a.values[0] << ","
               << a.values[1] << ")";
            break;
        case AxisKind::PointGap: {
            // Opposite arc midpoint lies between positions j + (n-1)/2 and
            // j + (n+1)/2 (0-based, circular).
            int j = a.points[0];
            int u = (j + (n - 1) / 2) % n;
            int v = (j + (n + 1) / 2) % n;
            os << "point-gap axis through position " << j + 1 << " (value "
               << a.values[0] << ") and the arc (" << u + 1 << "," << v + 1
               << ")";
            break;
        }
        case AxisKind::GapGap: {
            int j0 = (a.c - 1) / 2;  // first fixed arc is (j0, j0+1), 0-based
            int j1 = (j0 + n / 2) % n;
            std::array<std::array<int, 2>, 2> arcs = {
                std::array<int, 2>{j0 + 1, (j0 + 1) % n + 1},
                std::array<int, 2>{j1 + 1, (j1 + 1) % n + 1}};
            if (arcs[1][0] < arcs[0][0]) std::swap(arcs[0], arcs[1]);
            os << "gap-gap axis through the arcs (" << arcs[0][0] << ","
               << arcs[0][1] << ") and (" << arcs[1][0] << "," << arcs[1][1]
               << ")";
            break;
        }
    }
    return os.str();
}

// ---- gap predicate ------------------------------------------------------------

int min_zero_run(const CyclicWord& w) {
    w.validate();
    std::vector<int> nz;
    for (int i = 0; i < w.n; ++i)
        if (w.symbols[i] != 0) nz.push_back(i);
    if (nz.empty()) return kAllZeroRun;
    if (nz.size() == 1) return w.n - 1;
    int best = w.n;
    for (size_t i = 0; i < nz.size(); ++i) {
        int next = (i + 1 < nz.size()) ? nz[i + 1] : nz[0] + w.n;
        best = std::min(best, next - nz[i] - 1);
    }
    return best;
}

bool satisfies_gap(const CyclicWord& w, long long m) {
    if (m < 0) throw DomainError("min gap must be >= 0");
    int r = min_zero_run(w);
    if (r == kAllZeroRun) return true;
    return r >= m;
}

}  // namespace reiscfg
