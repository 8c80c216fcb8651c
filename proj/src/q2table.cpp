#include "rootno/q2table.hpp"

#include <array>

#include "rootno/errors.hpp"

// Root numbers over Q_2, after Halberstadt's table as extended by Rizzo to
// arbitrary (possibly non-minimal) Weierstrass equations.  Each printed row
// becomes one Row record below: a pattern on the reduced valuation triple
// plus a congruence condition on the odd parts.  Row order follows the
// published table; the first match decides, and tests sweep all small
// integral models to confirm that exactly one row ever matches.

namespace rootno {

namespace {

// Derived quantity an atom constrains.  All congruences have modulus
// dividing 64, so odd parts are carried mod 64 throughout.
enum class Ex : unsigned char {
    C6,        // c6'
    C4,        // c4'
    Del,       // disc'
    C4p4C6,    // c4' + 4 c6'
    C4p4C6e,   // c4' + 4 c_{6,e}
    C4m4C6e,   // c4' - 4 c_{6,e}
    C4pC6,     // c4' + c6'
    T2C6pC4,   // 2 c6' + c4'
    T2C4pC6,   // 2 c4' + c6'
    C4m2C6,    // c4' - 2 c6'
    C4xC6,     // c4' * c6'
    DelmC6,    // disc' - c6'
    C6m5C4,    // c6' - 5 c4'
    C4mC6,     // c4' - c6'
    C6is,      // C6 component equals arg
    C6isnt,    // C6 component differs from arg
    C4is,      // C4 component equals arg
    C4isnt,    // C4 component differs from arg
};

// Value is accepted when its residue's bit is set in mask.
struct Atom {
    Ex ex;
    signed char arg;    // e for the c_{6,e} forms, target for the is/isnt forms
    unsigned char mod;  // 0 for the is/isnt forms
    std::uint64_t mask;
};

// Triple-component pattern: exact value or lower bound.
struct Pat {
    bool ge;
    signed char v;
};

// One table row: triple pattern, then (a_1 and ... and a_na) or
// (b_1 and ... and b_nb).  nb == 0 means a single conjunction.
struct Row {
    Pat d, s6, s4;
    std::array<Atom, 3> a;
    int na;
    std::array<Atom, 3> b;
    int nb;
    signed char w;
};

constexpr Pat EQ(int v) { return {false, static_cast<signed char>(v)}; }
constexpr Pat GE(int v) { return {true, static_cast<signed char>(v)}; }

constexpr std::uint64_t bits(std::initializer_list<unsigned> rs) {
    std::uint64_t m = 0;
    for (unsigned r : rs) m |= std::uint64_t{1} << r;
    return m;
}

// Complement within residues mod m; used for the "not congruent" rows.
constexpr std::uint64_t neg(unsigned mod, std::uint64_t m) {
    std::uint64_t all = mod >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << mod) - 1;
    return all & ~m;
}

constexpr Atom A(Ex ex, unsigned mod, std::uint64_t mask) {
    return {ex, 0, static_cast<unsigned char>(mod), mask};
}
constexpr Atom Ae(Ex ex, int e, unsigned mod, std::uint64_t mask) {
    return {ex, static_cast<signed char>(e), static_cast<unsigned char>(mod), mask};
}
constexpr Atom Ais(Ex ex, int v) { return {ex, static_cast<signed char>(v), 0, 0}; }

constexpr Atom NO{};

constexpr Row R1(Pat d, Pat s6, Pat s4, Atom a1, int w) {
    return {d, s6, s4, {a1, NO, NO}, 1, {NO, NO, NO}, 0, static_cast<signed char>(w)};
}
constexpr Row R2(Pat d, Pat s6, Pat s4, Atom a1, Atom a2, int w) {
    return {d, s6, s4, {a1, a2, NO}, 2, {NO, NO, NO}, 0, static_cast<signed char>(w)};
}
constexpr Row R3(Pat d, Pat s6, Pat s4, Atom a1, Atom a2, Atom a3, int w) {
    return {d, s6, s4, {a1, a2, a3}, 3, {NO, NO, NO}, 0, static_cast<signed char>(w)};
}
constexpr Row R1or1(Pat d, Pat s6, Pat s4, Atom a1, Atom b1, int w) {
    return {d, s6, s4, {a1, NO, NO}, 1, {b1, NO, NO}, 1, static_cast<signed char>(w)};
}
constexpr Row R2or2(Pat d, Pat s6, Pat s4, Atom a1, Atom a2, Atom b1, Atom b2, int w) {
    return {d, s6, s4, {a1, a2, NO}, 2, {b1, b2, NO}, 2, static_cast<signed char>(w)};
}

// The 80 rows, in published order.  Comments quote the condition; x' is the
// odd part of x and (a, b | m) abbreviates "congruent to a or b mod m".
constexpr std::array<Row, 80> ROWS = {{
    // (0,0,0)   c6' = 3 | 4
    R1(EQ(0), EQ(0), EQ(0), A(Ex::C6, 4, bits({3})), +1),
    // (>=0,0,0) c6' = 1 | 4
    R1(GE(0), EQ(0), EQ(0), A(Ex::C6, 4, bits({1})), -1),
    // (0,3,3)   [c4' = 1|4 and c6' = 1,7|8] or [c4' = 3|4 and c6' = 1,3|8]
    R2or2(EQ(0), EQ(3), EQ(3), A(Ex::C4, 4, bits({1})), A(Ex::C6, 8, bits({1, 7})),
          A(Ex::C4, 4, bits({3})), A(Ex::C6, 8, bits({1, 3})), +1),
    // (0,3,3)   [c4' = 1|4 and c6' = 3,5|8] or [c4' = 3|4 and c6' = 5,7|8]
    R2or2(EQ(0), EQ(3), EQ(3), A(Ex::C4, 4, bits({1})), A(Ex::C6, 8, bits({3, 5})),
          A(Ex::C4, 4, bits({3})), A(Ex::C6, 8, bits({5, 7})), -1),
    // (0,3,>=4) c6' = 1 | 4
    R1(EQ(0), EQ(3), GE(4), A(Ex::C6, 4, bits({1})), +1),
    // (0,3,>=4) c6' = 3 | 4
    R1(EQ(0), EQ(3), GE(4), A(Ex::C6, 4, bits({3})), -1),
    // (0,4,2)   c4' = 1 | 4 and c4' + 4c6' = 9,13 | 16
    R2(EQ(0), EQ(4), EQ(2), A(Ex::C4, 4, bits({1})),
       A(Ex::C4p4C6, 16, bits({9, 13})), +1),
    // (0,4,2)   c4' = 1 | 4 and c4' + 4c6' != 9,13 | 16
    R2(EQ(0), EQ(4), EQ(2), A(Ex::C4, 4, bits({1})),
       A(Ex::C4p4C6, 16, neg(16, bits({9, 13}))), -1),
    // (0,>=4,2) c4' = 3 | 4 and C6 = 4
    R2(EQ(0), GE(4), EQ(2), A(Ex::C4, 4, bits({3})), Ais(Ex::C6is, 4), +1),
    // (0,>=4,2) c4' = 3 | 4 and C6 != 4
    R2(EQ(0), GE(4), EQ(2), A(Ex::C4, 4, bits({3})), Ais(Ex::C6isnt, 4), -1),
    // (0,5,2)   c4' = 1 | 4 and c4' + 4c_{6,4} = 5,9 | 16
    R2(EQ(0), EQ(5), EQ(2), A(Ex::C4, 4, bits({1})),
       Ae(Ex::C4p4C6e, 4, 16, bits({5, 9})), -1),
    // (0,5,2)   c4' = 1 | 4 and c4' + 4c_{6,4} != 5,9 | 16
    R2(EQ(0), EQ(5), EQ(2), A(Ex::C4, 4, bits({1})),
       Ae(Ex::C4p4C6e, 4, 16, neg(16, bits({5, 9}))), +1),
    // (0,>=6,2) c4' = 1 | 4 and c4' + 4c_{6,4} = 5,9 | 16
    R2(EQ(0), GE(6), EQ(2), A(Ex::C4, 4, bits({1})),
       Ae(Ex::C4p4C6e, 4, 16, bits({5, 9})), +1),
    // (0,>=6,2) c4' = 1 | 4 and c4' + 4c_{6,4} != 5,9 | 16
    R2(EQ(0), GE(6), EQ(2), A(Ex::C4, 4, bits({1})),
       Ae(Ex::C4p4C6e, 4, 16, neg(16, bits({5, 9}))), -1),
    // (>=1,0,0) c6' = 3 | 4 and c6' = 3 | 8
    R1(GE(1), EQ(0), EQ(0), A(Ex::C6, 8, bits({3})), +1),
    // (>=1,0,0) c6' = 3 | 4 and c6' != 3 | 8
    R1(GE(1), EQ(0), EQ(0), A(Ex::C6, 8, bits({7})), -1),
    // (1,3,2)   c4' + 4c6' = 3 | 16 or c4' = 11 | 16
    R1or1(EQ(1), EQ(3), EQ(2), A(Ex::C4p4C6, 16, bits({3})),
          A(Ex::C4, 16, bits({11})), +1),
    // (1,3,2)   c4' + 4c6' != 3 | 16 and c4' != 11 | 16
    R2(EQ(1), EQ(3), EQ(2), A(Ex::C4p4C6, 16, neg(16, bits({3}))),
       A(Ex::C4, 16, neg(16, bits({11}))), -1),
    // (2,3,2)   disc' = c6' | 4
    R1(EQ(2), EQ(3), EQ(2), A(Ex::DelmC6, 4, bits({0})), +1),
    // (2,3,2)   disc' != c6' | 4
    R1(EQ(2), EQ(3), EQ(2), A(Ex::DelmC6, 4, neg(4, bits({0}))), -1),
    // (2,4,3)   c4' + c6' = 0,6 | 8
    R1(EQ(2), EQ(4), EQ(3), A(Ex::C4pC6, 8, bits({0, 6})), +1),
    // (2,4,3)   c4' + c6' != 0,6 | 8
    R1(EQ(2), EQ(4), EQ(3), A(Ex::C4pC6, 8, neg(8, bits({0, 6}))), -1),
    // (2,4,>=4) c6' = 1 | 4
    R1(EQ(2), EQ(4), GE(4), A(Ex::C6, 4, bits({1})), +1),
    // (2,4,>=4) c6' != 1 | 4
    R1(EQ(2), EQ(4), GE(4), A(Ex::C6, 4, neg(4, bits({1}))), -1),
    // (3,3,2)   disc' = 3 | 4
    R1(EQ(3), EQ(3), EQ(2), A(Ex::Del, 4, bits({3})), +1),
    // (3,3,2)   disc' != 3 | 4
    R1(EQ(3), EQ(3), EQ(2), A(Ex::Del, 4, neg(4, bits({3}))), -1),
    // (3,5,3)   2c6' + c4' = 1,3 | 8
    R1(EQ(3), EQ(5), EQ(3), A(Ex::T2C6pC4, 8, bits({1, 3})), +1),
    // (3,5,3)   2c6' + c4' = 5,7 | 8
    R1(EQ(3), EQ(5), EQ(3), A(Ex::T2C6pC4, 8, bits({5, 7})), -1),
    // (3,>=6,3) c4' = 5,7 | 8
    R1(EQ(3), GE(6), EQ(3), A(Ex::C4, 8, bits({5, 7})), +1),
    // (3,>=6,3) c4' = 1,3 | 8
    R1(EQ(3), GE(6), EQ(3), A(Ex::C4, 8, bits({1, 3})), -1),
    // (>=4,3,2) c6' = 3 | 4
    R1(GE(4), EQ(3), EQ(2), A(Ex::C6, 4, bits({3})), +1),
    // (>=4,3,2) c6' != 3 | 4
    R1(GE(4), EQ(3), EQ(2), A(Ex::C6, 4, neg(4, bits({3}))), -1),
    // (4,5,4)   c4' = c6' | 4 and c4' = 1 | 4
    R2(EQ(4), EQ(5), EQ(4), A(Ex::C4mC6, 4, bits({0})), A(Ex::C4, 4, bits({1})), +1),
    // (4,5,4)   c4' = c6' | 4 and c4' = 3 | 4
    R2(EQ(4), EQ(5), EQ(4), A(Ex::C4mC6, 4, bits({0})), A(Ex::C4, 4, bits({3})), -1),
    // (4,5,4)   c4' = 1 = -c6' | 4 and c4'c6' = 3 | 8
    R3(EQ(4), EQ(5), EQ(4), A(Ex::C4, 4, bits({1})), A(Ex::C6, 4, bits({3})),
       A(Ex::C4xC6, 8, bits({3})), +1),
    // (4,5,4)   c4' = 1 = -c6' | 4 and c4'c6' != 3 | 8
    R3(EQ(4), EQ(5), EQ(4), A(Ex::C4, 4, bits({1})), A(Ex::C6, 4, bits({3})),
       A(Ex::C4xC6, 8, neg(8, bits({3}))), -1),
    // (4,5,4)   c6' = 1 = -c4' | 4
    R2(EQ(4), EQ(5), EQ(4), A(Ex::C6, 4, bits({1})), A(Ex::C4, 4, bits({3})), -1),
    // (4,5,5)   c6' = 1 | 4 and c6' = 5 | 8
    R1(EQ(4), EQ(5), EQ(5), A(Ex::C6, 8, bits({5})), +1),
    // (4,5,5)   c6' = 1 | 4 and c6' = 1 | 8
    R1(EQ(4), EQ(5), EQ(5), A(Ex::C6, 8, bits({1})), -1),
    // (4,5,>=5) c6' = 3 | 4 and C4 = 5
    R2(EQ(4), EQ(5), GE(5), A(Ex::C6, 4, bits({3})), Ais(Ex::C4is, 5), +1),
    // (4,5,>=5) c6' = 3 | 4 and C4 != 5
    R2(EQ(4), EQ(5), GE(5), A(Ex::C6, 4, bits({3})), Ais(Ex::C4isnt, 5), -1),
    // (4,5,>=6) c6' = 1 | 4
    R1(EQ(4), EQ(5), GE(6), A(Ex::C6, 4, bits({1})), -1),
    // (6,6,5)   c4' = 3 | 4
    R1(EQ(6), EQ(6), EQ(5), A(Ex::C4, 4, bits({3})), +1),
    // (6,6,5)   c4' = 1 | 4
    R1(EQ(6), EQ(6), EQ(5), A(Ex::C4, 4, bits({1})), -1),
    // (6,6,>=6) c6' = 1 | 4
    R1(EQ(6), EQ(6), GE(6), A(Ex::C6, 4, bits({1})), +1),
    // (6,6,>=6) c6' = 3 | 4
    R1(EQ(6), EQ(6), GE(6), A(Ex::C6, 4, bits({3})), -1),
    // (6,>=7,4) c4' = 1 | 4 and C6 = 7
    R2(EQ(6), GE(7), EQ(4), A(Ex::C4, 4, bits({1})), Ais(Ex::C6is, 7), +1),
    // (6,>=7,4) c4' = 1 | 4 and C6 != 7
    R2(EQ(6), GE(7), EQ(4), A(Ex::C4, 4, bits({1})), Ais(Ex::C6isnt, 7), -1),
    // (6,>=7,4) c4' = 3 | 4 and c4' - 4c_{6,7} = 7,11 | 16
    R2(EQ(6), GE(7), EQ(4), A(Ex::C4, 4, bits({3})),
       Ae(Ex::C4m4C6e, 7, 16, bits({7, 11})), +1),
    // (6,>=7,4) c4' = 3 | 4 and c4' - 4c_{6,7} != 7,11 | 16
    R2(EQ(6), GE(7), EQ(4), A(Ex::C4, 4, bits({3})),
       Ae(Ex::C4m4C6e, 7, 16, neg(16, bits({7, 11}))), -1),
    // (7,6,4)   c6' = 5 | 8 or c6' = 5c4' | 8
    R1or1(EQ(7), EQ(6), EQ(4), A(Ex::C6, 8, bits({5})),
          A(Ex::C6m5C4, 8, bits({0})), +1),
    // (7,6,4)   c6' != 5 | 8 and c6' != 5c4' | 8
    R2(EQ(7), EQ(6), EQ(4), A(Ex::C6, 8, neg(8, bits({5}))),
       A(Ex::C6m5C4, 8, neg(8, bits({0}))), -1),
    // (8,6,4)   2c6' + c4' = 3 | 16
    R1(EQ(8), EQ(6), EQ(4), A(Ex::T2C6pC4, 16, bits({3})), +1),
    // (8,6,4)   2c6' + c4' = 15 | 16
    R1(EQ(8), EQ(6), EQ(4), A(Ex::T2C6pC4, 16, bits({15})), -1),
    // (8,6,4)   2c6' + c4' = 23 | 32
    R1(EQ(8), EQ(6), EQ(4), A(Ex::T2C6pC4, 32, bits({23})), +1),
    // (8,6,4)   2c6' + c4' = 7 | 32
    R1(EQ(8), EQ(6), EQ(4), A(Ex::T2C6pC4, 32, bits({7})), -1),
    // (8,6,4)   2c6' + c4' = 11 | 16
    R1(EQ(8), EQ(6), EQ(4), A(Ex::T2C6pC4, 16, bits({11})), -1),
    // (8,7,5)   2c4' + c6' = 7 | 8 or c6' = 3 | 8
    R1or1(EQ(8), EQ(7), EQ(5), A(Ex::T2C4pC6, 8, bits({7})),
          A(Ex::C6, 8, bits({3})), +1),
    // (8,7,5)   2c4' + c6' != 7 | 8 and c6' != 3 | 8
    R2(EQ(8), EQ(7), EQ(5), A(Ex::T2C4pC6, 8, neg(8, bits({7}))),
       A(Ex::C6, 8, neg(8, bits({3}))), -1),
    // (8,7,6)   c6' = 1 | 4 and 2c4' + c6' = 3 | 8
    R2(EQ(8), EQ(7), EQ(6), A(Ex::C6, 4, bits({1})),
       A(Ex::T2C4pC6, 8, bits({3})), +1),
    // (8,7,6)   c6' = 1 | 4 and 2c4' + c6' != 3 | 8
    R2(EQ(8), EQ(7), EQ(6), A(Ex::C6, 4, bits({1})),
       A(Ex::T2C4pC6, 8, neg(8, bits({3}))), -1),
    // (8,7,>=6) c6' = 3 | 4 and C4 = 6
    R2(EQ(8), EQ(7), GE(6), A(Ex::C6, 4, bits({3})), Ais(Ex::C4is, 6), +1),
    // (8,7,>=6) c6' = 3 | 4 and C4 != 6
    R2(EQ(8), EQ(7), GE(6), A(Ex::C6, 4, bits({3})), Ais(Ex::C4isnt, 6), -1),
    // (8,7,>=7) c6' = 1 | 4
    R1(EQ(8), EQ(7), GE(7), A(Ex::C6, 4, bits({1})), -1),
    // (9,6,4)   2c6' + c4' = 11 | 32 or c6' = 7 | 8
    R1or1(EQ(9), EQ(6), EQ(4), A(Ex::T2C6pC4, 32, bits({11})),
          A(Ex::C6, 8, bits({7})), +1),
    // (9,6,4)   2c6' + c4' != 11 | 32 and c6' != 7 | 8
    R2(EQ(9), EQ(6), EQ(4), A(Ex::T2C6pC4, 32, neg(32, bits({11}))),
       A(Ex::C6, 8, neg(8, bits({7}))), -1),
    // (9,8,5)   2c6' + c4' = 1,7 | 8
    R1(EQ(9), EQ(8), EQ(5), A(Ex::T2C6pC4, 8, bits({1, 7})), +1),
    // (9,8,5)   2c6' + c4' = 3,5 | 8
    R1(EQ(9), EQ(8), EQ(5), A(Ex::T2C6pC4, 8, bits({3, 5})), -1),
    // (9,>=9,5) c4' = 1,3 | 8
    R1(EQ(9), GE(9), EQ(5), A(Ex::C4, 8, bits({1, 3})), +1),
    // (9,>=9,5) c4' = 5,7 | 8
    R1(EQ(9), GE(9), EQ(5), A(Ex::C4, 8, bits({5, 7})), -1),
    // (10,6,4)  c6' = 1 | 4
    R1(EQ(10), EQ(6), EQ(4), A(Ex::C6, 4, bits({1})), +1),
    // (10,6,4)  c6' = 3 | 4 and c4' - 2c6' = 3,19 | 64
    R2(EQ(10), EQ(6), EQ(4), A(Ex::C6, 4, bits({3})),
       A(Ex::C4m2C6, 64, bits({3, 19})), +1),
    // (10,6,4)  c6' = 3 | 4 and c4' - 2c6' != 3,19 | 64
    R2(EQ(10), EQ(6), EQ(4), A(Ex::C6, 4, bits({3})),
       A(Ex::C4m2C6, 64, neg(64, bits({3, 19}))), -1),
    // (10,8,6)  c4'c6' = 3 | 4
    R1(EQ(10), EQ(8), EQ(6), A(Ex::C4xC6, 4, bits({3})), +1),
    // (10,8,6)  c4'c6' = 1 | 4
    R1(EQ(10), EQ(8), EQ(6), A(Ex::C4xC6, 4, bits({1})), -1),
    // (10,8,>=7) c6' = 1 | 4
    R1(EQ(10), EQ(8), GE(7), A(Ex::C6, 4, bits({1})), +1),
    // (10,8,>=7) c6' = 3 | 4
    R1(EQ(10), EQ(8), GE(7), A(Ex::C6, 4, bits({3})), -1),
    // (11,6,4)  c6' = 1 | 4
    R1(EQ(11), EQ(6), EQ(4), A(Ex::C6, 4, bits({1})), +1),
    // (11,6,4)  c6' = 3 | 4 and c6' = 3 | 8
    R1(EQ(11), EQ(6), EQ(4), A(Ex::C6, 8, bits({3})), +1),
    // (11,6,4)  c6' = 3 | 4 and c6' = 7 | 8
    R1(EQ(11), EQ(6), EQ(4), A(Ex::C6, 8, bits({7})), -1),
}};

long long unit6(const Q2Context& q) {
    if (!q.has_c6) throw Error("q2 table: odd part of c6 = 0 requested");
    return q.c6_u;
}

long long unit4(const Q2Context& q) {
    if (!q.has_c4) throw Error("q2 table: odd part of c4 = 0 requested");
    return q.c4_u;
}

// c_{6,e} = c6' 2^{C6 - e} mod 64, or 0 when c6 vanishes.  Every row using
// it has C6 >= e under its own pattern.
long long c6e_mod64(const Q2Context& q, long long e) {
    if (!q.has_c6) return 0;
    long long k = q.triple.c6.value() - e;
    if (k < 0) throw Error("q2 table: c_{6,e} with C6 < e");
    if (k >= 6) return 0;
    return (q.c6_u << k) & 63;
}

bool atom_holds(const Q2Context& q, const Atom& a) {
    switch (a.ex) {
    case Ex::C6is:
        return q.triple.c6 == static_cast<long long>(a.arg);
    case Ex::C6isnt:
        return !(q.triple.c6 == static_cast<long long>(a.arg));
    case Ex::C4is:
        return q.triple.c4 == static_cast<long long>(a.arg);
    case Ex::C4isnt:
        return !(q.triple.c4 == static_cast<long long>(a.arg));
    default:
        break;
    }
    long long x = 0;
    switch (a.ex) {
    case Ex::C6: x = unit6(q); break;
    case Ex::C4: x = unit4(q); break;
    case Ex::Del: x = q.disc_u; break;
    case Ex::C4p4C6: x = unit4(q) + 4 * unit6(q); break;
    case Ex::C4p4C6e: x = unit4(q) + 4 * c6e_mod64(q, a.arg); break;
    case Ex::C4m4C6e: x = unit4(q) - 4 * c6e_mod64(q, a.arg); break;
    case Ex::C4pC6: x = unit4(q) + unit6(q); break;
    case Ex::T2C6pC4: x = 2 * unit6(q) + unit4(q); break;
    case Ex::T2C4pC6: x = 2 * unit4(q) + unit6(q); break;
    case Ex::C4m2C6: x = unit4(q) - 2 * unit6(q); break;
    case Ex::C4xC6: x = unit4(q) * unit6(q); break;
    case Ex::DelmC6: x = q.disc_u - unit6(q); break;
    case Ex::C6m5C4: x = unit6(q) - 5 * unit4(q); break;
    case Ex::C4mC6: x = unit4(q) - unit6(q); break;
    default:
        throw Error("q2 table: unreachable atom kind");
    }
    long long r = x % a.mod;
    if (r < 0) r += a.mod;
    return (a.mask >> r) & 1;
}

bool pat_matches(const Pat& p, const Val& v) {
    long long t = p.v;
    return p.ge ? v >= t : v == t;
}

bool row_matches(const Q2Context& q, const Row& row) {
    if (!pat_matches(row.d, q.triple.c_delta) || !pat_matches(row.s6, q.triple.c6) ||
        !pat_matches(row.s4, q.triple.c4))
        return false;
    bool lhs = true;
    for (int i = 0; i < row.na; ++i)
        if (!atom_holds(q, row.a[i])) {
            lhs = false;
            break;
        }
    if (lhs) return true;
    for (int i = 0; i < row.nb; ++i)
        if (!atom_holds(q, row.b[i])) return false;
    return row.nb > 0;
}

}  // namespace

std::string CTriple::str() const {
    return "(" + c_delta.str() + "," + c6.str() + "," + c4.str() + ")";
}

CTriple c_triple_vals(Val v_disc, Val v_c6, Val v_c4) {
    if (v_disc.is_infinite()) throw SingularCurve("c-triple of zero discriminant");
    Val m = val_min({v_disc.floordiv(12), v_c6.floordiv(6), v_c4.floordiv(4)});
    long long k = m.value();
    return {v_disc - 12 * k, v_c6 - 6 * k, v_c4 - 4 * k};
}

Q2Context make_q2_context(const CTriple& t, long long disc_unit_mod64,
                          long long c6_unit_mod64, long long c4_unit_mod64) {
    Q2Context q;
    q.triple = t;
    q.disc_u = disc_unit_mod64;
    q.has_c6 = c6_unit_mod64 >= 0;
    q.has_c4 = c4_unit_mod64 >= 0;
    q.c6_u = q.has_c6 ? c6_unit_mod64 : 0;
    q.c4_u = q.has_c4 ? c4_unit_mod64 : 0;
    return q;
}

namespace {

// Odd part of a nonzero rational, reduced mod 64.
long long odd_part_mod64(const Rational& x) {
    return mpz_get_si(residue_mod(unit_part(x, 2), 64).get_mpz_t());
}

}  // namespace

Q2Context q2_context(const WeierstrassModel& m) {
    Invariants inv = invariants(m);
    Val vd = valuation(Rational(inv.disc), 2);
    Val v6 = valuation(Rational(inv.c6), 2);
    Val v4 = valuation(Rational(inv.c4), 2);
    CTriple t = c_triple_vals(vd, v6, v4);
    long long du = odd_part_mod64(Rational(inv.disc));
    long long u6 = inv.c6 == 0 ? -1 : odd_part_mod64(Rational(inv.c6));
    long long u4 = inv.c4 == 0 ? -1 : odd_part_mod64(Rational(inv.c4));
    return make_q2_context(t, du, u6, u4);
}

Sign q2_root_number(const Q2Context& ctx) {
    for (const Row& row : ROWS)
        if (row_matches(ctx, row)) return Sign::from_int(row.w);
    throw TableMiss("no root number row for triple " + ctx.triple.str());
}

int q2_match_count(const Q2Context& ctx) {
    int n = 0;
    for (const Row& row : ROWS)
        if (row_matches(ctx, row)) ++n;
    return n;
}

int q2_row_count() { return static_cast<int>(ROWS.size()); }

const char* q2_table_version() { return "halberstadt-rizzo/1"; }

std::uint64_t q2_table_checksum() {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&h](std::uint64_t byte) {
        h ^= byte & 0xff;
        h *= 1099511628211ull;
    };
    auto eat_atom = [&](const Atom& a) {
        eat(static_cast<std::uint64_t>(a.ex));
        eat(static_cast<std::uint64_t>(static_cast<signed char>(a.arg)));
        eat(a.mod);
        for (int i = 0; i < 8; ++i) eat(a.mask >> (8 * i));
    };
    for (const Row& row : ROWS) {
        for (const Pat* p : {&row.d, &row.s6, &row.s4}) {
            eat(p->ge ? 1 : 0);
            eat(static_cast<std::uint64_t>(p->v));
        }
        eat(static_cast<std::uint64_t>(row.na));
        for (int i = 0; i < row.na; ++i) eat_atom(row.a[i]);
        eat(static_cast<std::uint64_t>(row.nb));
        for (int i = 0; i < row.nb; ++i) eat_atom(row.b[i]);
        eat(static_cast<std::uint64_t>(static_cast<signed char>(row.w)));
    }
    return h;
}

}  // namespace rootno
