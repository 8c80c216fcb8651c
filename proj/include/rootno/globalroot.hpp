#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rootno/arith.hpp"
#include "rootno/curve.hpp"
#include "rootno/localroot.hpp"

namespace rootno {

// ---- number field descriptors -----------------------------------------------

// Q(sqrt(d)); d squarefree, neither 0 nor 1.
struct Quadratic {
    Integer d;
};

// Q(sqrt(d1), sqrt(d2)); d1, d2 distinct squarefree, neither 0 nor 1.
struct Biquadratic {
    Integer d1, d2;
};

// Q(zeta_8) = Q(sqrt(-1), sqrt(2)).  Kept apart from Biquadratic so the
// totally ramified place above 2 can be special-cased.
struct Zeta8 {};

// Q(m^(1/p^n)); p an odd prime, n >= 1, m > 1 and p-th-power free.  Not
// Galois: places above one rational prime may differ in shape.
struct PureRadical {
    Integer m;
    Integer p;
    long long n = 1;
};

// A field known only through its archimedean places, for curves attested to
// have everywhere good reduction over it; finite places all contribute +1.
struct AssertedEverywhereGood {
    long long real_places = 0;
    long long complex_places = 0;
};

using FieldDescriptor =
    std::variant<Quadratic, Biquadratic, Zeta8, PureRadical, AssertedEverywhereGood>;

// [K:Q]; r + 2c for AssertedEverywhereGood.  Pure radical degrees are capped
// at 10^6 to keep every downstream count in range.
long long field_degree(const FieldDescriptor& field);

// Number of archimedean places, real and complex together.
long long infinite_place_count(const FieldDescriptor& field);

// Enforces the descriptor invariants listed above.
void check_field(const FieldDescriptor& field);

// ---- splitting ----------------------------------------------------------------

enum class QuadSplitting { SPLIT, INERT, RAMIFIED };

// Behavior of the prime p in Q(sqrt(d)), read off the Kronecker symbol of the
// fundamental discriminant.
QuadSplitting splitting_in_quadratic(const Integer& p, const Integer& d);

// `count` places of identical shape (e, f) above one rational prime.
struct PlaceShape {
    long long e = 1;
    long long f = 1;
    long long count = 1;
    bool operator==(const PlaceShape&) const = default;
};

struct SplittingReport {
    Integer p;
    std::vector<PlaceShape> places;  // when exact: sum of e*f*count = [K:Q]
    bool exact = true;
    bool odd_place_count = false;    // meaningful only when !exact

    // Total number of places; throws UnsupportedSplitting when !exact.
    long long place_count() const;
    // Parity of the place count, served in both modes.
    bool place_count_odd() const;
};

// Decomposition of the prime q in the field.  The Galois families come back
// exact with a single shape.  PureRadical is exact away from q | p m (the
// number of places is the number of irreducible factors of x^(p^n) - m over
// F_q), exact at q | m and in the settled branches at q = p, and falls back
// to place-count parity via the discriminant of x^(p^n) - m once the degree
// passes 343.  AssertedEverywhereGood carries no finite data.
SplittingReport places_above(const Integer& q, const FieldDescriptor& field);

// ---- global root numbers --------------------------------------------------------

// Factorization of the minimal discriminant; its primes are exactly the
// primes of bad reduction.
Factorization bad_primes(const WeierstrassModel& m,
                         const std::vector<Integer>& hints = {});

// (-1) * product of local root numbers over the bad primes.
Sign global_root_number(const WeierstrassModel& m,
                        const std::vector<Integer>& hints = {});

// (-1)^(m+u) for a semistable curve with m split multiplicative places and u
// archimedean places.
Sign semistable_global(long long split_mult_places, long long infinite_places);

// (-1)^#{infinite places} * product over places above bad primes.  Places
// above one prime of a Galois field are conjugate and share one root number,
// so an even place count contributes +1 with no local computation; odd counts
// and pure radical fields go through local_root_number_ext place by place.
Sign base_change_root_number(const WeierstrassModel& m, const FieldDescriptor& field,
                             const std::vector<Integer>& hints = {});

// Global root number of the twist by squarefree d; d = 1 gives the curve's
// own root number.
Sign quadratic_twist_root(const WeierstrassModel& m, const Integer& d,
                          const std::vector<Integer>& hints = {});

// Modulus after which w(E_d) depends only on the residue and the sign of d:
// product of p^2 over the bad primes, times a further 4 when 2 is bad.
Integer twist_period(const WeierstrassModel& m,
                     const std::vector<Integer>& hints = {});

// Twists d1 < d2 of equal sign and residue mod period with different root
// numbers.  Any entry is an engine bug.
struct TwistViolation {
    Integer d1, d2;
};

struct TwistScanReport {
    Integer period;
    long long pos_plus = 0, pos_minus = 0;   // squarefree d > 0 by root number
    long long neg_plus = 0, neg_minus = 0;   // squarefree d < 0
    std::vector<TwistViolation> violations;
    std::string json() const;  // {"period":..,"pos_plus":..,..,"violations":[..]}
};

// Root numbers of every twist by squarefree |d| <= bound; bound must cover at
// least one full period.  Deterministic ascending order, so reports are
// byte-identical across runs.
TwistScanReport twist_scan(const WeierstrassModel& m, long long bound,
                           const std::vector<Integer>& hints = {});

// Negative squarefree d0 of least absolute value such that every bad prime
// splits in Q(sqrt(d0)).  Twisting by d0 then flips every root number:
// w(E_{sf(d*d0)}) = -w(E_d) for all squarefree d.
Integer find_d0(const WeierstrassModel& m, const std::vector<Integer>& hints = {});

// w(E / Q(radicand^(1/p^n))) for E semistable with good reduction at the odd
// prime p and p-th-power-free radicand > 1:
//     w(E/Q) * (-1)^(n * ((p-1)/2 + t)),
// t = #{multiplicative primes q not dividing the radicand with (q/p) = -1}.
// Primes dividing the radicand are totally ramified with residue degree 1,
// so they drop out of t.
Sign tower_root_number(const WeierstrassModel& m, const Integer& p, long long n,
                       const Integer& radicand,
                       const std::vector<Integer>& hints = {});

}  // namespace rootno
