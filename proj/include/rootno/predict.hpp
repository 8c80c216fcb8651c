#pragma once
// Scenario engines on top of the root number machinery: congruent numbers,
// structurally even-rank fields, growth over Q(zeta_8), representability by
// cubics, fake complex multiplication, and the minimalist rank predictions.
// Everything here is conditional on the parity conjecture, and the output
// types say so explicitly instead of claiming ranks outright.

#include <optional>
#include <string>
#include <vector>

#include "rootno/arith.hpp"
#include "rootno/artin.hpp"
#include "rootno/curve.hpp"
#include "rootno/globalroot.hpp"

namespace rootno {

// ---- congruent numbers ------------------------------------------------------

// Attached to a verdict whose root number is +1: an even-rank prediction can
// never disprove congruence.
inline constexpr const char* kNoDisproofCaveat =
    "root number +1 predicts even rank and cannot disprove congruence";

struct CongruentVerdict {
    Integer n;                         // the squarefree integer actually judged
    Sign root_number = Sign::plus();
    bool predicted_congruent = false;  // tracks root_number == -1 exactly
    std::string caveat;                // kNoDisproofCaveat when root_number == +1
    std::string json() const;          // fixed key order, byte-stable
};

// w(E_n/Q) for squarefree n >= 1, read off n mod 8: +1 for 1, 2, 3 and -1
// for 5, 6, 7 (4 | n cannot happen).  With verify set, the table value is
// recomputed as global_root_number(congruent_curve(n)); a mismatch throws
// plain Error and would be an engine bug.
Sign congruent_root(const Integer& n, bool verify = false);

// Verdict for any n >= 1.  The squarefree part is judged, since twisting by
// a square leaves y^2 = x^3 - n^2 x in the same twist class.
CongruentVerdict predicted_congruent(const Integer& n,
                                     const std::vector<Integer>& hints = {});

// Root number of the fibre of y^2 = x(x^2 - 49(1 + t^4)^2) at t = l/m in
// lowest terms: the congruent-number curve of n = 7 l^4 + 7 m^4 up to
// squares.  n = 6 or 7 (mod 8) for every coprime pair and odd squares are
// 1 mod 8, so the result is -1 throughout; it is computed, not assumed.
Sign cassels_fiber_root(const Integer& l, const Integer& m,
                        const std::vector<Integer>& hints = {});

// Engine-computed w of y^2 = x^3 + t x^2 - (t+3) x + 1.  The discriminant
// is 16 (t^2 + 3t + 9)^2, never zero over Z, and the value is -1 for every
// integer t.
Sign washington_fiber_root(const Integer& t,
                           const std::vector<Integer>& hints = {});

// ---- representability by cubics ---------------------------------------------

// a x^3 + b x^2 + c x + e with a != 0.  d is represented by the cubic when
// d = s^2 f(t) with s, t rational, s != 0; a positive-rank quadratic twist
// of y^2 = f(x) by d is a witness.
struct Cubic {
    Rational a, b, c, e;
    std::string str() const;
    bool operator==(const Cubic&) const = default;
};

struct PartnerReport {
    Cubic partner;                  // d0 * f, coefficient by coefficient
    Integer d0;
    bool d0_supplied = false;       // false: find_d0 chose it
    Sign base_root = Sign::plus();  // w of y^2 = f(x)
    bool represents_one = false;    // base_root == -1: d = 1 already covered
    std::vector<Integer> sample_d;  // squarefree twists spot-checked
    bool flip_verified = false;     // w(E_d) w(E_{sf(d d0)}) == -1 throughout
    bool conditional = true;
};

// Partner cubic g = d0 f for E: y^2 = f(x), with d0 < 0 squarefree either
// supplied or produced by find_d0.  find_d0 guarantees the flip
// w(E_{d d0}) = -w(E_d); a supplied d0 only promises it empirically, so the
// flip is checked on a fixed sample of squarefree d and reported either way.
PartnerReport representability_partner(const Cubic& f,
                                       const std::optional<Integer>& d0 = std::nullopt,
                                       const std::vector<Integer>& hints = {});

// ---- structurally even rank ---------------------------------------------------

// True when every rational place, infinity included, has an even number of
// places above it, which forces w(E/K) = +1 for every E/Q whose base change
// is defined.  Biquadratic fields are decided prime by prime from the three
// quadratic characters; Zeta8 is false (2 is totally ramified).  Quadratic
// and pure radical descriptors are out of scope: UnsupportedSplitting.
bool even_rank_field(const FieldDescriptor& field);

// Same predicate for a multiquadratic field known only through its Galois
// group C_2^d.  d >= 4 is always even: decomposition groups have order at
// most 4 away from 2 and at most 8 at 2, so no place sits alone.  d = 1 is
// always false (inert primes sit alone).  d = 2 and 3 depend on the
// radicands, which this overload does not have: UnsupportedSplitting.
bool even_rank_field(long long elem_abelian_rank);

// ---- growth over Q(zeta_8) ----------------------------------------------------

enum class Zeta8Applicability { APPLIES, NOT_APPLICABLE };

struct Zeta8Report {
    Zeta8Applicability applicability = Zeta8Applicability::NOT_APPLICABLE;
    ReductionClass at_two = ReductionClass::GOOD;
    // The presented equation is y^2 + xy = x^3 + Ax + B with A = B (mod 2);
    // every member of that family reduces split multiplicatively at 2.
    bool syntactic_family = false;
    std::optional<Sign> growth;  // -1 whenever the criterion applies
    bool conditional = true;
};

// Split multiplicative reduction at 2 forces w(E/Q(zeta_8)) = -1: the place
// above 2 is totally ramified and keeps the local -1, and every other place
// count is even.  The sign is taken from base_change_root_number rather
// than hard-coded.
Zeta8Report zeta8_growth(const WeierstrassModel& m,
                         const std::vector<Integer>& hints = {});

// ---- fake complex multiplication ----------------------------------------------

// All quadratic twists of E/K share one root number exactly when K has no
// real places and E acquires everywhere good reduction over an abelian
// extension of K.  Potential good reduction everywhere (j integral at the
// bad primes) is the computable necessary slice of the second condition;
// the rest arrives as attestations.
struct FakeCMClassification {
    bool potentially_good = false;        // computed from the j-invariant
    bool no_real_places = false;          // attested
    bool abelian_good_reduction = false;  // attested
    bool classified = false;              // all three at once
    bool conditional = true;
};

// Throws NotPotentiallyGood when a non-integral j contradicts a supplied
// good-reduction attestation.
FakeCMClassification fakecm_classify(const WeierstrassModel& m,
                                     bool no_real_places,
                                     bool abelian_good_reduction,
                                     const std::vector<Integer>& hints = {});

// Every quadratic twist of E/K keeps the root number of E/K itself.
Sign fakecm_twist_root(const FakeCMClassification& cls, Sign w_k);

// w(E/F) = w(E/K)^[F:K] for every finite extension F of K.
Sign fakecm_extension_root(const FakeCMClassification& cls, Sign w_k,
                           const Integer& degree);

// ---- minimalist rank predictions ------------------------------------------------

struct MinimalistPrediction {
    std::vector<std::string> irreps;  // named irreps, multiplicity one each
    long long rank = 0;               // sum of their dimensions
    bool conditional = true;
    std::string json() const;  // {"irreps":[..],"rank":..,"conditional":true}
};

// Expected Galois module of E(F) tensor C for F Galois with no quadratic
// subfield and N_E coprime to disc F: w_q = -1 fills in each odd-dimensional
// self-dual irrep of the table once, w_q = +1 leaves zero.  A table with a
// second linear character of order at most 2 is rejected.
MinimalistPrediction minimalist_WG(const GroupTable& table, Sign w_q);

// The four-outcome table for the dihedral quintic field of discriminant
// -3^5 5^13, keyed by kronecker(-15, N_E) and w(E/Q); the residue of N_E
// mod 15 carries all of the dependence.
MinimalistPrediction minimalist_D10(const Integer& n_e, Sign w_q);

// Curves with equal keys receive identical predictions from every
// minimalist operation over a fixed field of discriminant disc_f.
struct GalmodKey {
    Integer residue;  // N_E mod 8 |disc_f|
    Sign w_q = Sign::plus();
    bool operator==(const GalmodKey&) const = default;
};

GalmodKey galmod_key(const Integer& n_e, const Integer& disc_f, Sign w_q);

}  // namespace rootno
