#pragma once

#include <string>
#include <vector>

#include "rootno/arith.hpp"

namespace rootno {

// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// with rational coefficients.
struct WeierstrassModel {
    Rational a1, a2, a3, a4, a6;
    bool is_integral() const;
    bool operator==(const WeierstrassModel&) const = default;
};

// b- and c-invariants.  Satisfies 1728 disc = c4^3 - c6^2.
struct Invariants {
    Rational b2, b4, b6, b8, c4, c6, disc;
    Rational j() const;  // c4^3 / disc
};

// Throws SingularCurve when the discriminant vanishes.
Invariants invariants(const WeierstrassModel& m);

// Coordinate change x = u^2 x' + r, y = u^3 y' + u^2 s x' + t; u != 0.
struct Transform {
    Rational u, r, s, t;
};

WeierstrassModel apply_transform(const WeierstrassModel& m, const Transform& tr);

// Rescales so every coefficient is an integer (u = 1/L for a common
// denominator L).  Identity on already-integral models.
WeierstrassModel integral_model(const WeierstrassModel& m);

// ---- curve text ------------------------------------------------------------

// Accepts "[a1,a2,a3,a4,a6]" with integer or p/q entries; whitespace is
// ignored.  Round-trips exactly with curve_text.
WeierstrassModel parse_curve(const std::string& text);
std::string curve_text(const WeierstrassModel& m);

// ---- reduction data ----------------------------------------------------------

enum class KodairaType { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaSymbol {
    KodairaType type;
    long long n = 0;  // the index for In / In*
    std::string str() const;
    bool operator==(const KodairaSymbol&) const = default;
};

enum class ReductionClass {
    GOOD,
    SPLIT_MULT,
    NONSPLIT_MULT,
    ADDITIVE_POT_GOOD,
    ADDITIVE_POT_MULT,
};

const char* reduction_class_name(ReductionClass c);

struct LocalReduction {
    Integer p;
    KodairaSymbol kodaira;
    ReductionClass cls;
    long long v_disc_min;         // v_p of the minimal discriminant
    Val v_c4_min, v_c6_min;       // on the minimal model
    WeierstrassModel minimal;     // p-minimal integral model
    long long u_exponent;         // v_p(u) taking the integral input to minimal
};

// Runs Tate's algorithm at p on any rational model.  The returned model is
// p-minimal and integral; coefficients at other primes are not touched.
LocalReduction local_reduction(const WeierstrassModel& m, const Integer& p);

// Convenience views of local_reduction.
LocalReduction minimal_model_at(const WeierstrassModel& m, const Integer& p);
KodairaSymbol kodaira_type(const WeierstrassModel& m, const Integer& p);
ReductionClass reduction_class(const WeierstrassModel& m, const Integer& p);

// ---- global models -------------------------------------------------------------

// Laska-Kraus-Connell reduced global minimal model: a1, a3 in {0,1} and
// a2 in {-1,0,1}.  `hints` assists the discriminant factorization.
WeierstrassModel global_minimal_model(const WeierstrassModel& m,
                                      const std::vector<Integer>& hints = {});

// Globally minimal model of the quadratic twist by d != 0.
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Integer& d,
                                 const std::vector<Integer>& hints = {});

// Raw twisted model y^2 = x^3 - 27 d^2 c4 x - 54 d^3 c6 (not minimalized).
WeierstrassModel quadratic_twist_raw(const WeierstrassModel& m, const Integer& d);

// y^2 = a x^3 + b x^2 + c x + e mapped to [0, b, 0, ac, a^2 e]; a != 0.
WeierstrassModel cubic_to_weierstrass(const Rational& a, const Rational& b,
                                      const Rational& c, const Rational& e);

// y^2 = x^3 - n^2 x for n >= 1.
WeierstrassModel congruent_curve(const Integer& n);

}  // namespace rootno
