#include "rootno/localroot.hpp"

#include <deque>

#include "rootno/errors.hpp"

namespace rootno {

namespace {

// Parity of floor(d * q / 12) for 0 <= d < 12, where only q mod 24 is
// needed: floor(n/12) mod 2 equals floor((n mod 24)/12).
bool tame_additive_parity(long long d, unsigned long q_mod24) {
    return (static_cast<unsigned long>(d) * q_mod24) % 24 >= 12;
}

unsigned long pow_mod24(const Integer& p, long long f) {
    Integer e(static_cast<long>(f)), m(24), r;
    mpz_powm(r.get_mpz_t(), p.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

// Wild potentially good cases at 3.  On the 3-minimal model, complete the
// square to y^2 = f(x) and hunt for an integer r with 3 not dividing the
// (finite) valuation of f(r); such r exist because the reduction is not
// potentially multiplicative.  Classes of r mod 3^k are refined breadth
// first; a class whose value's valuation drops below the class level is
// decided for all its members.
Sign kobayashi_search(const LocalReduction& red) {
    Invariants inv = invariants(red.minimal);
    Rational A = inv.b2 / 4, B = inv.b4 / 2, C = inv.b6 / 4;
    auto f = [&](const Integer& r) -> Rational {
        Rational x(r);
        return ((x + A) * x + B) * x + C;
    };

    constexpr long long kMaxLevel = 12;
    Rational c;
    long long vc = -1;
    std::deque<std::pair<Integer, long long>> queue;
    queue.emplace_back(0, 0);
    while (!queue.empty() && vc < 0) {
        auto [r0, level] = queue.front();
        queue.pop_front();
        Rational value = f(r0);
        Val v = value == 0 ? Val::infinity() : valuation(value, 3);
        if (!v.is_infinite() && v.value() < level) {
            if (v.value() % 3 != 0) {
                c = value;
                vc = v.value();
            }
            continue;  // settled for the whole class
        }
        if (level >= kMaxLevel)
            throw ModelSearchExhausted(
                "no translation with valuation prime to 3 within depth " +
                std::to_string(kMaxLevel));
        Integer step;
        mpz_ui_pow_ui(step.get_mpz_t(), 3, static_cast<unsigned long>(level));
        for (int t = 0; t < 3; ++t) queue.emplace_back(r0 + t * step, level + 1);
    }
    if (vc < 0)
        throw ModelSearchExhausted("translation search exhausted all classes");

    long long vD = red.v_disc_min;
    Integer disc(inv.disc.get_num());  // minimal model, so disc is integral
    bool disc_square =
        vD % 2 == 0 && legendre(unit_part(disc, 3), 3) == 1;
    Sign w = Sign::from_parity(!disc_square);
    w *= hilbert_symbol(Rational(inv.disc), c, Place::prime(3));
    if (vD % 2 != 0) w *= Sign::from_int(legendre(Integer(static_cast<long>(vc)), 3));
    w *= Sign::from_parity((vD * (vD - 1) / 2) % 2 != 0);
    return w;
}

Sign kobayashi_from(const LocalReduction& red) {
    if (red.cls != ReductionClass::ADDITIVE_POT_GOOD)
        throw UnsupportedLocalCase(
            "kobayashi root number needs additive potentially good reduction at 3");
    switch (red.kodaira.type) {
    case KodairaType::I0star:
        // Quadratic-twist case: the character is ramified quadratic,
        // w = (-1 | 3).
        return Sign::minus();
    case KodairaType::III:
    case KodairaType::IIIstar:
        // w = (-2 | 3).
        return Sign::plus();
    case KodairaType::II:
    case KodairaType::IV:
    case KodairaType::IIstar:
    case KodairaType::IVstar:
        return kobayashi_search(red);
    default:
        // I_n* with n >= 1 forces v_3(c4) = 2 and v_3(disc) > 6, which is
        // potentially multiplicative; it cannot reach this branch.
        throw UnsupportedLocalCase("unexpected reduction type at 3: " +
                                   red.kodaira.str());
    }
}

}  // namespace

Sign root_number_infinite() { return Sign::minus(); }

CTriple c_triple(const WeierstrassModel& m) {
    Invariants inv = invariants(m);
    return c_triple_vals(valuation(inv.disc, 2), valuation(inv.c6, 2),
                         valuation(inv.c4, 2));
}

Sign root_number_2(const WeierstrassModel& m) {
    return q2_root_number(q2_context(m));
}

Sign kobayashi_root(const WeierstrassModel& m) {
    return kobayashi_from(local_reduction(m, 3));
}

Sign local_root_number(const WeierstrassModel& m, const Integer& p) {
    require_prime(p, "local_root_number");
    if (p == 2) return root_number_2(m);
    LocalReduction red = local_reduction(m, p);
    switch (red.cls) {
    case ReductionClass::GOOD:
        return Sign::plus();
    case ReductionClass::SPLIT_MULT:
        return Sign::minus();
    case ReductionClass::NONSPLIT_MULT:
        return Sign::plus();
    case ReductionClass::ADDITIVE_POT_MULT:
        // The quadratic twist to multiplicative reduction is by a ramified
        // character, so w = (-1 | p).
        return Sign::from_int(legendre(-1, p));
    case ReductionClass::ADDITIVE_POT_GOOD:
        if (p == 3) return kobayashi_from(red);
        return Sign::from_parity(
            tame_additive_parity(red.v_disc_min, pow_mod24(p, 1)));
    }
    throw Error("local_root_number: unreachable reduction class");
}

Sign local_root_number_ext(const WeierstrassModel& m, const ExtPlace& place) {
    require_prime(place.p, "local_root_number_ext");
    if (place.e < 1 || place.f < 1)
        throw ZeroInput("local_root_number_ext: e and f must be positive");
    LocalReduction red = local_reduction(m, place.p);
    switch (red.cls) {
    case ReductionClass::GOOD:
        return Sign::plus();
    case ReductionClass::SPLIT_MULT:
        return Sign::minus();
    case ReductionClass::NONSPLIT_MULT:
        // Split over the extension exactly when the residue degree is even.
        return place.f % 2 == 0 ? Sign::minus() : Sign::plus();
    default:
        break;
    }
    if (place.p == 2 || place.p == 3)
        throw UnsupportedLocalCase("additive reduction at " + place.p.get_str() +
                                   " over an extension");
    if (red.cls == ReductionClass::ADDITIVE_POT_MULT) {
        if (place.e % 2 == 0)
            throw UnsupportedLocalCase(
                "potentially multiplicative reduction with even ramification");
        return Sign::from_int(residue_symbol_ext(-1, place.p, place.f));
    }
    // Additive, potentially good, p >= 5: minimal discriminant valuation
    // over the extension is e * v(disc) reduced mod 12, and the residue
    // field has q = p^f elements.
    long long d = (place.e * red.v_disc_min) % 12;
    if (d == 0) return Sign::plus();
    return Sign::from_parity(tame_additive_parity(d, pow_mod24(place.p, place.f)));
}

}  // namespace rootno
