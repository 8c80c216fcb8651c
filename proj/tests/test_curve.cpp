#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rootno/curve.hpp"

using namespace rootno;

namespace {

std::mt19937_64 rng(0x5eed0002);

long rint(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

WeierstrassModel random_integral_model(long long bound) {
    while (true) {
        WeierstrassModel m{Rational(rint(-bound, bound)), Rational(rint(-bound, bound)),
                           Rational(rint(-bound, bound)), Rational(rint(-bound, bound)),
                           Rational(rint(-bound, bound))};
        try {
            invariants(m);
            return m;
        } catch (const SingularCurve&) {
        }
    }
}

Rational rq(long nb, long db) {
    Integer num(rint(-nb, nb));
    Integer den(rint(1, db));
    return make_rational(num, den);
}

KodairaSymbol sym(KodairaType t, long long n = 0) { return KodairaSymbol{t, n}; }

// Kodaira symbol from (v(c4), v(disc)) of a p-minimal model, valid for p >= 5.
KodairaSymbol kodaira_oracle_tame(Val vc4, long long vd) {
    if (vd == 0) return {KodairaType::I0, 0};
    if (vc4 == 0) return {KodairaType::In, vd};
    if (vd == 2) return {KodairaType::II, 0};
    if (vd == 3) return {KodairaType::III, 0};
    if (vd == 4) return {KodairaType::IV, 0};
    if (vd == 6) return {KodairaType::I0star, 0};
    if (vc4 == 2) return {KodairaType::Instar, vd - 6};
    if (vd == 8) return {KodairaType::IVstar, 0};
    if (vd == 9) return {KodairaType::IIIstar, 0};
    if (vd == 10) return {KodairaType::IIstar, 0};
    throw Error("no tame Kodaira symbol for these valuations");
}

}  // namespace

TEST_CASE("curve text round trip") {
    for (const char* s : {"[0,-1,1,0,0]", "[1,-1,0,4,-3]", "[0,1,0,-12,-67/4]",
                          "[1/2,0,-3/5,7,11/13]"}) {
        WeierstrassModel m = parse_curve(s);
        CHECK(curve_text(m) == s);
    }
    WeierstrassModel ws = parse_curve("  [ 0 , -1 , 1 , 0 , 0 ]  ");
    CHECK(curve_text(ws) == "[0,-1,1,0,0]");
    CHECK_THROWS_AS(parse_curve("[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(parse_curve("[1,2,3,4,5,6]"), ParseError);
    CHECK_THROWS_AS(parse_curve("1,2,3,4,5"), ParseError);
    CHECK_THROWS_AS(parse_curve("[1,2,3,4,x]"), ParseError);
    CHECK_THROWS_AS(parse_curve("[1,2,3,4,5] junk"), ParseError);
    CHECK_THROWS_AS(parse_curve("[1,2,3,4,1/0]"), ParseError);
}

TEST_CASE("invariants on pinned curves") {
    Invariants iv = invariants(parse_curve("[0,-1,1,0,0]"));
    CHECK(iv.c4 == 16);
    CHECK(iv.c6 == -152);
    CHECK(iv.disc == -11);

    iv = invariants(parse_curve("[0,0,1,-1,0]"));
    CHECK(iv.c4 == 48);
    CHECK(iv.c6 == -216);
    CHECK(iv.disc == 37);

    iv = invariants(parse_curve("[0,1,0,-12,-67/4]"));
    CHECK(iv.c4 == 592);
    CHECK(iv.c6 == 10952);
    CHECK(iv.disc == 50653);  // 37^3
    CHECK(iv.j() == make_rational(Integer(592) * 592 * 592, 50653));

    iv = invariants(parse_curve("[0,-99997,-23,-17,42]"));
    CHECK(iv.disc == Integer("11151042672633178717"));

    iv = invariants(parse_curve("[0,0,0,-64,-128]"));
    CHECK(iv.disc == 9699328);  // 2^18 * 37

    CHECK_THROWS_AS(invariants(parse_curve("[0,0,0,0,0]")), SingularCurve);
    CHECK_THROWS_AS(invariants(parse_curve("[0,0,0,-3,2]")), SingularCurve);
}

TEST_CASE("invariant identities hold on random models") {
    for (int i = 0; i < 10000; ++i) {
        WeierstrassModel m{rq(9, 4), rq(9, 4), rq(9, 4), rq(9, 4), rq(9, 4)};
        Invariants iv;
        try {
            iv = invariants(m);
        } catch (const SingularCurve&) {
            continue;
        }
        CHECK(1728 * iv.disc == iv.c4 * iv.c4 * iv.c4 - iv.c6 * iv.c6);
        CHECK(4 * iv.b8 == iv.b2 * iv.b6 - iv.b4 * iv.b4);
    }
}

TEST_CASE("transforms rescale invariants by powers of u") {
    for (int i = 0; i < 1000; ++i) {
        WeierstrassModel m = random_integral_model(8);
        Transform tr{rq(5, 3), rq(4, 2), rq(4, 2), rq(4, 2)};
        if (tr.u == 0) tr.u = 2;
        WeierstrassModel t = apply_transform(m, tr);
        Invariants a = invariants(m), b = invariants(t);
        Rational u4 = tr.u * tr.u * tr.u * tr.u;
        Rational u6 = u4 * tr.u * tr.u;
        CHECK(b.c4 * u4 == a.c4);
        CHECK(b.c6 * u6 == a.c6);
        CHECK(b.disc * u6 * u6 == a.disc);
        if (a.c4 != 0) CHECK(a.j() == b.j());

        // Undo the change of coordinates exactly.
        Rational iu = 1 / tr.u;
        Transform inv{iu, -tr.r * iu * iu, -tr.s * iu,
                      Rational(tr.r * tr.s - tr.t) * iu * iu * iu};
        WeierstrassModel back = apply_transform(t, inv);
        CHECK(back == m);
    }
}

TEST_CASE("integral_model clears denominators and keeps the curve") {
    WeierstrassModel m = parse_curve("[0,1,0,-12,-67/4]");
    WeierstrassModel im = integral_model(m);
    CHECK(im.is_integral());
    Invariants a = invariants(m), b = invariants(im);
    CHECK(a.j() == b.j());
    // u = 1/2 scaling multiplies disc by 2^12.
    CHECK(b.disc == a.disc * 4096);
    WeierstrassModel already = parse_curve("[0,-1,1,0,0]");
    CHECK(integral_model(already) == already);
}

TEST_CASE("named model constructors") {
    CHECK(curve_text(cubic_to_weierstrass(4, 0, -32, -35)) == "[0,0,0,-128,-560]");
    CHECK(curve_text(cubic_to_weierstrass(9, 0, 16, 16)) == "[0,0,0,144,1296]");
    CHECK_THROWS_AS(cubic_to_weierstrass(0, 1, 1, 1), ZeroInput);

    WeierstrassModel e5 = congruent_curve(5);
    CHECK(curve_text(e5) == "[0,0,0,-25,0]");
    Invariants iv = invariants(e5);
    CHECK(iv.c4 == 48 * 25);
    CHECK(iv.disc == Integer(64) * Integer("15625"));  // 64 n^6
    CHECK_THROWS_AS(congruent_curve(0), ZeroInput);
}

TEST_CASE("kodaira types on pinned curves") {
    // Conductor-49 curve with an extra-ramified 7.
    LocalReduction r = local_reduction(parse_curve("[1,-1,0,-2,-1]"), 7);
    CHECK(r.kodaira == sym(KodairaType::III));
    CHECK(r.v_disc_min == 3);
    CHECK(r.cls == ReductionClass::ADDITIVE_POT_GOOD);
    CHECK(r.u_exponent == 0);

    // y^2 = x^3 - 91x + 182: type II at both 7 and 13.
    WeierstrassModel m = parse_curve("[0,0,0,-91,182]");
    CHECK(kodaira_type(m, 7) == sym(KodairaType::II));
    CHECK(kodaira_type(m, 13) == sym(KodairaType::II));
    // The same model is non-minimal at 2 and good there after rescaling.
    LocalReduction at2 = local_reduction(m, 2);
    CHECK(at2.kodaira == sym(KodairaType::I0));
    CHECK(at2.u_exponent == 1);
    CHECK(at2.v_disc_min == 0);
    CHECK(at2.cls == ReductionClass::GOOD);

    // y^2 = x^3 + x^2 - x: type IV at 2.
    CHECK(kodaira_type(parse_curve("[0,1,0,-1,0]"), 2) ==
          sym(KodairaType::IV));

    // y^2 = x^3 - 4x - 2: type II at 2 with v(disc) = 6.
    LocalReduction rb = local_reduction(parse_curve("[0,0,0,-4,-2]"), 2);
    CHECK(rb.kodaira == sym(KodairaType::II));
    CHECK(rb.v_disc_min == 6);
    CHECK(rb.u_exponent == 0);

    // y^2 = x^3 - 64x - 128 is the u = 2 scaling of the previous model.
    LocalReduction rs = local_reduction(parse_curve("[0,0,0,-64,-128]"), 2);
    CHECK(rs.kodaira == sym(KodairaType::II));
    CHECK(rs.v_disc_min == 6);
    CHECK(rs.u_exponent == 1);
    CHECK(rs.minimal == parse_curve("[0,0,0,-4,-2]"));

    // 27a1 = [0,0,1,0,-7]: disc -3^9, type IV* at 3, additive potentially good.
    LocalReduction r27 = local_reduction(parse_curve("[0,0,1,0,-7]"), 3);
    CHECK(r27.kodaira == sym(KodairaType::IVstar));
    CHECK(r27.v_disc_min == 9);
    CHECK(r27.cls == ReductionClass::ADDITIVE_POT_GOOD);

    // 32a1 = [0,0,0,4,0]: additive at 2.
    CHECK(reduction_class(parse_curve("[0,0,0,4,0]"), 2) ==
          ReductionClass::ADDITIVE_POT_GOOD);
}

TEST_CASE("multiplicative reduction classes on pinned curves") {
    // 11a3 is split at 11; 37a1 is nonsplit at 37.
    CHECK(reduction_class(parse_curve("[0,-1,1,0,0]"), 11) ==
          ReductionClass::SPLIT_MULT);
    CHECK(kodaira_type(parse_curve("[0,-1,1,0,0]"), 11) ==
          sym(KodairaType::In, 1));
    CHECK(reduction_class(parse_curve("[0,0,1,-1,0]"), 37) ==
          ReductionClass::NONSPLIT_MULT);
    // 19a3 is split at 19; 73a1 is split at 73.
    CHECK(reduction_class(parse_curve("[0,1,1,1,0]"), 19) ==
          ReductionClass::SPLIT_MULT);
    CHECK(reduction_class(parse_curve("[1,-1,0,4,-3]"), 73) ==
          ReductionClass::SPLIT_MULT);
    // The curve of conductor 17*655943686625481101 is nonsplit at both.
    WeierstrassModel big = parse_curve("[0,-99997,-23,-17,42]");
    CHECK(reduction_class(big, 17) == ReductionClass::NONSPLIT_MULT);
    CHECK(reduction_class(big, Integer("655943686625481101")) ==
          ReductionClass::NONSPLIT_MULT);
    // 11a3 at a good prime.
    CHECK(reduction_class(parse_curve("[0,-1,1,0,0]"), 7) == ReductionClass::GOOD);
}

TEST_CASE("split criterion matches the c6 square-class test at tame primes") {
    int seen = 0;
    while (seen < 400) {
        WeierstrassModel m = random_integral_model(12);
        for (long p : {5L, 7L, 11L, 13L}) {
            LocalReduction r = local_reduction(m, p);
            if (r.kodaira.type != KodairaType::In) continue;
            Invariants iv = invariants(r.minimal);
            bool split_by_c6 = legendre(Integer(Rational(-iv.c6).get_num()), p) == 1;
            CHECK((r.cls == ReductionClass::SPLIT_MULT) == split_by_c6);
            ++seen;
        }
    }
}

TEST_CASE("tame Kodaira symbols match the valuation table") {
    for (int i = 0; i < 3000; ++i) {
        WeierstrassModel m = random_integral_model(10);
        for (long p : {5L, 7L}) {
            LocalReduction r = local_reduction(m, p);
            CHECK(r.kodaira == kodaira_oracle_tame(r.v_c4_min, r.v_disc_min));
        }
    }
    // Dense additive coverage at larger primes via twists by p.
    for (int i = 0; i < 300; ++i) {
        long p = std::vector<long>{5, 7, 11, 13}[rng() % 4];
        WeierstrassModel m = random_integral_model(6);
        WeierstrassModel tw = quadratic_twist_raw(m, Integer(p));
        LocalReduction r = local_reduction(tw, p);
        CHECK(r.kodaira == kodaira_oracle_tame(r.v_c4_min, r.v_disc_min));
    }
}

TEST_CASE("local reduction is invariant under coordinate changes") {
    for (int i = 0; i < 400; ++i) {
        WeierstrassModel m = random_integral_model(8);
        Transform tr{Rational(rint(1, 3)), Rational(rint(-4, 4)),
                     Rational(rint(-4, 4)), Rational(rint(-4, 4))};
        WeierstrassModel t = apply_transform(m, tr);
        for (long p : {2L, 3L, 5L, 7L}) {
            LocalReduction a = local_reduction(m, p);
            LocalReduction b = local_reduction(t, p);
            CHECK(a.kodaira == b.kodaira);
            CHECK(a.cls == b.cls);
            CHECK(a.v_disc_min == b.v_disc_min);
            CHECK(a.v_c4_min == b.v_c4_min);
        }
    }
}

TEST_CASE("global minimal model recovers reduced curves") {
    for (const char* s : {"[0,-1,1,0,0]", "[0,0,1,-1,0]", "[1,-1,0,-2,-1]",
                          "[0,1,1,-2,0]", "[1,-1,0,4,-3]", "[0,0,1,0,-7]",
                          "[1,0,0,-3,1]", "[0,1,1,0,0]", "[0,0,0,4,0]"}) {
        WeierstrassModel m = parse_curve(s);
        CHECK(global_minimal_model(m) == m);
        // Scale up and shift, then recover.
        Transform tr{make_rational(1, 6), Rational(2), Rational(1), Rational(-3)};
        WeierstrassModel big = apply_transform(m, tr);
        CHECK(global_minimal_model(big) == m);
        Transform tq{make_rational(2, 5), rq(3, 2), rq(3, 2), rq(3, 2)};
        CHECK(global_minimal_model(apply_transform(m, tq)) == m);
    }
    // y^2 = x^3 - 91x + 182 is only non-minimal at 2.
    WeierstrassModel m = global_minimal_model(parse_curve("[0,0,0,-91,182]"));
    Invariants iv = invariants(m);
    CHECK(iv.disc == 8281);  // 7^2 * 13^2
}

TEST_CASE("quadratic twists") {
    WeierstrassModel e = parse_curve("[0,-1,1,0,0]");
    // Twisting by 1 or by a perfect square is the identity on minimal models.
    CHECK(quadratic_twist(e, 1) == e);
    CHECK(quadratic_twist(e, 9) == e);
    // Twisting twice by d returns to the curve.
    for (long d : {-2L, -1L, 3L, 5L, -7L, 6L}) {
        WeierstrassModel t = quadratic_twist(e, Integer(d));
        CHECK(quadratic_twist(t, Integer(d)) == e);
        Invariants a = invariants(e);
        Invariants b = invariants(quadratic_twist_raw(e, Integer(d)));
        // c4' / c4 = (6^4 d^2) on the raw model.
        CHECK(b.c4 == a.c4 * 1296 * d * d);
    }
    CHECK_THROWS_AS(quadratic_twist(e, 0), ZeroInput);
}
