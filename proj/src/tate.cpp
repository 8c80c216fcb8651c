#include "rootno/curve.hpp"

namespace rootno {

namespace {

Integer exact_div(const Integer& n, const Integer& d) {
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        throw Error("tate: expected exact division");
    return n / d;
}

// Integral model with cached b-invariants; all Tate bookkeeping happens here.
struct IntModel {
    Integer a1, a2, a3, a4, a6;
    Integer b2, b4, b6, b8, disc;

    void refresh() {
        b2 = a1 * a1 + 4 * a2;
        b4 = 2 * a4 + a1 * a3;
        b6 = a3 * a3 + 4 * a6;
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    }

    // x -> x + r
    void translate_x(const Integer& r) {
        Integer A2 = a2 + 3 * r;
        Integer A3 = a3 + r * a1;
        Integer A4 = a4 + 2 * r * a2 + 3 * r * r;
        Integer A6 = a6 + r * a4 + r * r * a2 + r * r * r;
        a2 = A2; a3 = A3; a4 = A4; a6 = A6;
        refresh();
    }

    // y -> y + s x
    void twist_s(const Integer& s) {
        Integer A1 = a1 + 2 * s;
        Integer A2 = a2 - s * a1 - s * s;
        Integer A4 = a4 - s * a3;
        a1 = A1; a2 = A2; a4 = A4;
        refresh();
    }

    // y -> y + t
    void translate_y(const Integer& t) {
        Integer A3 = a3 + 2 * t;
        Integer A4 = a4 - t * a1;
        Integer A6 = a6 - t * a3 - t * t;
        a3 = A3; a4 = A4; a6 = A6;
        refresh();
    }

    // (x, y) -> (p^2 x, p^3 y); requires p^i | a_i.
    void rescale(const Integer& p) {
        Integer p2 = p * p, p3 = p2 * p;
        a1 = exact_div(a1, p);
        a2 = exact_div(a2, p2);
        a3 = exact_div(a3, p3);
        a4 = exact_div(a4, p2 * p2);
        a6 = exact_div(a6, p3 * p3);
        refresh();
    }
};

Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw Error("tate: residue not invertible");
    return r;
}

bool div_pk(const Integer& n, const Integer& p, long long k) {
    return valuation(n, p) >= k;
}

// Moves the singular point of the reduction mod p to the origin.  The
// singular point of a Weierstrass cubic is unique, hence F_p-rational.
void move_singular_point(IntModel& E, const Integer& p) {
    Integer x0, y0;
    if (p == 2) {
        if (mod(E.a1, 2) == 1) {
            x0 = mod(E.a3, 2);
            y0 = mod(x0 * x0 + E.a4, 2);
        } else {
            x0 = mod(E.a4, 2);
            y0 = mod(x0 * x0 * x0 + E.a2 * x0 * x0 + E.a4 * x0 + E.a6, 2);
        }
    } else if (p == 3) {
        // x0 is the multiple root of 4x^3 + b2 x^2 + 2 b4 x + b6 mod 3.
        if (mod(E.b2, 3) != 0)
            x0 = mod(-E.b4 * inv_mod(E.b2, 3), 3);
        else
            x0 = mod(-E.b6, 3);
        y0 = mod(E.a1 * x0 + E.a3, 3);  // -(a1 x0 + a3) 2^{-1}, and 2^{-1} = -1
    } else {
        Integer A = 4, B = E.b2, C = 2 * E.b4, D = E.b6;
        Integer t = mod(B * B - 3 * A * C, p);
        if (t == 0)
            x0 = mod(-B * inv_mod(3 * A, p), p);
        else
            x0 = mod((9 * A * D - B * C) * inv_mod(2 * t, p), p);
        y0 = mod(-(E.a1 * x0 + E.a3) * inv_mod(Integer(2), p), p);
    }
    E.translate_x(x0);
    E.translate_y(y0);
    if (!div_pk(E.a3, p, 1) || !div_pk(E.a4, p, 1) || !div_pk(E.a6, p, 1))
        throw Error("tate: singular point translation failed");
}

// Root structure of T^3 + A T^2 + B T + C mod p.
struct CubicRoots {
    int repeated;  // 0 = separable, 2 = double root, 3 = triple root
    Integer root;  // the repeated root when repeated > 0
};

CubicRoots cubic_analyze(const Integer& A, const Integer& B, const Integer& C,
                         const Integer& p) {
    Integer a = mod(A, p), b = mod(B, p), c = mod(C, p);
    if (p == 2) {
        if (a == 0 && b == 0 && c == 0) return {3, 0};
        if (a == 1 && b == 1 && c == 1) return {3, 1};
        if (a == 1 && b == 0 && c == 0) return {2, 0};
        if (a == 0 && b == 1 && c == 0) return {2, 1};
        return {0, 0};
    }
    if (p == 3) {
        if (a != 0) {
            // The derivative reduces to 2aT + b; only its zero can repeat,
            // and a triple root would force a = 0.
            Integer r = mod(b * inv_mod(a, 3), 3);
            Integer value = mod(((r + a) * r + b) * r + c, 3);
            return value == 0 ? CubicRoots{2, r} : CubicRoots{0, 0};
        }
        if (b != 0) return {0, 0};
        return {3, mod(-c, 3)};
    }
    Integer disc = mod(18 * a * b * c - 4 * a * a * a * c + a * a * b * b -
                           4 * b * b * b - 27 * c * c,
                       p);
    if (disc != 0) return {0, 0};
    Integer t = mod(a * a - 3 * b, p);
    if (t == 0) return {3, mod(-a * inv_mod(Integer(3), p), p)};
    return {2, mod((9 * c - a * b) * inv_mod(2 * t, p), p)};
}

struct QuadRoots {
    bool distinct;
    Integer root;  // double root when !distinct
};

// Y^2 + A Y - B mod p.
QuadRoots quad_y_analyze(const Integer& A, const Integer& B, const Integer& p) {
    if (p == 2) {
        if (mod(A, 2) == 1) return {true, 0};
        return {false, mod(B, 2)};
    }
    Integer disc = mod(A * A + 4 * B, p);
    if (disc != 0) return {true, 0};
    return {false, mod(-A * inv_mod(Integer(2), p), p)};
}

// a X^2 + b X + c mod p with a a unit.
QuadRoots quad_x_analyze(const Integer& a, const Integer& b, const Integer& c,
                         const Integer& p) {
    if (p == 2) {
        if (mod(b, 2) == 1) return {true, 0};
        return {false, mod(c * inv_mod(a, 2), 2)};
    }
    Integer disc = mod(b * b - 4 * a * c, p);
    if (disc != 0) return {true, 0};
    return {false, mod(-b * inv_mod(2 * a, p), p)};
}

WeierstrassModel to_model(const IntModel& E) {
    return WeierstrassModel{Rational(E.a1), Rational(E.a2), Rational(E.a3),
                            Rational(E.a4), Rational(E.a6)};
}

}  // namespace

LocalReduction local_reduction(const WeierstrassModel& m, const Integer& p) {
    require_prime(p, "local_reduction");
    WeierstrassModel mi = integral_model(m);
    invariants(mi);  // rejects singular input

    IntModel E;
    E.a1 = Integer(mi.a1.get_num());
    E.a2 = Integer(mi.a2.get_num());
    E.a3 = Integer(mi.a3.get_num());
    E.a4 = Integer(mi.a4.get_num());
    E.a6 = Integer(mi.a6.get_num());
    E.refresh();

    long long u_exp = 0;
    KodairaSymbol sym{};
    bool split = false;

    for (int guard = 0;; ++guard) {
        if (guard > 64) throw Error("tate: failed to terminate");
        Val vd = valuation(E.disc, p);
        if (vd.is_infinite()) throw SingularCurve("tate: discriminant vanished");
        long long n = vd.value();

        // Step 1: good reduction.
        if (n == 0) {
            sym = {KodairaType::I0, 0};
            break;
        }

        move_singular_point(E, p);

        // Step 2: multiplicative reduction.  The tangent directions at the
        // node are the roots of T^2 + a1 T - a2, whose discriminant is b2.
        if (!div_pk(E.b2, p, 1)) {
            sym = {KodairaType::In, n};
            if (p == 2)
                split = mod(E.a2, 2) == 0;
            else
                split = legendre(E.b2, p) == 1;
            break;
        }

        // Step 3.
        if (!div_pk(E.a6, p, 2)) {
            sym = {KodairaType::II, 0};
            break;
        }
        // Step 4.
        if (!div_pk(E.b8, p, 3)) {
            sym = {KodairaType::III, 0};
            break;
        }
        // Step 5.
        if (!div_pk(E.b6, p, 3)) {
            sym = {KodairaType::IV, 0};
            break;
        }

        // Step 6 normalization: p | a1, a2; p^2 | a3, a4; p^3 | a6.
        if (p == 2) {
            if (mod(E.a2, 2) != 0) E.twist_s(1);
            Integer tau = mod(exact_div(E.a6, 4), 2);
            if (tau != 0) E.translate_y(2 * tau);
        } else {
            Integer s = mod(-E.a1 * inv_mod(Integer(2), p), p);
            if (s != 0) E.twist_s(s);
            Integer p2 = p * p;
            Integer t = mod(-E.a3 * inv_mod(Integer(2), p2), p2);
            if (t != 0) E.translate_y(t);
        }
        if (!div_pk(E.a1, p, 1) || !div_pk(E.a2, p, 1) || !div_pk(E.a3, p, 2) ||
            !div_pk(E.a4, p, 2) || !div_pk(E.a6, p, 3))
            throw Error("tate: step 6 normalization failed");

        Integer p2 = p * p, p3 = p2 * p;
        CubicRoots P = cubic_analyze(exact_div(E.a2, p), exact_div(E.a4, p2),
                                     exact_div(E.a6, p3), p);

        if (P.repeated == 0) {
            sym = {KodairaType::I0star, 0};
            break;
        }

        if (P.repeated == 2) {
            // Step 7: double root to the origin, then the I_n* sub-algorithm.
            if (P.root != 0) E.translate_x(p * P.root);
            if (!(valuation(E.a2, p) == Val(1)) || !div_pk(E.a4, p, 3) ||
                !div_pk(E.a6, p, 4))
                throw Error("tate: step 7 entry state violated");
            long long mstep = 1;
            while (true) {
                Integer pm1;  // p^{m+1}
                mpz_pow_ui(pm1.get_mpz_t(), p.get_mpz_t(),
                           static_cast<unsigned long>(mstep + 1));
                Integer p2m2 = pm1 * pm1;
                QuadRoots qy =
                    quad_y_analyze(exact_div(E.a3, pm1), exact_div(E.a6, p2m2), p);
                if (qy.distinct) {
                    sym = {KodairaType::Instar, 2 * mstep - 1};
                    break;
                }
                if (qy.root != 0) E.translate_y(pm1 * qy.root);

                Integer pm2 = pm1 * p;
                Integer p2m3 = p2m2 * p;
                QuadRoots qx = quad_x_analyze(exact_div(E.a2, p),
                                              exact_div(E.a4, pm2),
                                              exact_div(E.a6, p2m3), p);
                if (qx.distinct) {
                    sym = {KodairaType::Instar, 2 * mstep};
                    break;
                }
                if (qx.root != 0) E.translate_x(pm1 * qx.root);
                ++mstep;
                if (mstep > n) throw Error("tate: step 7 failed to terminate");
            }
            // v(disc) = 6 + n only for tame p; wild ramification at 2 and 3
            // pushes v(disc) higher, so only the lower bound is checked.
            if (6 + sym.n > n)
                throw Error("tate: In* index inconsistent with v(disc)");
            break;
        }

        // Step 8: triple root to the origin, then the a3/a6 quadratic.
        if (P.root != 0) E.translate_x(p * P.root);
        if (!div_pk(E.a2, p, 2) || !div_pk(E.a4, p, 3) || !div_pk(E.a6, p, 4))
            throw Error("tate: step 8 entry state violated");
        {
            Integer p4 = p2 * p2;
            QuadRoots qy =
                quad_y_analyze(exact_div(E.a3, p2), exact_div(E.a6, p4), p);
            if (qy.distinct) {
                sym = {KodairaType::IVstar, 0};
                break;
            }
            if (qy.root != 0) E.translate_y(p2 * qy.root);
        }
        // Step 9.
        if (!div_pk(E.a4, p, 4)) {
            sym = {KodairaType::IIIstar, 0};
            break;
        }
        // Step 10.
        if (!div_pk(E.a6, p, 6)) {
            sym = {KodairaType::IIstar, 0};
            break;
        }
        // Step 11: not minimal at p; scale down and start over.
        E.rescale(p);
        ++u_exp;
    }

    LocalReduction out;
    out.p = p;
    out.kodaira = sym;
    out.v_disc_min = valuation(E.disc, p).value();
    Integer c4 = E.b2 * E.b2 - 24 * E.b4;
    Integer c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
    out.v_c4_min = valuation(c4, p);
    out.v_c6_min = valuation(c6, p);
    out.minimal = to_model(E);
    out.u_exponent = u_exp;

    switch (sym.type) {
        case KodairaType::I0:
            out.cls = ReductionClass::GOOD;
            break;
        case KodairaType::In:
            out.cls = split ? ReductionClass::SPLIT_MULT
                            : ReductionClass::NONSPLIT_MULT;
            break;
        default: {
            // v(j) = 3 v(c4) - v(disc): negative exactly in the potentially
            // multiplicative case.
            bool pot_mult = !out.v_c4_min.is_infinite() &&
                            3 * out.v_c4_min.value() - out.v_disc_min < 0;
            out.cls = pot_mult ? ReductionClass::ADDITIVE_POT_MULT
                               : ReductionClass::ADDITIVE_POT_GOOD;
            break;
        }
    }
    return out;
}

}  // namespace rootno
