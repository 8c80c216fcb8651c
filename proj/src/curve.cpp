#include "rootno/curve.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace rootno {

bool WeierstrassModel::is_integral() const {
    for (const Rational* a : {&a1, &a2, &a3, &a4, &a6})
        if (a->get_den() != 1) return false;
    return true;
}

Rational Invariants::j() const {
    return Rational(c4 * c4 * c4) / disc;
}

Invariants invariants(const WeierstrassModel& m) {
    Invariants iv;
    iv.b2 = m.a1 * m.a1 + 4 * m.a2;
    iv.b4 = 2 * m.a4 + m.a1 * m.a3;
    iv.b6 = m.a3 * m.a3 + 4 * m.a6;
    iv.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
            m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    iv.c4 = iv.b2 * iv.b2 - 24 * iv.b4;
    iv.c6 = -iv.b2 * iv.b2 * iv.b2 + 36 * iv.b2 * iv.b4 - 216 * iv.b6;
    iv.disc = -iv.b2 * iv.b2 * iv.b8 - 8 * iv.b4 * iv.b4 * iv.b4 -
              27 * iv.b6 * iv.b6 + 9 * iv.b2 * iv.b4 * iv.b6;
    if (iv.disc == 0)
        throw SingularCurve("invariants: discriminant vanishes for " + curve_text(m));
    return iv;
}

WeierstrassModel apply_transform(const WeierstrassModel& m, const Transform& tr) {
    if (tr.u == 0) throw ZeroInput("apply_transform: u must be nonzero");
    const Rational &u = tr.u, &r = tr.r, &s = tr.s, &t = tr.t;
    WeierstrassModel out;
    Rational u2 = u * u, u3 = u2 * u;
    out.a1 = (m.a1 + 2 * s) / u;
    out.a2 = (m.a2 - s * m.a1 + 3 * r - s * s) / u2;
    out.a3 = (m.a3 + r * m.a1 + 2 * t) / u3;
    out.a4 = (m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r -
              2 * s * t) /
             (u2 * u2);
    out.a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t -
              r * t * m.a1) /
             (u3 * u3);
    return out;
}

WeierstrassModel integral_model(const WeierstrassModel& m) {
    Integer L = 1;
    for (const Rational* a : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a->get_den().get_mpz_t());
    if (L == 1) return m;
    // Smallest u clearing all denominators: a_i scales by u^{-i}, so each
    // prime q needs v_q(u) = max_i ceil(v_q(den a_i) / i).
    Integer u = 1;
    for (const PrimePower& pp : factorize(L).factors) {
        const std::array<const Rational*, 5> as{&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
        const std::array<long long, 5> wt{1, 2, 3, 4, 6};
        long long e = 0;
        for (std::size_t i = 0; i < as.size(); ++i) {
            long long d = valuation(Integer(as[i]->get_den()), pp.p).value();
            e = std::max(e, (d + wt[i] - 1) / wt[i]);
        }
        for (long long k = 0; k < e; ++k) u *= pp.p;
    }
    return apply_transform(m, Transform{make_rational(1, u), 0, 0, 0});
}

// ---- curve text --------------------------------------------------------------

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Rational parse_entry(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("curve entry: expected an integer", start);
    Integer num(s.substr(start, i - start));
    skip_ws(s, i);
    if (i < s.size() && s[i] == '/') {
        ++i;
        skip_ws(s, i);
        std::size_t dstart = i;
        std::size_t ddigits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i, ++ddigits;
        if (ddigits == 0)
            throw ParseError("curve entry: expected digits after '/'", dstart);
        Integer den(s.substr(dstart, i - dstart));
        if (den == 0) throw ParseError("curve entry: zero denominator", dstart);
        return make_rational(num, den);
    }
    return Rational(num);
}

}  // namespace

WeierstrassModel parse_curve(const std::string& text) {
    std::size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '[')
        throw ParseError("curve: expected '['", i);
    ++i;
    Rational a[5];
    for (int k = 0; k < 5; ++k) {
        a[k] = parse_entry(text, i);
        skip_ws(text, i);
        if (k < 4) {
            if (i >= text.size() || text[i] != ',')
                throw ParseError("curve: expected ','", i);
            ++i;
        }
    }
    if (i >= text.size() || text[i] != ']')
        throw ParseError("curve: expected ']'", i);
    ++i;
    skip_ws(text, i);
    if (i != text.size())
        throw ParseError("curve: trailing characters", i);
    return WeierstrassModel{a[0], a[1], a[2], a[3], a[4]};
}

std::string curve_text(const WeierstrassModel& m) {
    std::string out = "[";
    const Rational* as[5] = {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
    for (int k = 0; k < 5; ++k) {
        if (k) out += ",";
        out += as[k]->get_str();
    }
    out += "]";
    return out;
}

// ---- Kodaira symbols -----------------------------------------------------------

std::string KodairaSymbol::str() const {
    switch (type) {
        case KodairaType::I0: return "I0";
        case KodairaType::In: return "I" + std::to_string(n);
        case KodairaType::II: return "II";
        case KodairaType::III: return "III";
        case KodairaType::IV: return "IV";
        case KodairaType::I0star: return "I0*";
        case KodairaType::Instar: return "I" + std::to_string(n) + "*";
        case KodairaType::IVstar: return "IV*";
        case KodairaType::IIIstar: return "III*";
        case KodairaType::IIstar: return "II*";
    }
    return "?";
}

const char* reduction_class_name(ReductionClass c) {
    switch (c) {
        case ReductionClass::GOOD: return "good";
        case ReductionClass::SPLIT_MULT: return "split multiplicative";
        case ReductionClass::NONSPLIT_MULT: return "nonsplit multiplicative";
        case ReductionClass::ADDITIVE_POT_GOOD: return "additive, potentially good";
        case ReductionClass::ADDITIVE_POT_MULT: return "additive, potentially multiplicative";
    }
    return "?";
}

LocalReduction minimal_model_at(const WeierstrassModel& m, const Integer& p) {
    return local_reduction(m, p);
}

KodairaSymbol kodaira_type(const WeierstrassModel& m, const Integer& p) {
    return local_reduction(m, p).kodaira;
}

ReductionClass reduction_class(const WeierstrassModel& m, const Integer& p) {
    return local_reduction(m, p).cls;
}

// ---- global minimal model --------------------------------------------------------

namespace {

std::vector<Integer> dividing_hints(const Integer& n, const std::vector<Integer>& hints) {
    std::vector<Integer> ok;
    for (const Integer& h : hints)
        if (h > 1 && mpz_divisible_p(n.get_mpz_t(), h.get_mpz_t())) ok.push_back(h);
    return ok;
}

}  // namespace

WeierstrassModel global_minimal_model(const WeierstrassModel& m,
                                      const std::vector<Integer>& hints) {
    WeierstrassModel E = integral_model(m);
    Invariants iv = invariants(E);
    Integer c4(iv.c4.get_num()), c6(iv.c6.get_num()), disc(iv.disc.get_num());

    // u = prod p^{k_p} over primes where the model is locally non-minimal;
    // k_p is the restart count of Tate's algorithm.
    Integer u = 1;
    Factorization f = factorize(disc, dividing_hints(disc, hints));
    for (const auto& pp : f.factors) {
        Val vc4 = valuation(c4, pp.p), vc6 = valuation(c6, pp.p);
        Val cap = val_min({Val(static_cast<long long>(pp.e)).floordiv(12),
                           vc4.floordiv(4), vc6.floordiv(6)});
        if (cap == Val(0) || cap < Val(0)) continue;
        LocalReduction lr = local_reduction(E, pp.p);
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), pp.p.get_mpz_t(),
                   static_cast<unsigned long>(lr.u_exponent));
        u *= pe;
    }

    Integer u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
    Integer c4m = c4 / u4, c6m = c6 / u6;

    // Reconstruct the reduced model from (c4, c6): pick b2 in [-5, 6] so the
    // b-invariants come out integral, then peel off the a-invariants.
    for (long b2l = -5; b2l <= 6; ++b2l) {
        Integer b2(b2l);
        Integer num4 = b2 * b2 - c4m;
        if (!mpz_divisible_ui_p(num4.get_mpz_t(), 24)) continue;
        Integer b4 = num4 / 24;
        Integer num6 = -b2 * b2 * b2 + 36 * b2 * b4 - c6m;
        if (!mpz_divisible_ui_p(num6.get_mpz_t(), 216)) continue;
        Integer b6 = num6 / 216;
        Integer a1 = ((b2 % 2) + 2) % 2;
        Integer a3 = ((b6 % 2) + 2) % 2;
        Integer num2 = b2 - a1;
        if (!mpz_divisible_ui_p(num2.get_mpz_t(), 4)) continue;
        Integer a2 = num2 / 4;
        Integer numa4 = b4 - a1 * a3;
        if (!mpz_divisible_ui_p(numa4.get_mpz_t(), 2)) continue;
        Integer a4 = numa4 / 2;
        Integer numa6 = b6 - a3;
        if (!mpz_divisible_ui_p(numa6.get_mpz_t(), 4)) continue;
        Integer a6 = numa6 / 4;
        WeierstrassModel out{Rational(a1), Rational(a2), Rational(a3),
                             Rational(a4), Rational(a6)};
        Invariants check = invariants(out);
        if (check.c4 == Rational(c4m) && check.c6 == Rational(c6m)) return out;
    }
    throw Error("global_minimal_model: reconstruction failed for " + curve_text(m));
}

WeierstrassModel quadratic_twist_raw(const WeierstrassModel& m, const Integer& d) {
    if (d == 0) throw ZeroInput("quadratic_twist: d must be nonzero");
    Invariants iv = invariants(m);
    Rational d2 = Rational(d) * Rational(d);
    Rational A = -27 * d2 * iv.c4;
    Rational B = -54 * d2 * Rational(d) * iv.c6;
    return WeierstrassModel{0, 0, 0, A, B};
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const Integer& d,
                                 const std::vector<Integer>& hints) {
    std::vector<Integer> h = hints;
    // The twisted discriminant is 6^12 d^6 disc(m) up to the integral-clearing
    // scale, so seed the factorization with the obvious primes.
    h.push_back(2);
    h.push_back(3);
    if (d != 1 && d != -1) {
        Factorization fd = factorize(d);
        for (const auto& pp : fd.factors) h.push_back(pp.p);
    }
    return global_minimal_model(integral_model(quadratic_twist_raw(m, d)), h);
}

WeierstrassModel cubic_to_weierstrass(const Rational& a, const Rational& b,
                                      const Rational& c, const Rational& e) {
    if (a == 0) throw ZeroInput("cubic_to_weierstrass: leading coefficient is zero");
    return WeierstrassModel{0, b, 0, a * c, a * a * e};
}

WeierstrassModel congruent_curve(const Integer& n) {
    if (n < 1) throw ZeroInput("congruent_curve: n must be >= 1");
    Rational n2(n * n);
    return WeierstrassModel{0, 0, 0, -n2, 0};
}

}  // namespace rootno
