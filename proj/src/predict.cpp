// Scenario engines: each operation packages a root number computation into
// the arithmetic statement it supports.  Signs are always recomputed through
// the curve machinery; the closed-form shortcuts (mod-8 table, flip by d0,
// the D10 four-case table) are cross-checked against it in the tests.

#include "rootno/predict.hpp"

#include <sstream>

#include "rootno/errors.hpp"

namespace rootno {

namespace {

void require_classified(const FakeCMClassification& cls) {
    if (!cls.classified)
        throw AttestationMissing(
            "fake CM: prediction needs a positive classification "
            "(integral j and both attestations)");
}

}  // namespace

// ---- congruent numbers ------------------------------------------------------

Sign congruent_root(const Integer& n, bool verify) {
    if (n < 1) throw ZeroInput("congruent number: n must be positive");
    if (!is_pth_power_free(n, 2))
        throw NotSquarefree("congruent number: n must be squarefree");
    // Squarefree n is never 0 or 4 mod 8, which leaves exactly the six
    // residues of the theorem.
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
    const Sign table = Sign::from_parity(r >= 5);
    if (verify) {
        const Sign engine = global_root_number(congruent_curve(n));
        if (!(engine == table))
            throw Error("congruent table disagrees with the engine at n = " +
                        n.get_str());
    }
    return table;
}

CongruentVerdict predicted_congruent(const Integer& n,
                                     const std::vector<Integer>& hints) {
    if (n < 1) throw ZeroInput("congruent number: n must be positive");
    CongruentVerdict v;
    v.n = squarefree_part(n, hints);
    v.root_number = congruent_root(v.n);
    v.predicted_congruent = v.root_number == Sign::minus();
    if (!v.predicted_congruent) v.caveat = kNoDisproofCaveat;
    return v;
}

std::string CongruentVerdict::json() const {
    std::ostringstream os;
    os << "{\"n\":" << n.get_str() << ",\"root_number\":" << root_number.to_int()
       << ",\"predicted_congruent\":" << (predicted_congruent ? "true" : "false")
       << ",\"conditional\":true";
    if (!caveat.empty()) os << ",\"caveat\":\"" << caveat << "\"";
    os << "}";
    return os.str();
}

Sign cassels_fiber_root(const Integer& l, const Integer& m,
                        const std::vector<Integer>& hints) {
    if (l == 0 && m == 0) throw ZeroInput("cassels fibre: (l, m) = (0, 0)");
    Integer g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), m.get_mpz_t());
    if (g != 1)
        throw CoprimalityViolated("cassels fibre: l and m must be coprime");
    Integer l4, m4;
    mpz_pow_ui(l4.get_mpz_t(), l.get_mpz_t(), 4);
    mpz_pow_ui(m4.get_mpz_t(), m.get_mpz_t(), 4);
    return congruent_root(squarefree_part(7 * (l4 + m4), hints));
}

Sign washington_fiber_root(const Integer& t, const std::vector<Integer>& hints) {
    const Integer a4 = -(t + 3);
    const WeierstrassModel fibre{Rational(0), Rational(t), Rational(0),
                                 Rational(a4), Rational(1)};
    return global_root_number(fibre, hints);
}

// ---- representability by cubics ---------------------------------------------

std::string Cubic::str() const {
    const struct {
        const Rational* coef;
        const char* var;
    } terms[] = {{&a, "x^3"}, {&b, "x^2"}, {&c, "x"}, {&e, ""}};
    std::string out;
    for (const auto& t : terms) {
        if (*t.coef == 0) continue;
        const bool neg = *t.coef < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? Rational(-*t.coef) : *t.coef;
        if (!(mag == 1 && t.var[0] != '\0')) {
            const bool frac = mag.get_den() != 1;
            if (frac) out += "(";
            out += mag.get_str();
            if (frac) out += ")";
        }
        out += t.var;
    }
    return out.empty() ? "0" : out;
}

PartnerReport representability_partner(const Cubic& f,
                                       const std::optional<Integer>& d0,
                                       const std::vector<Integer>& hints) {
    if (f.a == 0)
        throw ZeroInput("representability: leading coefficient is zero");
    const WeierstrassModel model = cubic_to_weierstrass(f.a, f.b, f.c, f.e);
    invariants(model);  // rejects inseparable cubics

    PartnerReport rep;
    if (d0.has_value()) {
        rep.d0 = *d0;
        rep.d0_supplied = true;
        if (rep.d0 == 0) throw ZeroInput("representability: d0 must be nonzero");
        if (rep.d0 > 0) throw WrongSign("representability: d0 must be negative");
        if (!is_pth_power_free(rep.d0, 2))
            throw NotSquarefree("representability: d0 must be squarefree");
    } else {
        rep.d0 = find_d0(model, hints);
    }
    rep.partner = Cubic{Rational(rep.d0) * f.a, Rational(rep.d0) * f.b,
                        Rational(rep.d0) * f.c, Rational(rep.d0) * f.e};
    rep.base_root = global_root_number(model, hints);
    rep.represents_one = rep.base_root == Sign::minus();

    static const long sample[] = {1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 10, -10};
    rep.flip_verified = true;
    for (const long s : sample) {
        const Integer d(s);
        rep.sample_d.push_back(d);
        const Sign wd = quadratic_twist_root(model, d, hints);
        const Sign wdd0 =
            quadratic_twist_root(model, squarefree_part(d * rep.d0), hints);
        if (!(wd * wdd0 == Sign::minus())) rep.flip_verified = false;
    }
    return rep;
}

// ---- structurally even rank ---------------------------------------------------

bool even_rank_field(const FieldDescriptor& field) {
    check_field(field);
    if (std::holds_alternative<Zeta8>(field)) return false;  // 2 sits alone
    const auto* bi = std::get_if<Biquadratic>(&field);
    if (bi == nullptr)
        throw UnsupportedSplitting(
            "even-rank predicate: only multiquadratic descriptors are structural");
    if (infinite_place_count(field) % 2 != 0) return false;
    // Unramified primes have cyclic decomposition inside C2 x C2 and never
    // sit alone, so only the primes of the three quadratic discriminants
    // need to be examined.
    for (const PrimePower& pp : factorize(2 * bi->d1 * bi->d2).factors)
        if (places_above(pp.p, field).place_count() % 2 != 0) return false;
    return true;
}

bool even_rank_field(long long elem_abelian_rank) {
    if (elem_abelian_rank < 1)
        throw ZeroInput("even-rank predicate: the 2-rank must be >= 1");
    if (elem_abelian_rank == 1) return false;  // inert primes sit alone
    if (elem_abelian_rank <= 3)
        throw UnsupportedSplitting(
            "even-rank predicate: C2^2 and C2^3 depend on the radicands");
    return true;
}

// ---- growth over Q(zeta_8) ----------------------------------------------------

Zeta8Report zeta8_growth(const WeierstrassModel& m,
                         const std::vector<Integer>& hints) {
    Zeta8Report rep;
    rep.at_two = reduction_class(m, 2);
    bool family = m.is_integral() && m.a1 == 1 && m.a2 == 0 && m.a3 == 0;
    if (family) {
        const Rational diff = m.a4 - m.a6;
        const Integer num = diff.get_num();  // den is 1 on an integral model
        family = mpz_even_p(num.get_mpz_t()) != 0;
    }
    rep.syntactic_family = family;
    if (rep.at_two == ReductionClass::SPLIT_MULT) {
        rep.applicability = Zeta8Applicability::APPLIES;
        rep.growth = base_change_root_number(m, Zeta8{}, hints);
    }
    return rep;
}

// ---- fake complex multiplication ----------------------------------------------

FakeCMClassification fakecm_classify(const WeierstrassModel& m,
                                     bool no_real_places,
                                     bool abelian_good_reduction,
                                     const std::vector<Integer>& hints) {
    FakeCMClassification cls;
    cls.no_real_places = no_real_places;
    cls.abelian_good_reduction = abelian_good_reduction;
    cls.potentially_good = true;
    const Rational j = invariants(m).j();
    Integer witness;
    for (const PrimePower& pp : bad_primes(m, hints).factors)
        if (valuation(j, pp.p) < 0) {
            cls.potentially_good = false;
            witness = pp.p;
            break;
        }
    if (!cls.potentially_good && abelian_good_reduction)
        throw NotPotentiallyGood(
            "fake CM: j is non-integral at " + witness.get_str() +
            ", so no extension gives everywhere good reduction");
    cls.classified =
        cls.potentially_good && no_real_places && abelian_good_reduction;
    return cls;
}

Sign fakecm_twist_root(const FakeCMClassification& cls, Sign w_k) {
    require_classified(cls);
    return w_k;
}

Sign fakecm_extension_root(const FakeCMClassification& cls, Sign w_k,
                           const Integer& degree) {
    require_classified(cls);
    if (degree < 1) throw ZeroInput("fake CM: extension degree must be >= 1");
    return w_k.pow(degree);
}

// ---- minimalist rank predictions ------------------------------------------------

std::string MinimalistPrediction::json() const {
    std::ostringstream os;
    os << "{\"irreps\":[";
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (i) os << ",";
        os << "\"" << irreps[i] << "\"";
    }
    os << "],\"rank\":" << rank << ",\"conditional\":true}";
    return os.str();
}

MinimalistPrediction minimalist_WG(const GroupTable& table, Sign w_q) {
    long long small_linear = 0;
    if (table.full) {
        for (const Irrep& ir : table.irreps)
            if (ir.dim == 1 && ir.det != DetOrder::HIGHER) ++small_linear;
    } else {
        // Count-only symmetric tables: both linear characters have order <= 2.
        small_linear = table.linear_count;
    }
    if (small_linear != 1)
        throw QuadraticSubfieldPresent(
            table.name +
            ": a nontrivial quadratic character cuts out a quadratic subfield");
    if (!table.full) throw UnsupportedGroup(table.name + ": irrep list unavailable");

    MinimalistPrediction pred;
    if (w_q == Sign::minus())
        for (const Irrep& ir : table.irreps)
            if (ir.self_dual && ir.dim % 2 == 1) {
                pred.irreps.push_back(ir.name);
                pred.rank += ir.dim;
            }
    return pred;
}

MinimalistPrediction minimalist_D10(const Integer& n_e, Sign w_q) {
    if (n_e < 1) throw ZeroInput("D10 prediction: the conductor must be positive");
    Integer g;
    const Integer thirty(30);
    mpz_gcd(g.get_mpz_t(), n_e.get_mpz_t(), thirty.get_mpz_t());
    if (g != 1)
        throw BadResidue(
            "D10 prediction: the conductor must be coprime to 30; the units "
            "mod 15 are the only admissible residues");
    MinimalistPrediction pred;
    if (kronecker(Integer(-15), n_e) == 1) {
        // N = 1, 2, 4, 8 mod 15: both two-dimensional irreps come in, and the
        // sign of w(E/Q) decides which character joins them.
        pred.irreps = w_q == Sign::plus()
                          ? std::vector<std::string>{"eps", "rho1", "rho2"}
                          : std::vector<std::string>{"1", "rho1", "rho2"};
        pred.rank = 5;
    } else if (w_q == Sign::minus()) {
        pred.irreps = {"1", "eps"};
        pred.rank = 2;
    }
    return pred;
}

GalmodKey galmod_key(const Integer& n_e, const Integer& disc_f, Sign w_q) {
    if (n_e < 1) throw ZeroInput("galois-module key: N_E must be positive");
    if (disc_f == 0) throw ZeroInput("galois-module key: disc F must be nonzero");
    Integer g;
    const Integer two_disc = 2 * disc_f;
    mpz_gcd(g.get_mpz_t(), n_e.get_mpz_t(), two_disc.get_mpz_t());
    if (g != 1)
        throw CoprimalityViolated(
            "galois-module key: N_E must be coprime to 2 disc F");
    GalmodKey key;
    key.residue = n_e % (8 * abs(disc_f));
    key.w_q = w_q;
    return key;
}

}  // namespace rootno
