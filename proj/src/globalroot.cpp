#include "rootno/globalroot.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "rootno/errors.hpp"

namespace rootno {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Degrees up to this bound get the exact distinct-degree decomposition of
// x^(p^n) - m; beyond it only the place-count parity is reported.
constexpr long long kExactDegreeCap = 343;

Integer ipow(const Integer& b, long long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// d squarefree: d itself when d = 1 (mod 4), else 4d.
Integer fundamental_discriminant(const Integer& d) {
    if (mpz_fdiv_ui(d.get_mpz_t(), 4) == 1) return d;
    return 4 * d;
}

void check_quadratic_d(const Integer& d, const char* who) {
    if (d == 0 || d == 1)
        throw ZeroInput(std::string(who) + ": d must differ from 0 and 1");
    if (!is_pth_power_free(d, 2))
        throw NotSquarefree(std::string(who) + ": d must be squarefree");
}

long long pure_radical_degree(const PureRadical& f) {
    if (f.n < 1) throw ZeroInput("pure radical field: level must be >= 1");
    const Integer deg = ipow(f.p, f.n);
    if (deg > 1000000)
        throw Error("pure radical field: degree p^n exceeds 10^6");
    return mpz_get_si(deg.get_mpz_t());
}

// Decomposition of q in Q(sqrt(d1), sqrt(d2)) from the Kronecker characters
// of the three quadratic subfields.  Nonzero characters multiply to +1, and
// zeros come in twos and threes, so the possible patterns are: all +1 (split),
// one +1 and two -1 (the Frobenius fixes one subfield), two zeros (inertia
// fixes the unramified subfield, whose character says whether the residue
// extension is trivial), and three zeros (q = 2 wildly and totally ramified).
std::vector<PlaceShape> biquadratic_places(const Integer& q, const Integer& d1,
                                           const Integer& d2) {
    const Integer d3 = squarefree_part(d1 * d2);
    const int c1 = kronecker(fundamental_discriminant(d1), q);
    const int c2 = kronecker(fundamental_discriminant(d2), q);
    const int c3 = kronecker(fundamental_discriminant(d3), q);
    const int zeros = (c1 == 0) + (c2 == 0) + (c3 == 0);
    if (zeros == 0) {
        if (c1 + c2 + c3 == 3) return {{1, 1, 4}};
        return {{1, 2, 2}};
    }
    if (zeros == 3) return {{4, 1, 1}};
    if (zeros != 2)
        throw Error("places_above: impossible character pattern in a biquadratic field");
    const int unram = c1 != 0 ? c1 : c2 != 0 ? c2 : c3;
    if (unram > 0) return {{2, 1, 2}};
    return {{2, 2, 1}};
}

// Distinct-degree data of x^N - m over F_q for q coprime to N m.  The degree
// of gcd(x^(q^d) - x, x^N - m) is the number of roots of the binomial in
// F_{q^d}, which the cyclic group F_{q^d}^* hands over without any polynomial
// arithmetic: gcd(N, q^d - 1) roots when m lands in the right power subgroup,
// none otherwise.
std::vector<PlaceShape> binomial_distinct_degrees(long long N, const Integer& m,
                                                  const Integer& q) {
    std::vector<long long> per_degree(static_cast<std::size_t>(N) + 1, 0);
    std::vector<PlaceShape> out;
    Integer m_q;
    mpz_fdiv_r(m_q.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
    const Integer big_n(static_cast<long>(N));
    Integer q_d = 1;
    long long assigned = 0;
    for (long long d = 1; d <= N && assigned < N; ++d) {
        q_d *= q;
        const Integer order = q_d - 1;
        Integer g;
        mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), big_n.get_mpz_t());
        // m is an N-th power in F_{q^d} iff m^((q^d-1)/g) = 1; the base lives
        // in F_q, so the exponent only matters mod q - 1.
        Integer e = order / g;
        if (q > 2) {
            const Integer red = q - 1;
            mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), red.get_mpz_t());
        }
        Integer r;
        mpz_powm(r.get_mpz_t(), m_q.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        const long long roots = r == 1 ? mpz_get_si(g.get_mpz_t()) : 0;
        long long lower = 0;
        for (long long dd = 1; dd < d; ++dd)
            if (d % dd == 0) lower += dd * per_degree[static_cast<std::size_t>(dd)];
        const long long count = (roots - lower) / d;
        if ((roots - lower) % d != 0 || count < 0)
            throw Error("places_above: factor-degree bookkeeping failed");
        if (count > 0) {
            per_degree[static_cast<std::size_t>(d)] = count;
            out.push_back({1, d, count});
            assigned += d * count;
        }
    }
    if (assigned != N)
        throw Error("places_above: factor degrees do not sum to the field degree");
    return out;
}

// Parity of the number of irreducible factors of x^N - m over F_q for odd N
// and q coprime to N m, from disc(x^N - m) = (-1)^(N(N-1)/2) N^N m^(N-1).
// Odd q: Pellet-Stickelberger gives (disc/q) = (-1)^(N - r).  q = 2: Swan's
// criterion, r = N (mod 2) exactly when disc = 1 (mod 8).
bool binomial_factor_count_odd(long long N, const Integer& m, const Integer& q) {
    const bool sign_odd = ((N - 1) / 2) % 2 != 0;
    const Integer big_n(static_cast<long>(N));
    if (q == 2) {
        const Integer eight = 8;
        Integer a, b;
        mpz_powm(a.get_mpz_t(), big_n.get_mpz_t(), big_n.get_mpz_t(), eight.get_mpz_t());
        const Integer nm1(static_cast<long>(N - 1));
        mpz_powm(b.get_mpz_t(), m.get_mpz_t(), nm1.get_mpz_t(), eight.get_mpz_t());
        Integer d8 = a * b;
        mpz_fdiv_r(d8.get_mpz_t(), d8.get_mpz_t(), eight.get_mpz_t());
        if (sign_odd) d8 = (8 - d8) % 8;
        return d8 == 1;
    }
    int s = legendre(big_n, q);  // (N^N/q) = (N/q) since N is odd
    if (sign_odd) s *= legendre(Integer(-1), q);
    return s == 1;
}

void pure_radical_places(const Integer& q, const PureRadical& f, SplittingReport& rep) {
    const long long deg = pure_radical_degree(f);
    if (mpz_divisible_p(f.m.get_mpz_t(), q.get_mpz_t())) {
        // v_q(m) < p by power-freeness, so v(root) = v_q(m)/p^n forces full
        // ramification in one place.
        rep.places = {{deg, 1, 1}};
        return;
    }
    if (q == f.p) {
        // Only the branch k = 1 versus k >= 2 of k = v_p(m^(p-1) - 1) matters,
        // so the power is taken mod p^2.
        const Integer psq = f.p * f.p;
        const Integer pm1 = f.p - 1;
        Integer r;
        mpz_powm(r.get_mpz_t(), f.m.get_mpz_t(), pm1.get_mpz_t(), psq.get_mpz_t());
        if (r != 1) {
            // Recentering x -> x + m makes the binomial's Newton polygon a
            // single segment of slope -1/p^n: totally ramified at every level.
            rep.places = {{deg, 1, 1}};
            return;
        }
        if (f.n == 1) {
            // Valuation >= 2 says m is a p-th power in Q_p, so the binomial
            // splits off one root; the cofactor's roots all generate
            // Q_p(zeta_p), totally ramified of degree p - 1.
            rep.places = {{1, 1, 1}, {mpz_get_si(f.p.get_mpz_t()) - 1, 1, 1}};
            return;
        }
        throw UnsupportedSplitting(
            "places_above: splitting above p is settled only at level 1 when "
            "m^(p-1) = 1 mod p^2");
    }
    if (deg <= kExactDegreeCap) {
        rep.places = binomial_distinct_degrees(deg, f.m, q);
        return;
    }
    rep.exact = false;
    rep.odd_place_count = binomial_factor_count_odd(deg, f.m, q);
}

Integer minimal_discriminant(const WeierstrassModel& gm) {
    return Integer(invariants(gm).disc.get_num());
}

}  // namespace

// ---- field descriptors -----------------------------------------------------

long long field_degree(const FieldDescriptor& field) {
    return std::visit(
        overloaded{
            [](const Quadratic&) -> long long { return 2; },
            [](const Biquadratic&) -> long long { return 4; },
            [](const Zeta8&) -> long long { return 4; },
            [](const PureRadical& f) -> long long { return pure_radical_degree(f); },
            [](const AssertedEverywhereGood& f) -> long long {
                return f.real_places + 2 * f.complex_places;
            }},
        field);
}

long long infinite_place_count(const FieldDescriptor& field) {
    return std::visit(
        overloaded{
            [](const Quadratic& f) -> long long { return f.d > 0 ? 2 : 1; },
            [](const Biquadratic& f) -> long long {
                return f.d1 > 0 && f.d2 > 0 ? 4 : 2;
            },
            [](const Zeta8&) -> long long { return 2; },
            [](const PureRadical& f) -> long long {
                // x^(p^n) = m has one real solution; the rest pair up.
                return (pure_radical_degree(f) + 1) / 2;
            },
            [](const AssertedEverywhereGood& f) -> long long {
                return f.real_places + f.complex_places;
            }},
        field);
}

void check_field(const FieldDescriptor& field) {
    std::visit(
        overloaded{
            [](const Quadratic& f) { check_quadratic_d(f.d, "quadratic field"); },
            [](const Biquadratic& f) {
                check_quadratic_d(f.d1, "biquadratic field");
                check_quadratic_d(f.d2, "biquadratic field");
                if (f.d1 == f.d2)
                    throw ZeroInput("biquadratic field: d1 and d2 must be distinct");
            },
            [](const Zeta8&) {},
            [](const PureRadical& f) {
                require_odd_prime(f.p, "pure radical field");
                if (f.m <= 1)
                    throw ZeroInput("pure radical field: m must exceed 1");
                if (!is_pth_power_free(f.m, f.p))
                    throw NotPowerFree("pure radical field: m must be p-th-power free");
                pure_radical_degree(f);
            },
            [](const AssertedEverywhereGood& f) {
                if (f.real_places < 0 || f.complex_places < 0)
                    throw ZeroInput("asserted field: place counts must be >= 0");
            }},
        field);
}

// ---- splitting ----------------------------------------------------------------

QuadSplitting splitting_in_quadratic(const Integer& p, const Integer& d) {
    require_prime(p, "splitting_in_quadratic");
    check_quadratic_d(d, "splitting_in_quadratic");
    const int k = kronecker(fundamental_discriminant(d), p);
    if (k == 0) return QuadSplitting::RAMIFIED;
    return k > 0 ? QuadSplitting::SPLIT : QuadSplitting::INERT;
}

long long SplittingReport::place_count() const {
    if (!exact)
        throw UnsupportedSplitting("place count above " + p.get_str() +
                                   " is known only up to parity");
    long long n = 0;
    for (const PlaceShape& s : places) n += s.count;
    return n;
}

bool SplittingReport::place_count_odd() const {
    if (!exact) return odd_place_count;
    return place_count() % 2 != 0;
}

SplittingReport places_above(const Integer& q, const FieldDescriptor& field) {
    require_prime(q, "places_above");
    check_field(field);
    SplittingReport rep;
    rep.p = q;
    std::visit(
        overloaded{
            [&](const Quadratic& f) {
                switch (splitting_in_quadratic(q, f.d)) {
                    case QuadSplitting::SPLIT: rep.places = {{1, 1, 2}}; break;
                    case QuadSplitting::INERT: rep.places = {{1, 2, 1}}; break;
                    case QuadSplitting::RAMIFIED: rep.places = {{2, 1, 1}}; break;
                }
            },
            [&](const Biquadratic& f) {
                rep.places = biquadratic_places(q, f.d1, f.d2);
            },
            [&](const Zeta8&) {
                if (q == 2)
                    rep.places = {{4, 1, 1}};
                else
                    rep.places = biquadratic_places(q, Integer(-1), Integer(2));
            },
            [&](const PureRadical& f) { pure_radical_places(q, f, rep); },
            [&](const AssertedEverywhereGood&) {
                throw UnsupportedSplitting(
                    "places_above: asserted fields carry no finite place data");
            }},
        field);
    if (rep.exact) {
        long long total = 0;
        for (const PlaceShape& s : rep.places) total += s.e * s.f * s.count;
        if (total != field_degree(field))
            throw Error("places_above: place shapes do not fill the degree");
    }
    return rep;
}

// ---- global root numbers --------------------------------------------------------

Factorization bad_primes(const WeierstrassModel& m, const std::vector<Integer>& hints) {
    const WeierstrassModel gm = global_minimal_model(m, hints);
    return factorize(minimal_discriminant(gm), hints);
}

Sign global_root_number(const WeierstrassModel& m, const std::vector<Integer>& hints) {
    const WeierstrassModel gm = global_minimal_model(m, hints);
    Sign w = root_number_infinite();
    for (const PrimePower& pp : factorize(minimal_discriminant(gm), hints).factors)
        w *= local_root_number(gm, pp.p);
    return w;
}

Sign semistable_global(long long split_mult_places, long long infinite_places) {
    if (split_mult_places < 0 || infinite_places < 0)
        throw ZeroInput("semistable_global: place counts must be >= 0");
    return Sign::from_parity((split_mult_places + infinite_places) % 2 != 0);
}

Sign base_change_root_number(const WeierstrassModel& m, const FieldDescriptor& field,
                             const std::vector<Integer>& hints) {
    check_field(field);
    Sign w = Sign::from_parity(infinite_place_count(field) % 2 != 0);
    if (std::holds_alternative<AssertedEverywhereGood>(field)) return w;
    const bool galois = !std::holds_alternative<PureRadical>(field);
    const WeierstrassModel gm = global_minimal_model(m, hints);
    for (const PrimePower& pp : factorize(minimal_discriminant(gm), hints).factors) {
        const SplittingReport rep = places_above(pp.p, field);
        // Conjugate places share one root number, so over a Galois field an
        // even count multiplies to +1 whatever the local case is.
        if (galois && rep.place_count() % 2 == 0) continue;
        if (!rep.exact) {
            // Parity suffices exactly when every place contributes -1.
            if (reduction_class(gm, pp.p) == ReductionClass::SPLIT_MULT) {
                w *= Sign::from_parity(rep.odd_place_count);
                continue;
            }
            throw UnsupportedSplitting(
                "base_change_root_number: parity-only splitting above " +
                pp.p.get_str() + " cannot settle this reduction type");
        }
        for (const PlaceShape& s : rep.places)
            w *= local_root_number_ext(gm, ExtPlace{pp.p, s.e, s.f})
                     .pow(Integer(static_cast<long>(s.count)));
    }
    return w;
}

Sign quadratic_twist_root(const WeierstrassModel& m, const Integer& d,
                          const std::vector<Integer>& hints) {
    if (d == 0) throw ZeroInput("quadratic_twist_root: d must be nonzero");
    if (!is_pth_power_free(d, 2, hints))
        throw NotSquarefree("quadratic_twist_root: d must be squarefree");
    std::vector<Integer> h = hints;
    for (const PrimePower& pp : factorize(d, hints).factors) h.push_back(pp.p);
    for (const PrimePower& pp : bad_primes(m, hints).factors) h.push_back(pp.p);
    const WeierstrassModel gm = quadratic_twist(m, d, h);
    // Twisting by d can cancel additive reduction entirely (the 5-twist of
    // y^2 = x^3 - 25x is y^2 = x^3 - x), so primes of d or of the original
    // discriminant need not survive into the twisted one.
    const Integer dmin = minimal_discriminant(gm);
    std::vector<Integer> live;
    for (const Integer& x : h)
        if (x != 0 && dmin % x == 0) live.push_back(x);
    return global_root_number(gm, live);
}

Integer twist_period(const WeierstrassModel& m, const std::vector<Integer>& hints) {
    Integer period = 1;
    for (const PrimePower& pp : bad_primes(m, hints).factors) {
        period *= pp.p * pp.p;
        if (pp.p == 2) period *= 4;
    }
    return period;
}

std::string TwistScanReport::json() const {
    std::ostringstream os;
    os << "{\"period\":" << period.get_str() << ",\"pos_plus\":" << pos_plus
       << ",\"pos_minus\":" << pos_minus << ",\"neg_plus\":" << neg_plus
       << ",\"neg_minus\":" << neg_minus << ",\"violations\":[";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << ",";
        os << "{\"d1\":" << violations[i].d1.get_str()
           << ",\"d2\":" << violations[i].d2.get_str() << "}";
    }
    os << "]}";
    return os.str();
}

TwistScanReport twist_scan(const WeierstrassModel& m, long long bound,
                           const std::vector<Integer>& hints) {
    TwistScanReport rep;
    rep.period = twist_period(m, hints);
    if (rep.period > static_cast<long>(bound))
        throw Error("twist_scan: bound must cover one full period");
    const long long period = mpz_get_si(rep.period.get_mpz_t());
    std::map<std::pair<long long, int>, std::pair<Integer, Sign>> first_seen;
    for (long long d = -bound; d <= bound; ++d) {
        if (d == 0) continue;
        const Integer dz(static_cast<long>(d));
        if (!is_pth_power_free(dz, 2)) continue;
        const Sign w = quadratic_twist_root(m, dz, hints);
        const bool plus = w == Sign::plus();
        if (d > 0)
            ++(plus ? rep.pos_plus : rep.pos_minus);
        else
            ++(plus ? rep.neg_plus : rep.neg_minus);
        const auto key = std::make_pair(((d % period) + period) % period, d > 0 ? 1 : -1);
        const auto it = first_seen.find(key);
        if (it == first_seen.end())
            first_seen.emplace(key, std::make_pair(dz, w));
        else if (!(it->second.second == w))
            rep.violations.push_back({it->second.first, dz});
    }
    return rep;
}

Integer find_d0(const WeierstrassModel& m, const std::vector<Integer>& hints) {
    const Factorization bad = bad_primes(m, hints);
    for (long long k = 1; k <= 10000000; ++k) {
        const Integer d0(static_cast<long>(-k));
        if (!is_pth_power_free(d0, 2)) continue;
        bool all_split = true;
        for (const PrimePower& pp : bad.factors)
            if (splitting_in_quadratic(pp.p, d0) != QuadSplitting::SPLIT) {
                all_split = false;
                break;
            }
        if (all_split) return d0;
    }
    throw Error("find_d0: no admissible twist found");
}

Sign tower_root_number(const WeierstrassModel& m, const Integer& p, long long n,
                       const Integer& radicand, const std::vector<Integer>& hints) {
    require_odd_prime(p, "tower_root_number");
    if (n < 0) throw ZeroInput("tower_root_number: level must be >= 0");
    if (radicand <= 1) throw ZeroInput("tower_root_number: radicand must exceed 1");
    if (!is_pth_power_free(radicand, p, hints))
        throw NotPowerFree("tower_root_number: radicand must be p-th-power free");
    const WeierstrassModel gm = global_minimal_model(m, hints);
    Sign w = root_number_infinite();
    long long t = 0;
    for (const PrimePower& pp : factorize(minimal_discriminant(gm), hints).factors) {
        if (pp.p == p)
            throw BadReductionAtP("tower_root_number: bad reduction at p");
        const ReductionClass cls = reduction_class(gm, pp.p);
        if (cls == ReductionClass::ADDITIVE_POT_GOOD ||
            cls == ReductionClass::ADDITIVE_POT_MULT)
            throw NotSemistable("tower_root_number: curve is not semistable");
        w *= local_root_number(gm, pp.p);
        if (!mpz_divisible_p(radicand.get_mpz_t(), pp.p.get_mpz_t()) &&
            legendre(pp.p, p) == -1)
            ++t;
    }
    const Integer half = (p - 1) / 2;
    const bool exponent_odd =
        n % 2 != 0 && (mpz_odd_p(half.get_mpz_t()) + t) % 2 != 0;
    return exponent_odd ? w * Sign::minus() : w;
}

}  // namespace rootno
