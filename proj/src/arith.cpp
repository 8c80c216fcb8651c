#include "rootno/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace rootno {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroInput("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// ---- Sign -----------------------------------------------------------------

Sign Sign::from_int(long v) {
    if (v != 1 && v != -1) throw Error("Sign::from_int: value is not a unit");
    return Sign(static_cast<int>(v));
}

Sign Sign::pow(const Integer& e) const {
    if (v_ > 0) return plus();
    return from_parity(mpz_odd_p(e.get_mpz_t()) != 0);
}

// ---- Val ------------------------------------------------------------------

long long Val::value() const {
    if (inf_) throw Error("Val::value: infinite valuation");
    return v_;
}

bool Val::operator<(const Val& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
}

Val Val::operator+(long long d) const {
    if (inf_) return *this;
    return Val(v_ + d);
}

Val Val::floordiv(long long q) const {
    if (q <= 0) throw Error("Val::floordiv: divisor must be positive");
    if (inf_) return *this;
    long long quot = v_ / q;
    if (v_ % q != 0 && (v_ < 0)) --quot;
    return Val(quot);
}

long long Val::mod(long long q) const {
    if (q <= 0) throw Error("Val::mod: modulus must be positive");
    long long r = value() % q;
    return r < 0 ? r + q : r;
}

std::string Val::str() const {
    return inf_ ? "inf" : std::to_string(v_);
}

Val val_min(std::initializer_list<Val> vs) {
    Val best = Val::infinity();
    for (const Val& v : vs)
        if (v < best) best = v;
    return best;
}

// ---- primality -------------------------------------------------------------

namespace {

// Odd-composite sieve over [0, SIEVE_LIMIT); shared by trial division and the
// small-prime fast path of require_prime.
constexpr unsigned long SIEVE_LIMIT = 1000000;

const std::vector<unsigned long>& sieve_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> comp(SIEVE_LIMIT, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i < SIEVE_LIMIT; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j < SIEVE_LIMIT; j += i) comp[j] = true;
        }
        return ps;
    }();
    return primes;
}

bool small_prime_lookup(unsigned long n) {
    const auto& ps = sieve_primes();
    return std::binary_search(ps.begin(), ps.end(), n);
}

// Strong probable-prime test to base a; n odd, n > 3, n = d * 2^s + 1.
bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s,
                        const Integer& a) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// First 13 primes as bases: deterministic for n < 3.317e24.
const std::array<long, 13> MR_BASES = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Integer& mr_deterministic_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
// Assumes n odd, n > 3, not a perfect square, no small factors.
bool strong_lucas(const Integer& n) {
    // D = 5, -7, 9, -11, ... until (D/n) = -1.
    Integer D = 5;
    while (true) {
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) return false;
        if (D > 0)
            D = -(D + 2);
        else
            D = -(D - 2);
    }
    // P = 1, Q = (1 - D) / 4; n + 1 = d * 2^s.
    Integer Q = (1 - D) / 4;
    Integer d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // U_1 = 1, V_1 = 1 (= P), Q^1 = Q; double-and-add on the bits of d.
    Integer U = 1, V = 1, Qk = Q;
    Integer inv2 = (n + 1) / 2;  // 2^{-1} mod n for odd n
    unsigned long bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (long i = static_cast<long>(bits) - 2; i >= 0; --i) {
        // (U, V)_{2k} = (U V, V^2 - 2 Q^k)
        U = (U * V) % n;
        V = (V * V - 2 * Qk) % n;
        Qk = (Qk * Qk) % n;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<unsigned long>(i))) {
            // (U, V)_{2k+1} = ((P U + V)/2, (D U + P V)/2), P = 1
            Integer newU = ((U + V) * inv2) % n;
            Integer newV = ((D * U + V) * inv2) % n;
            U = newU;
            V = newV;
            Qk = (Qk * Q) % n;
        }
    }
    auto canon = [&](Integer& x) { x %= n; if (x < 0) x += n; };
    canon(U); canon(V);
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = (V * V - 2 * Qk) % n;
        canon(V);
        if (V == 0) return true;
        Qk = (Qk * Qk) % n;
    }
    return false;
}

}  // namespace

Primality classify_prime(const Integer& n) {
    if (n < 2) return Primality::COMPOSITE;
    if (n < static_cast<long>(SIEVE_LIMIT))
        return small_prime_lookup(n.get_ui()) ? Primality::PRIME : Primality::COMPOSITE;
    if (mpz_even_p(n.get_mpz_t())) return Primality::COMPOSITE;
    for (long b : {3L, 5L, 7L, 11L, 13L})
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return Primality::COMPOSITE;

    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (n < mr_deterministic_bound()) {
        for (long b : MR_BASES) {
            if (n == b) return Primality::PRIME;
            if (!miller_rabin_round(n, d, s, Integer(b))) return Primality::COMPOSITE;
        }
        return Primality::PRIME;
    }

    // Baillie-PSW, then a few extra strong-probable-prime rounds.
    if (!miller_rabin_round(n, d, s, Integer(2))) return Primality::COMPOSITE;
    if (mpz_perfect_square_p(n.get_mpz_t())) return Primality::COMPOSITE;
    if (!strong_lucas(n)) return Primality::COMPOSITE;
    for (long b : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L})
        if (!miller_rabin_round(n, d, s, Integer(b))) return Primality::COMPOSITE;
    return Primality::PROBABLE_PRIME;
}

bool is_prime(const Integer& n) {
    return classify_prime(n) != Primality::COMPOSITE;
}

namespace {

// Primality checks sit on hot paths with a handful of distinct moduli, so the
// most recent verdicts are memoized.
bool memoized_prime(const Integer& p) {
    if (p < static_cast<long>(SIEVE_LIMIT))
        return p >= 2 && small_prime_lookup(p.get_ui());
    thread_local std::vector<Integer> known;
    for (const Integer& q : known)
        if (q == p) return true;
    if (!is_prime(p)) return false;
    if (known.size() >= 64) known.erase(known.begin());
    known.push_back(p);
    return true;
}

}  // namespace

void require_prime(const Integer& p, const char* who) {
    if (!memoized_prime(p))
        throw NonPrimeModulus(std::string(who) + ": modulus " + p.get_str() +
                              " is not prime");
}

void require_odd_prime(const Integer& p, const char* who) {
    if (p == 2)
        throw NonPrimeModulus(std::string(who) + ": modulus must be odd");
    require_prime(p, who);
}

// ---- valuations -------------------------------------------------------------

Val valuation(const Integer& n, const Integer& p) {
    require_prime(p, "valuation");
    if (n == 0) return Val::infinity();
    Integer rest;
    unsigned long e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return Val(static_cast<long long>(e));
}

Val valuation(const Rational& x, const Integer& p) {
    if (x == 0) {
        require_prime(p, "valuation");
        return Val::infinity();
    }
    Val num = valuation(Integer(x.get_num()), p);
    Val den = valuation(Integer(x.get_den()), p);
    return Val(num.value() - den.value());
}

Integer unit_part(const Integer& n, const Integer& p) {
    require_prime(p, "unit_part");
    if (n == 0) throw ZeroInput("unit_part: zero has no unit part");
    Integer rest;
    mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return rest;
}

Rational unit_part(const Rational& x, const Integer& p) {
    if (x == 0) throw ZeroInput("unit_part: zero has no unit part");
    return make_rational(unit_part(Integer(x.get_num()), p),
                         unit_part(Integer(x.get_den()), p));
}

Integer residue_mod(const Rational& x, const Integer& m) {
    if (m <= 0) throw Error("residue_mod: modulus must be positive");
    Integer den(x.get_den());
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
        throw Error("residue_mod: denominator shares a factor with the modulus");
    Integer r = (Integer(x.get_num()) % m) * inv % m;
    if (r < 0) r += m;
    return r;
}

// ---- quadratic symbols -------------------------------------------------------

int legendre(const Integer& a, const Integer& p) {
    require_odd_prime(p, "legendre");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int residue_symbol_ext(const Integer& a, const Integer& p, long long f) {
    if (f < 1) throw Error("residue_symbol_ext: degree must be positive");
    int s = legendre(a, p);
    return (f % 2 == 0) ? s * s : s;
}

// ---- Hilbert symbol -----------------------------------------------------------

namespace {

// (u-1)/2 mod 2 for an odd 2-adic unit, read off the residue mod 4.
bool eps2(const Rational& u) { return residue_mod(u, 4) == 3; }

// (u^2-1)/8 mod 2 for an odd 2-adic unit, read off the residue mod 8.
bool omega2(const Rational& u) {
    Integer r = residue_mod(u, 8);
    return r == 3 || r == 5;
}

}  // namespace

Sign hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw ZeroInput("hilbert_symbol: arguments must be nonzero");
    if (v.is_real())
        return (a < 0 && b < 0) ? Sign::minus() : Sign::plus();

    const Integer& p = *v.p;
    require_prime(p, "hilbert_symbol");
    long long alpha = valuation(a, p).value();
    long long beta = valuation(b, p).value();
    Rational u = unit_part(a, p);
    Rational w = unit_part(b, p);

    if (p == 2) {
        bool exp = (eps2(u) && eps2(w));
        if (alpha % 2 != 0 && omega2(w)) exp = !exp;
        if (beta % 2 != 0 && omega2(u)) exp = !exp;
        return Sign::from_parity(exp);
    }

    // Tame formula: (-1)^{alpha beta (p-1)/2} (u/p)^beta (w/p)^alpha.
    bool exp = (alpha % 2 != 0) && (beta % 2 != 0) &&
               (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3);
    if (beta % 2 != 0 && legendre(residue_mod(u, p), p) == -1) exp = !exp;
    if (alpha % 2 != 0 && legendre(residue_mod(w, p), p) == -1) exp = !exp;
    return Sign::from_parity(exp);
}

Sign hilbert_symbol(const Integer& a, const Integer& b, const Place& v) {
    return hilbert_symbol(Rational(a), Rational(b), v);
}

// ---- factorization --------------------------------------------------------------

Integer Factorization::value() const {
    Integer n = sign;
    for (const auto& f : factors) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), f.p.get_mpz_t(), f.e);
        n *= pe;
    }
    return n;
}

namespace {

FactorCertificate certificate_for(const Integer& p) {
    if (p < mr_deterministic_bound()) return FactorCertificate::DETERMINISTIC_MR;
    return FactorCertificate::PROBABLE_PRIME;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of odd composite n, or
// 0 when the iteration budget runs out.
Integer pollard_brent(const Integer& n, unsigned long c, unsigned long long budget) {
    Integer y = 2, r = 1, q = 1, g = 1, x, ys;
    unsigned long long used = 0;
    const unsigned long batch = 128;
    while (g == 1 && used < budget) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
        Integer k = 0;
        while (k < r && g == 1 && used < budget) {
            ys = y;
            unsigned long steps = batch;
            if (r - k < batch) steps = mpz_get_ui(Integer(r - k).get_mpz_t());
            for (unsigned long i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                Integer d = x - y;
                q = (q * abs(d)) % n;
            }
            used += steps;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += steps;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the last batch.
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            Integer d = x - ys;
            mpz_gcd(g.get_mpz_t(), Integer(abs(d)).get_mpz_t(), n.get_mpz_t());
        }
    }
    if (g == 1 || g == n) return 0;
    return g;
}

}  // namespace

Factorization factorize(const Integer& n, const std::vector<Integer>& hints) {
    if (n == 0) throw ZeroInput("factorize: zero input");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    const Integer n_abs = abs(n);
    Integer rest = n_abs;

    std::map<Integer, std::pair<unsigned long, FactorCertificate>> found;

    for (const Integer& h : hints) {
        if (h <= 1)
            throw HintRejected("factorize: hint " + h.get_str() + " is not > 1");
        if (!mpz_divisible_p(rest.get_mpz_t(), h.get_mpz_t())) {
            if (found.count(h) || mpz_divisible_p(n_abs.get_mpz_t(), h.get_mpz_t()))
                continue;  // duplicate hint; its power is already extracted
            throw HintRejected("factorize: hint " + h.get_str() +
                               " does not divide the input");
        }
        if (!is_prime(h))
            throw HintRejected("factorize: hint " + h.get_str() + " is not prime");
        unsigned long e =
            mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), h.get_mpz_t());
        found[h] = {e, FactorCertificate::HINTED};
    }

    // Staged trial division: cheap primes first, primality probe between
    // stages so an already-prime cofactor is not ground against the sieve.
    const unsigned long stages[] = {1000, 10000, 100000, SIEVE_LIMIT};
    std::size_t idx = 0;
    for (unsigned long limit : stages) {
        if (rest == 1) break;
        const auto& ps = sieve_primes();
        for (; idx < ps.size() && ps[idx] < limit; ++idx) {
            if (mpz_divisible_ui_p(rest.get_mpz_t(), ps[idx])) {
                Integer p(static_cast<long>(ps[idx]));
                unsigned long e =
                    mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
                found[p] = {e, FactorCertificate::TRIAL_DIVISION};
            }
        }
        if (rest == 1) break;
        Integer lim2 = Integer(static_cast<long>(limit)) * static_cast<long>(limit);
        if (rest < lim2 || classify_prime(rest) != Primality::COMPOSITE) {
            found[rest] = {found.count(rest) ? found[rest].first + 1 : 1,
                           rest < lim2 ? FactorCertificate::TRIAL_DIVISION
                                       : certificate_for(rest)};
            rest = 1;
            break;
        }
    }

    // Pollard rho on whatever composite part survives.
    std::vector<Integer> pending;
    if (rest != 1) pending.push_back(rest);
    Integer stuck = 1;
    while (!pending.empty()) {
        Integer m = pending.back();
        pending.pop_back();
        if (classify_prime(m) != Primality::COMPOSITE) {
            unsigned long e = 1;
            if (found.count(m)) e += found[m].first;
            found[m] = {e, certificate_for(m)};
            continue;
        }
        Integer f = 0;
        for (unsigned long c = 1; c <= 7 && f == 0; c += 2)
            f = pollard_brent(m, c, 1250000);
        if (f == 0) {
            stuck *= m;
            continue;
        }
        pending.push_back(f);
        pending.push_back(m / f);
    }
    if (stuck != 1)
        throw FactorizationIncomplete(
            "factorize: composite cofactor " + stuck.get_str() +
                " resisted; supply its factors as hints",
            stuck);

    for (auto& [p, ec] : found)
        out.factors.push_back(PrimePower{p, ec.first, ec.second});
    return out;
}

bool is_pth_power_free(const Integer& n, const Integer& p,
                       const std::vector<Integer>& hints) {
    require_prime(p, "is_pth_power_free");
    if (n == 0) throw ZeroInput("is_pth_power_free: zero input");
    if (n == 1 || n == -1) return true;
    Factorization f = factorize(n, hints);
    for (const auto& pp : f.factors)
        if (p <= static_cast<long>(pp.e)) return false;
    return true;
}

Integer squarefree_part(const Integer& n, const std::vector<Integer>& hints) {
    if (n == 0) throw ZeroInput("squarefree_part: zero input");
    Factorization f = factorize(n, hints);
    Integer out = f.sign;
    for (const auto& pp : f.factors)
        if (pp.e % 2 == 1) out *= pp.p;
    return out;
}

}  // namespace rootno
