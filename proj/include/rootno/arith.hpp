#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rootno/errors.hpp"

namespace rootno {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds a canonical fraction (gcd-reduced, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);

// ---- Sign -------------------------------------------------------------

// The multiplicative group {+1, -1}.  Kept as its own type so root numbers
// never mix silently with counters or valuations.
class Sign {
  public:
    static Sign plus() { return Sign(+1); }
    static Sign minus() { return Sign(-1); }

    // v must be +1 or -1.
    static Sign from_int(long v);

    // (-1)^e for e >= 0 given only the parity of e.
    static Sign from_parity(bool odd) { return odd ? minus() : plus(); }

    Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
    Sign& operator*=(Sign o) { v_ *= o.v_; return *this; }
    Sign pow(const Integer& e) const;
    bool operator==(const Sign&) const = default;

    int to_int() const { return v_; }
    const char* str() const { return v_ > 0 ? "+1" : "-1"; }

  private:
    explicit Sign(int v) : v_(v) {}
    int v_;
};

// ---- Val --------------------------------------------------------------

// Value of a discrete valuation: a nonnegative-or-negative integer, or the
// valuation of zero.  Infinity dominates every finite value.
class Val {
  public:
    static Val infinity() { Val v; v.inf_ = true; return v; }
    explicit Val(long long v) : v_(v) {}

    bool is_infinite() const { return inf_; }
    // Finite value; throws on infinity.
    long long value() const;

    bool operator==(const Val&) const = default;
    bool operator<(const Val& o) const;
    bool operator<=(const Val& o) const { return *this < o || *this == o; }
    bool operator>=(const Val& o) const { return !(*this < o); }
    bool operator>(const Val& o) const { return o < *this; }

    // Finite comparisons against plain integers; infinity compares greater.
    bool operator==(long long x) const { return !inf_ && v_ == x; }
    bool operator>=(long long x) const { return inf_ || v_ >= x; }
    bool operator<(long long x) const { return !inf_ && v_ < x; }

    Val operator+(long long d) const;
    Val operator-(long long d) const { return *this + (-d); }

    // floor(v / q) for q > 0; infinity stays infinite.
    Val floordiv(long long q) const;
    // v mod q in [0, q); finite values only.
    long long mod(long long q) const;

    std::string str() const;

    Val() = default;  // finite zero

  private:
    long long v_ = 0;
    bool inf_ = false;
};

// Minimum over finite entries; infinite entries are skipped.  All-infinite
// input yields infinity.
Val val_min(std::initializer_list<Val> vs);

// ---- valuations ---------------------------------------------------------

// v_p(n); v_p(0) is infinity.  p must be prime.
Val valuation(const Integer& n, const Integer& p);
Val valuation(const Rational& x, const Integer& p);

// n / p^{v_p(n)}; requires n != 0 (ZeroInput).
Integer unit_part(const Integer& n, const Integer& p);
Rational unit_part(const Rational& x, const Integer& p);

// Canonical residue of a p-integral rational in [0, m): num * den^{-1} mod m.
// Requires gcd(den, m) = 1.
Integer residue_mod(const Rational& x, const Integer& m);

// ---- primality ----------------------------------------------------------

enum class Primality { COMPOSITE, PRIME, PROBABLE_PRIME };

// Deterministic Miller-Rabin below 3.3 * 10^24, Baillie-PSW plus extra
// Miller-Rabin rounds above (no pseudoprime is known for that combination).
Primality classify_prime(const Integer& n);
bool is_prime(const Integer& n);

// Throws NonPrimeModulus unless p is prime (memoized, cheap on repeats).
void require_prime(const Integer& p, const char* who);
// Same, plus oddness.
void require_odd_prime(const Integer& p, const char* who);

// ---- quadratic symbols ----------------------------------------------------

// Legendre symbol (a/p) in {-1,0,+1}; p an odd prime.
int legendre(const Integer& a, const Integer& p);

// Kronecker symbol (a/n), the full extension (n arbitrary, including even
// and negative n).
int kronecker(const Integer& a, const Integer& n);

// Legendre symbol of a in the residue field of an unramified extension of
// degree f: (a/p)^f.
int residue_symbol_ext(const Integer& a, const Integer& p, long long f);

// ---- Hilbert symbol --------------------------------------------------------

// A place of Q: a finite prime or the real place.
struct Place {
    static Place real() { return Place{}; }
    static Place prime(Integer p) { Place pl; pl.p = std::move(p); return pl; }
    bool is_real() const { return !p.has_value(); }
    std::optional<Integer> p;
};

// Hilbert symbol (a, b)_v in {-1,+1}; a, b nonzero.
Sign hilbert_symbol(const Rational& a, const Rational& b, const Place& v);
Sign hilbert_symbol(const Integer& a, const Integer& b, const Place& v);

// ---- factorization ---------------------------------------------------------

enum class FactorCertificate {
    TRIAL_DIVISION,      // found by sieve-backed trial division
    DETERMINISTIC_MR,    // below the deterministic Miller-Rabin bound
    PROBABLE_PRIME,      // Baillie-PSW territory
    HINTED,              // supplied externally, then verified prime
};

struct PrimePower {
    Integer p;
    unsigned long e;
    FactorCertificate cert;
};

struct Factorization {
    int sign = 1;                    // +1 or -1
    std::vector<PrimePower> factors; // strictly increasing primes
    Integer value() const;
};

// Full factorization of n != 0.  Trial division by primes < 10^6 in stages,
// then Pollard rho (Brent variant) on what is left.  `hints` may carry known
// prime divisors of n; every hint is checked (divides n, is prime) and a
// failing hint raises HintRejected.  If the machinery gives up, the surviving
// composite cofactor rides along in FactorizationIncomplete.
Factorization factorize(const Integer& n, const std::vector<Integer>& hints = {});

// True when no prime enters n with exponent >= p (|n| = 1 included).
bool is_pth_power_free(const Integer& n, const Integer& p,
                       const std::vector<Integer>& hints = {});

// Largest squarefree divisor d of n with n/d a perfect square, signed:
// squarefree_part(-18) = -2.
Integer squarefree_part(const Integer& n, const std::vector<Integer>& hints = {});

}  // namespace rootno
