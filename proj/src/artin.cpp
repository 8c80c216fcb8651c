#include "rootno/artin.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "rootno/errors.hpp"

namespace rootno {

namespace {

// Partitions of n, first part bounded by cap, in reverse lexicographic
// order: (n), (n-1,1), ..., (1,...,1).
void partitions_into(long long n, long long cap, std::vector<long long>& stem,
                     std::vector<std::vector<long long>>& out) {
    if (n == 0) {
        out.push_back(stem);
        return;
    }
    for (long long part = std::min(n, cap); part >= 1; --part) {
        stem.push_back(part);
        partitions_into(n - part, part, stem, out);
        stem.pop_back();
    }
}

std::vector<std::vector<long long>> partitions(long long n) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> stem;
    partitions_into(n, n, stem, out);
    return out;
}

std::vector<long long> conjugate(const std::vector<long long>& lam) {
    std::vector<long long> cols(static_cast<std::size_t>(lam[0]), 0);
    for (long long row : lam)
        for (long long j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    return cols;
}

// Hook length formula; exact in long long for the n <= 20 this file uses.
long long hook_dim(const std::vector<long long>& lam, long long n) {
    const std::vector<long long> cols = conjugate(lam);
    long long nfact = 1;
    for (long long k = 2; k <= n; ++k) nfact *= k;
    long long hooks = 1;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (long long j = 0; j < lam[i]; ++j)
            hooks *= lam[i] - j + cols[static_cast<std::size_t>(j)] -
                     static_cast<long long>(i) - 1;
    return nfact / hooks;
}

// Character at a transposition: dim * (sum of contents) / C(n,2).
long long transposition_char(const std::vector<long long>& lam, long long dim,
                             long long n) {
    long long contents = 0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (long long j = 0; j < lam[i]; ++j)
            contents += j - static_cast<long long>(i);
    const long long num = dim * contents * 2;
    const long long den = n * (n - 1);
    if (num % den != 0)
        throw Error("symmetric table: non-integral transposition character");
    return num / den;
}

std::string partition_name(const std::vector<long long>& lam) {
    std::string name = "[";
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(lam[i]);
    }
    return name + "]";
}

GroupTable dihedral_table(long long order) {
    if (order < 2 || order % 2 != 0)
        throw UnsupportedGroup("dihedral group order must be even and >= 2");
    const long long n = order / 2;
    GroupTable table;
    table.name = "D" + std::to_string(order);
    table.order = static_cast<long>(order);
    table.irreps.push_back({"1", 1, true, DetOrder::TRIVIAL, false});
    table.irreps.push_back({"eps", 1, true, DetOrder::ORDER2, false});
    if (n % 2 == 0 && n > 1) {
        table.irreps.push_back({"eps1", 1, true, DetOrder::ORDER2, false});
        table.irreps.push_back({"eps2", 1, true, DetOrder::ORDER2, false});
    }
    const long long two_dim = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
    for (long long j = 1; j <= two_dim; ++j)
        table.irreps.push_back(
            {"rho" + std::to_string(j), 2, true, DetOrder::ORDER2, false});
    return table;
}

GroupTable symmetric_table(long long n) {
    if (n < 1) throw UnsupportedGroup("symmetric group needs n >= 1");
    if (n > 100000) throw UnsupportedGroup("symmetric group too large");
    GroupTable table;
    table.name = "S" + std::to_string(n);
    mpz_fac_ui(table.order.get_mpz_t(), static_cast<unsigned long>(n));
    if (n > 7) {
        table.full = false;
        table.linear_count = 2;
        return table;
    }
    for (const std::vector<long long>& lam : partitions(n)) {
        const long long dim = hook_dim(lam, n);
        DetOrder det = DetOrder::TRIVIAL;
        if (n >= 2) {
            const long long chi = transposition_char(lam, dim, n);
            // det at a transposition is (-1)^((dim - chi)/2), the number of
            // -1 eigenvalues; det factors through the C2 abelianisation.
            if (((dim - chi) / 2) % 2 != 0) det = DetOrder::ORDER2;
        }
        table.irreps.push_back({partition_name(lam), dim, true, det, false});
    }
    return table;
}

GroupTable alternating5_table() {
    GroupTable table;
    table.name = "A5";
    table.order = 60;
    // A5 is perfect, so every determinant is trivial.
    table.irreps = {{"1", 1, true, DetOrder::TRIVIAL, false},
                    {"tau1", 3, true, DetOrder::TRIVIAL, false},
                    {"tau2", 3, true, DetOrder::TRIVIAL, false},
                    {"rho", 4, true, DetOrder::TRIVIAL, false},
                    {"sigma", 5, true, DetOrder::TRIVIAL, false}};
    return table;
}

GroupTable elem_abelian2_table(long long d) {
    if (d < 1 || d > 16)
        throw UnsupportedGroup("elementary abelian 2-group rank out of range");
    GroupTable table;
    table.name = "C2^" + std::to_string(d);
    table.order = static_cast<long>(1LL << d);
    for (long long k = 0; k < (1LL << d); ++k)
        table.irreps.push_back({"chi" + std::to_string(k), 1, true,
                                k ? DetOrder::ORDER2 : DetOrder::TRIVIAL,
                                false});
    return table;
}

void finish_counts(GroupTable& table) {
    if (!table.full) return;
    table.odd_dim_count = 0;
    table.linear_count = 0;
    for (const Irrep& rep : table.irreps) {
        if (rep.dim % 2 != 0) table.odd_dim_count += 1;
        if (rep.dim == 1) ++table.linear_count;
    }
}

}  // namespace

Sign artin_twist_root(Sign w_e, const RepDescriptor& rep, const Integer& n_e) {
    if (!rep.self_dual)
        throw NotSelfDual("artin twist: representation must be self-dual");
    if (!rep.coprime_attested)
        throw AttestationMissing(
            "artin twist: conductor coprimality not attested");
    if (rep.dim < 1) throw ZeroInput("artin twist: dimension must be positive");
    if (n_e < 1) throw ZeroInput("artin twist: conductor must be positive");
    if (rep.alpha == 0) throw ZeroInput("artin twist: alpha must be nonzero");
    if (!is_pth_power_free(rep.alpha, 2))
        throw NotSquarefree("artin twist: alpha must be squarefree");
    if (rep.alpha != 1) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), rep.alpha.get_mpz_t(), n_e.get_mpz_t());
        if (g != 1)
            throw CoprimalityViolated(
                "artin twist: alpha shares a prime with the conductor");
        // 2 | N_E forces 2 unramified in Q(sqrt(alpha)): alpha = 1 mod 4.
        if (mpz_even_p(n_e.get_mpz_t()) &&
            (mpz_even_p(rep.alpha.get_mpz_t()) ||
             mpz_fdiv_ui(rep.alpha.get_mpz_t(), 4) == 3))
            throw CoprimalityViolated(
                "artin twist: 2 ramifies in the determinant field");
    }
    Sign w = w_e.pow(Integer(static_cast<long>(rep.dim)));
    if (rep.alpha < 0) w *= Sign::minus();
    w *= Sign::from_int(kronecker(rep.alpha, n_e));
    return w;
}

GroupTable group_table(const GroupId& id) {
    GroupTable table;
    switch (id.family) {
        case GroupId::Family::DIHEDRAL: table = dihedral_table(id.n); break;
        case GroupId::Family::SYM: table = symmetric_table(id.n); break;
        case GroupId::Family::ALT5: table = alternating5_table(); break;
        case GroupId::Family::ELEM_ABELIAN2:
            table = elem_abelian2_table(id.n);
            break;
    }
    if (table.full) {
        finish_counts(table);
        Integer square_sum = 0;
        for (const Irrep& rep : table.irreps)
            square_sum += static_cast<long>(rep.dim * rep.dim);
        if (square_sum != table.order)
            throw Error("group table: dimension squares do not sum to |G|");
    } else {
        table.odd_dim_count = sn_odd_irrep_count(id.n);
    }
    return table;
}

GroupId parse_group(const std::string& text) {
    const auto number_from = [&](std::size_t pos) -> long long {
        if (pos >= text.size()) throw ParseError("group name truncated", pos);
        for (std::size_t i = pos; i < text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("group name has a malformed number", i);
        try {
            return std::stoll(text.substr(pos));
        } catch (const std::exception&) {
            throw ParseError("group size out of range", pos);
        }
    };
    if (text == "A5") return {GroupId::Family::ALT5, 5};
    if (text.rfind("C2^", 0) == 0)
        return {GroupId::Family::ELEM_ABELIAN2, number_from(3)};
    if (!text.empty() && text[0] == 'D')
        return {GroupId::Family::DIHEDRAL, number_from(1)};
    if (!text.empty() && text[0] == 'S')
        return {GroupId::Family::SYM, number_from(1)};
    throw ParseError("unrecognised group name", 0);
}

long long frobenius_rank(const MultiplicityVector& mults,
                         const MultiplicityVector& perm_character) {
    if (mults.group != perm_character.group ||
        mults.counts.size() != perm_character.counts.size())
        throw GroupMismatch("frobenius rank: vectors over different groups");
    long long rank = 0;
    for (std::size_t i = 0; i < mults.counts.size(); ++i)
        rank += mults.counts[i] * perm_character.counts[i];
    return rank;
}

DihedralParities dihedral_parity_solver(const Integer& q, Sign w_q,
                                        Sign w_quad,
                                        const std::vector<Sign>& w_rho) {
    require_odd_prime(q, "dihedral solver");
    if (w_rho.empty())
        throw GroupMismatch("dihedral solver: no two-dimensional signs given");
    const Integer orbit = (q - 1) / 2;
    if (w_rho.size() != 1 &&
        Integer(static_cast<long>(w_rho.size())) != orbit)
        throw GroupMismatch(
            "dihedral solver: expected one sign or one per 2-dim irrep");
    for (const Sign& s : w_rho)
        if (!(s == w_rho.front()))
            throw GroupMismatch(
                "dihedral solver: conjugate irreps must share a root number");

    DihedralParities sol;
    sol.trivial = w_q == Sign::minus() ? Parity::ODD : Parity::EVEN;
    sol.sign_rep =
        w_q * w_quad == Sign::minus() ? Parity::ODD : Parity::EVEN;
    sol.two_dim =
        w_rho.front() == Sign::minus() ? Parity::ODD : Parity::EVEN;
    sol.witness_trivial = sol.trivial == Parity::ODD ? 1 : 0;
    sol.witness_sign = sol.sign_rep == Parity::ODD ? 1 : 0;
    sol.witness_two_dim = sol.two_dim == Parity::ODD ? 1 : 0;
    // Each of the (q-1)/2 conjugate irreps contributes 2c dimensions.
    sol.bound = Integer(static_cast<long>(sol.witness_trivial)) +
                Integer(static_cast<long>(sol.witness_sign)) +
                (q - 1) * Integer(static_cast<long>(sol.witness_two_dim));
    return sol;
}

Integer sn_odd_irrep_count(long long n) {
    if (n < 1) throw ZeroInput("odd irrep count needs n >= 1");
    Integer count = 1;
    for (unsigned long k = 0; (1LL << k) <= n; ++k)
        if (n & (1LL << k))
            mpz_mul_2exp(count.get_mpz_t(), count.get_mpz_t(), k);
    return count;
}

Integer sn_rank_bound(long long n) {
    if (n < 2) throw ZeroInput("symmetric rank bound needs n >= 2");
    Integer bound = Integer(static_cast<long>(n)) * (sn_odd_irrep_count(n) - 2);
    // n(count - 2) is even: odd n forces a higher binary digit, so the
    // count is even.
    mpz_divexact_ui(bound.get_mpz_t(), bound.get_mpz_t(), 2);
    return bound;
}

long long order2_bound(const std::vector<long long>& odd_self_dual_dims,
                       long long m) {
    if (m < 1) throw ZeroInput("order-2 bound needs m >= 1");
    long long sum = 0;
    for (long long dim : odd_self_dual_dims) {
        if (dim < 1 || dim % 2 == 0)
            throw ZeroInput("order-2 bound: dimensions must be odd");
        sum += dim;
    }
    return sum / m;
}

long long heegner_bound(long long n, bool heegner_attested,
                        bool coprime_attested) {
    if (n < 1) throw ZeroInput("heegner bound needs n >= 1");
    if (!heegner_attested)
        throw AttestationMissing("heegner hypothesis not attested");
    if (!coprime_attested)
        throw AttestationMissing(
            "conductor-discriminant coprimality not attested");
    return n;
}

std::string sqrt_disc_growth(DegreeParity degree_parity, Sign w_q) {
    if (w_q == Sign::plus())
        throw WrongSign("discriminant growth needs w(E/Q) = -1");
    return degree_parity == DegreeParity::EVEN ? "ε⊗ρ" : "ρ⊕ε";
}

}  // namespace rootno
