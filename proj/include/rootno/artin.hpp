#pragma once
// Root numbers of self-dual Artin twists, the character tables behind the
// rank predictions, and the parity bookkeeping that turns signs into rank
// lower bounds.

#include <string>
#include <vector>

#include "rootno/arith.hpp"

namespace rootno {

// The twisted root number formula only sees the dimension, the sign of
// alpha, and the quadratic field Q(sqrt(alpha)) cut out by det(rho);
// alpha = 1 encodes a trivial determinant.  Self-duality and conductor
// coprimality are hypotheses of the theorem and arrive as flags.
struct RepDescriptor {
    long long dim = 1;
    bool self_dual = true;
    Integer alpha = 1;
    bool coprime_attested = false;
};

// w(E/Q)^dim * sign(alpha) * (alpha|N_E), Jacobi symbol extended to even
// N_E by the Kronecker convention (alpha = 5 mod 8 gives -1 at 2).
Sign artin_twist_root(Sign w_e, const RepDescriptor& rep, const Integer& n_e);

enum class DetOrder { TRIVIAL, ORDER2, HIGHER };

struct Irrep {
    std::string name;
    long long dim = 1;
    bool self_dual = true;
    DetOrder det = DetOrder::TRIVIAL;
    // Schur index 2 where known; informational, never computed.
    bool symplectic = false;
};

struct GroupId {
    enum class Family { DIHEDRAL, SYM, ALT5, ELEM_ABELIAN2 };
    Family family = Family::DIHEDRAL;
    // Group order for DIHEDRAL, number of letters for SYM, 2-rank for
    // ELEM_ABELIAN2; ignored for ALT5.
    long long n = 0;
};

struct GroupTable {
    std::string name;
    Integer order = 1;
    // Sym(n) beyond 7 keeps only the counts; the irrep list stays empty.
    bool full = true;
    std::vector<Irrep> irreps;
    Integer odd_dim_count = 1;
    long long linear_count = 1;
};

// Dihedral tables take the group order (even); symmetric tables are built
// from the hook length formula at call time rather than transcribed.
GroupTable group_table(const GroupId& id);

// "D10", "S14", "A5", "C2^4".
GroupId parse_group(const std::string& text);

// Multiplicities of the irreps of a named group, in table order.
struct MultiplicityVector {
    std::string group;
    std::vector<long long> counts;
};

// <V, C[G/H]>: the rank of E over the fixed field of H, from the
// multiplicities of V and of the permutation character.
long long frobenius_rank(const MultiplicityVector& mults,
                         const MultiplicityVector& perm_character);

enum class Parity { EVEN, ODD, UNKNOWN };

// Parity constraints on V = 1^a + eps^b + (rho_1 + ... + rho_k)^c for a
// dihedral extension of order 2q, with the smallest rank they allow and a
// multiplicity vector attaining it.
struct DihedralParities {
    Parity trivial = Parity::UNKNOWN;
    Parity sign_rep = Parity::UNKNOWN;
    Parity two_dim = Parity::UNKNOWN;
    Integer bound = 0;
    long long witness_trivial = 0;
    long long witness_sign = 0;
    long long witness_two_dim = 0;
};

// w_rho holds the twisted root numbers of the 2-dimensional irreps: either
// a single entry or one per irrep.  The irreps are Galois conjugate, so the
// entries must agree and the multiplicity c is shared.
DihedralParities dihedral_parity_solver(const Integer& q, Sign w_q,
                                        Sign w_quad,
                                        const std::vector<Sign>& w_rho);

// Number of odd-dimensional irreps of Sym(n): prod_k 2^(k a_k) over the
// binary digits n = sum_k a_k 2^k.
Integer sn_odd_irrep_count(long long n);

// (n/2)(sn_odd_irrep_count(n) - 2); always an integer.
Integer sn_rank_bound(long long n);

// floor((sum of dims)/m) for the odd-dimensional self-dual irreps and m
// linear characters of order at most 2.
long long order2_bound(const std::vector<long long>& odd_self_dual_dims,
                       long long m);

// A C_n-extension of a Heegner-hypothesis imaginary quadratic field forces
// rank at least n; both hypotheses arrive as attestations.
long long heegner_bound(long long n, bool heegner_attested,
                        bool coprime_attested);

enum class DegreeParity { EVEN, ODD };

// Which twist picks up root number -1 over K(sqrt(disc K)) when
// w(E/Q) = -1; keyed by the parity of [K:Q].
std::string sqrt_disc_growth(DegreeParity degree_parity, Sign w_q);

}  // namespace rootno
