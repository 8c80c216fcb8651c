#pragma once

#include <cstdint>
#include <string>

#include "rootno/arith.hpp"
#include "rootno/curve.hpp"

namespace rootno {

// Valuation triple (v2(disc), v2(c6), v2(c4)) reduced by multiples of
// (12, 6, 4) until the smallest entry-wise non-negative triple is reached.
// Entries for vanishing invariants are infinite.
struct CTriple {
    Val c_delta;
    Val c6;
    Val c4;

    bool operator==(const CTriple&) const = default;
    std::string str() const;
};

// Reduces raw valuations to the fundamental triple.  v_disc must be finite.
CTriple c_triple_vals(Val v_disc, Val v_c6, Val v_c4);

// Everything the table lookup needs: the reduced triple plus the odd parts
// of disc, c6, c4 modulo 64.  Units of vanishing invariants are absent.
struct Q2Context {
    CTriple triple;
    long long disc_u;  // disc / 2^v2(disc) mod 64, in [0, 64)
    long long c6_u;    // valid only when has_c6
    long long c4_u;    // valid only when has_c4
    bool has_c6;
    bool has_c4;
};

// Builds the lookup context from a model's invariants.
Q2Context q2_context(const WeierstrassModel& m);

// Builds the context from precomputed parts; pass -1 for an absent unit.
Q2Context make_q2_context(const CTriple& t, long long disc_unit_mod64,
                          long long c6_unit_mod64, long long c4_unit_mod64);

// Root number of E/Q_2 by table lookup.  Covers every reduction type,
// including non-minimal models.  Throws TableMiss if no row matches
// (the row set is total over real curves, so a miss means a bad context).
Sign q2_root_number(const Q2Context& ctx);

// Number of rows matching the context; exactly 1 for every real curve.
int q2_match_count(const Q2Context& ctx);

// Table identity, pinned by tests so silent edits of the row data fail.
int q2_row_count();
const char* q2_table_version();
std::uint64_t q2_table_checksum();

}  // namespace rootno
