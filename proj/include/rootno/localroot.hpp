#pragma once

#include "rootno/arith.hpp"
#include "rootno/curve.hpp"
#include "rootno/q2table.hpp"

namespace rootno {

// A finite place of a number field lying over p, with ramification index e
// and residue degree f relative to Q_p.
struct ExtPlace {
    Integer p;
    long long e = 1;
    long long f = 1;

    bool operator==(const ExtPlace&) const = default;
};

// Archimedean places always contribute -1.
Sign root_number_infinite();

// Reduced valuation triple of a model at 2; see q2table.hpp.
CTriple c_triple(const WeierstrassModel& m);

// w(E/Q_2), by table lookup on the valuation triple.  Works on any model.
Sign root_number_2(const WeierstrassModel& m);

// w(E/Q_3) for additive reduction with potentially good reduction.  The
// reduction type fixes the answer except in the wild cases, where a short
// 3-adic search on the completed-square cubic supplies the remaining data.
// Throws UnsupportedLocalCase off the potentially good additive locus and
// ModelSearchExhausted if the search exceeds its depth cap.
Sign kobayashi_root(const WeierstrassModel& m);

// w(E/Q_p) for any prime p and any rational model.
Sign local_root_number(const WeierstrassModel& m, const Integer& p);

// w(E/K_v) for a place v | p of a number field, described by (p, e, f).
// Supported: good reduction anywhere, multiplicative reduction anywhere,
// and additive reduction at p >= 5 (odd ramification only in the
// potentially multiplicative case).  Everything else throws
// UnsupportedLocalCase.
Sign local_root_number_ext(const WeierstrassModel& m, const ExtPlace& place);

}  // namespace rootno
