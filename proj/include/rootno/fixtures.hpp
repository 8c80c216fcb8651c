#pragma once
// Fixture corpus plumbing: line-delimited JSON records pin worked values
// from the published literature, and the runner replays them against the
// library.  Field descriptors also get their text syntax here since the
// corpus and the command line share it.

#include <iosfwd>
#include <string>
#include <vector>

#include "rootno/curve.hpp"
#include "rootno/globalroot.hpp"

namespace rootno {

// One named assertion.  The key selects the operation:
//   "global"            global root number
//   "local@P"           local root number at the prime P
//   "class@P"           reduction class token (GOOD, SPLIT_MULT, ...)
//   "kodaira@P"         Kodaira symbol string ("III", "I5", "IV*")
//   "basechange@FIELD"  root number over the field descriptor FIELD
//   "twist@D"           root number of the quadratic twist by D
//   "artin@DIM:ALPHA:NE" twisted root number for a self-dual DIM-dimensional
//                        representation with determinant field Q(sqrt ALPHA),
//                        conductor NE attested coprime
struct FixtureAssertion {
    std::string key;
    std::string value;
    std::string provenance;
};

struct FixtureRecord {
    std::string label;
    WeierstrassModel model;
    std::vector<FixtureAssertion> expected;
    std::vector<Integer> hints;
};

struct AssertionResult {
    std::string label;
    std::string key;
    std::string expected;
    std::string got;  // rendered value, or "error: ..." when the op threw
    bool passed = false;
    std::string provenance;
};

struct FixtureReport {
    long long passed = 0;
    long long failed = 0;
    std::vector<AssertionResult> results;

    bool ok() const { return failed == 0; }
};

// "quad:-2", "biquad:-3,13", "zeta8", "radical:m=5,p=3,n=2".
FieldDescriptor parse_field_text(const std::string& text);

// Line-delimited JSON, one record per line; blank lines are skipped.  Every
// assertion must carry a nonempty provenance string and a recognized key.
// Throws ParseError naming the offending line.
std::vector<FixtureRecord> parse_fixtures(std::istream& in);
std::vector<FixtureRecord> load_fixtures(const std::string& path);

// Evaluates every assertion; evaluation failures (including throws) become
// failed results rather than exceptions.
FixtureReport run_fixtures(const std::vector<FixtureRecord>& records);
FixtureReport run_fixtures(const std::string& path);

}  // namespace rootno
