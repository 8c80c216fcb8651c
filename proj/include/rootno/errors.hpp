#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rootno {

// Base class for every error thrown by this library.  CLI exit codes are
// derived from the concrete type, so new error kinds should subclass one of
// the categories below rather than throwing std::runtime_error directly.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- input / precondition violations -------------------------------------

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& what) : Error(what) {}
};

struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(const std::string& what) : Error(what) {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& what) : Error(what) {}
};

struct NotPowerFree : Error {
    explicit NotPowerFree(const std::string& what) : Error(what) {}
};

struct SingularCurve : Error {
    explicit SingularCurve(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), pos(position) {}
    std::size_t pos;
};

struct HintRejected : Error {
    explicit HintRejected(const std::string& what) : Error(what) {}
};

// ---- capability limits ----------------------------------------------------

// Factoring gave up with a composite cofactor left over.  The cofactor is
// carried so a caller can retry with --hint-factor.
struct FactorizationIncomplete : Error {
    FactorizationIncomplete(const std::string& what, mpz_class cof)
        : Error(what), cofactor(std::move(cof)) {}
    mpz_class cofactor;
};

// A local computation landed outside the implemented range of cases
// (wild places over extensions, even ramification over potentially
// multiplicative reduction, ...).
struct UnsupportedLocalCase : Error {
    explicit UnsupportedLocalCase(const std::string& what) : Error(what) {}
};

// Splitting data for a place could not be produced exactly and no
// parity-only fallback applies.
struct UnsupportedSplitting : Error {
    explicit UnsupportedSplitting(const std::string& what) : Error(what) {}
};

struct ModelSearchExhausted : Error {
    explicit ModelSearchExhausted(const std::string& what) : Error(what) {}
};

// Residue-table lookup fell through every row; indicates an impossible
// invariant combination and is always a bug if reachable.
struct TableMiss : Error {
    explicit TableMiss(const std::string& what) : Error(what) {}
};

// ---- structural preconditions of the higher-level engines ------------------

struct NotSemistable : Error {
    explicit NotSemistable(const std::string& what) : Error(what) {}
};

struct BadReductionAtP : Error {
    explicit BadReductionAtP(const std::string& what) : Error(what) {}
};

struct NotSelfDual : Error {
    explicit NotSelfDual(const std::string& what) : Error(what) {}
};

// A non-integral j-invariant contradicts a supplied everywhere-good-reduction
// attestation: the curve is potentially multiplicative at that prime.
struct NotPotentiallyGood : Error {
    explicit NotPotentiallyGood(const std::string& what) : Error(what) {}
};

struct AttestationMissing : Error {
    explicit AttestationMissing(const std::string& what) : Error(what) {}
};

struct CoprimalityViolated : Error {
    explicit CoprimalityViolated(const std::string& what) : Error(what) {}
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& what) : Error(what) {}
};

struct UnsupportedGroup : Error {
    explicit UnsupportedGroup(const std::string& what) : Error(what) {}
};

struct QuadraticSubfieldPresent : Error {
    explicit QuadraticSubfieldPresent(const std::string& what) : Error(what) {}
};

struct BadResidue : Error {
    explicit BadResidue(const std::string& what) : Error(what) {}
};

struct WrongSign : Error {
    explicit WrongSign(const std::string& what) : Error(what) {}
};

struct FixtureFailure : Error {
    explicit FixtureFailure(const std::string& what) : Error(what) {}
};

}  // namespace rootno
