#ifndef GRADUA_ERROR_HPP
#define GRADUA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gradua {

enum class ErrorKind {
    MalformedElement,   // zero denominator, bad parse, bad structure constants
    FieldMismatch,      // operands over different field descriptors
    DimensionMismatch,
    PresentationError,  // inhomogeneous relation, inconsistent degrees
    NormalizationNotFound,
    CertificationError, // generic-point invariant failed, torsion certificate missing
    ResourceError,      // window/resolution/cap budget exceeded
    NonStabilized,      // local cohomology colimit did not settle below the s-cap
    OutOfScope,         // e.g. injective hull requested for dim != 1
    CapabilityError,    // tensor product without Hopf data
    DegenerateCone,     // Koszul object on a stably trivial class
    PreconditionError,  // AR triangle on projective/decomposable input
    UsageError,         // CLI / file input problems
    Inconclusive,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace gradua

#endif
