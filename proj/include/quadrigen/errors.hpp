#ifndef QUADRIGEN_ERRORS_HPP
#define QUADRIGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadrigen {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer arithmetic left the representable range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg = "64-bit integer overflow")
        : Error(msg) {}
};

// Input coordinate outside the supported magnitude (|x| <= 10^6).
struct CoordinateOutOfRange : Error {
    explicit CoordinateOutOfRange(const std::string& msg) : Error(msg) {}
};

// Affine span of the input has lower dimension than the ambient space.
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct NotAVertex : Error {
    explicit NotAVertex(const std::string& msg) : Error(msg) {}
};

struct NotSmoothVertex : Error {
    explicit NotSmoothVertex(const std::string& msg) : Error(msg) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& msg) : Error(msg) {}
};

struct InvalidParameters : Error {
    explicit InvalidParameters(const std::string& msg) : Error(msg) {}
};

// Guard rails of the combinatorial oracle exceeded.
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

struct NoInteriorPoints : Error {
    explicit NoInteriorPoints(const std::string& msg) : Error(msg) {}
};

struct NotNonsingular : Error {
    explicit NotNonsingular(const std::string& msg) : Error(msg) {}
};

// The diamond construction's entry conditions do not hold at the chosen
// vertex (all four direction components must be >= 1); we refuse to guess
// an alternative vertex.
struct DiamondPreconditionFailed : Error {
    explicit DiamondPreconditionFailed(const std::string& msg) : Error(msg) {}
};

// The constructed parallelogram failed one of its required containments.
struct DiamondVerificationFailed : Error {
    explicit DiamondVerificationFailed(const std::string& msg) : Error(msg) {}
};

struct NoParallelFacetPair : Error {
    explicit NoParallelFacetPair(const std::string& msg) : Error(msg) {}
};

struct InteriorNotEmpty : Error {
    explicit InteriorNotEmpty(const std::string& msg) : Error(msg) {}
};

// A polygon slice of a 3-polytope is not a lattice polygon; the width-1
// bundle machinery cannot proceed and we refuse to guess.
struct SliceNotLattice : Error {
    explicit SliceNotLattice(const std::string& msg) : Error(msg) {}
};

}  // namespace quadrigen

#endif
