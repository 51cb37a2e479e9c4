#pragma once

#include <stdexcept>
#include <string>

namespace mf {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Series arithmetic on incompatible exponent grids.
class GridError : public Error {
public:
    explicit GridError(const std::string& what) : Error(what) {}
};

// Translation multiplier e^{2*pi*i*(m/2)*t} is not +-1 for some supported exponent.
class NonRealMultiplier : public Error {
public:
    explicit NonRealMultiplier(const std::string& what) : Error(what) {}
};

// Eta-quotient prefactor exponent is negative or not on the half-integer grid.
class PrefactorNotOnGrid : public Error {
public:
    explicit PrefactorNotOnGrid(const std::string& what) : Error(what) {}
};

class UnsupportedWeight : public Error {
public:
    explicit UnsupportedWeight(const std::string& what) : Error(what) {}
};

class OddWeight : public Error {
public:
    explicit OddWeight(const std::string& what) : Error(what) {}
};

class PrimeDividesLevel : public Error {
public:
    explicit PrimeDividesLevel(const std::string& what) : Error(what) {}
};

// A space does not carry enough coefficients to determine an operator image
// at Sturm precision.  Never degrade to approximations.
class InsufficientPrecision : public Error {
public:
    explicit InsufficientPrecision(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// No operator in the fallback sequence separates old from new eigenvalues.
class SeparationFailure : public Error {
public:
    explicit SeparationFailure(const std::string& what) : Error(what) {}
};

class NonUnimodular : public Error {
public:
    explicit NonUnimodular(const std::string& what) : Error(what) {}
};

class NotInGroup : public Error {
public:
    explicit NotInGroup(const std::string& what) : Error(what) {}
};

class NotInUpperHalfPlane : public Error {
public:
    explicit NotInUpperHalfPlane(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

class OutsideConvergenceRegion : public Error {
public:
    explicit OutsideConvergenceRegion(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace mf
