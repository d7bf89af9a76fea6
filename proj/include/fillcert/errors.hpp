#pragma once

#include <stdexcept>
#include <string>

namespace fillcert {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad text, mismatched dimensions, invalid parameters.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An element was expected in I^k (or I^k M) but a lower-degree term survived.
class FiltrationError : public Error {
public:
    FiltrationError(const std::string& what, int surviving_degree)
        : Error(what), surviving_degree_(surviving_degree) {}
    int surviving_degree() const noexcept { return surviving_degree_; }

private:
    int surviving_degree_;
};

/// A chain that should be a cycle has nonzero boundary, or a word does not close up.
class NotACycle : public Error {
public:
    using Error::Error;
};

/// A line meets the lattice or a cell boundary; intersection counts are undefined.
class TransversalityError : public Error {
public:
    using Error::Error;
};

/// Convention or structure mismatch (block structure, unsupported direction class).
class StructureError : public Error {
public:
    using Error::Error;
};

/// A filtration quotient that should be free has torsion.
class TorsionError : public StructureError {
public:
    using StructureError::StructureError;
};

}  // namespace fillcert
