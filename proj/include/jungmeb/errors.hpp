#pragma once

#include <stdexcept>
#include <string>

namespace jungmeb {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Support points too degenerate to pin a sphere: a collinear triple or a
/// coplanar quadruple. Callers fall back to a smaller support.
class DegenerateSupport : public Error {
    using Error::Error;
};

/// A claimed support point does not lie on the sphere frontier.
class InvalidSupport : public Error {
    using Error::Error;
};

/// Point count above the brute-force enumeration guard.
class TooManyPoints : public Error {
    using Error::Error;
};

/// The sphere offered for certification does not even enclose the points;
/// the certificate is refused rather than marked failed.
class NotEnclosing : public Error {
    using Error::Error;
};

class EmptyInput : public Error {
    using Error::Error;
};

class NonFiniteCoordinate : public Error {
    using Error::Error;
};

/// Malformed input text. Carries the 1-based line (CSV) or element index
/// (JSON) and the offending field where known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line, long field)
        : Error(what), line_(line), field_(field) {}
    long line() const { return line_; }
    long field() const { return field_; }

private:
    long line_;
    long field_;
};

}  // namespace jungmeb
