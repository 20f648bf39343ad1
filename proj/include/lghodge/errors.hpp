#pragma once

#include <stdexcept>
#include <string>

namespace lgh {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text that does not parse (bad fraction, bad JSON shape, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Incompatible shapes (non-square where square required, ambient mismatch, ...).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Argument outside the supported domain (e.g. d outside 0..9).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

class NotNilpotentError : public Error {
public:
    explicit NotNilpotentError(const std::string& what) : Error(what) {}
};

class NotUnipotentError : public Error {
public:
    explicit NotUnipotentError(const std::string& what) : Error(what) {}
};

/// weight_filtration(N, m) requires N^{m+1} = 0.
class CenterTooSmallError : public Error {
public:
    explicit CenterTooSmallError(const std::string& what) : Error(what) {}
};

/// The weight-graded Hodge table is only defined for models of Fano type.
class NotFanoTypeError : public Error {
public:
    explicit NotFanoTypeError(const std::string& what) : Error(what) {}
};

/// The mirror Hodge diamond is only defined for degrees 1..9.
class NotDelPezzoError : public Error {
public:
    explicit NotDelPezzoError(const std::string& what) : Error(what) {}
};

}  // namespace lgh
