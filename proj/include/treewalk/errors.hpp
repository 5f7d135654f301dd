#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treewalk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
public:
    using Error::Error;
};

class DuplicateEdge : public Error {
public:
    using Error::Error;
};

class VertexOutOfRange : public Error {
public:
    using Error::Error;
};

class MalformedSubgraph : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

/// Raised before a derivation would exceed the configured vertex or edge cap.
class DerivationTooLarge : public Error {
public:
    DerivationTooLarge(const std::string& what, std::uint64_t projected, std::uint64_t limit)
        : Error(what + " (projected " + std::to_string(projected) + ", limit " +
                std::to_string(limit) + ")"),
          projected_(projected),
          limit_(limit)
    {
    }

    [[nodiscard]] std::uint64_t projected() const noexcept { return projected_; }
    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t projected_;
    std::uint64_t limit_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class FactorizationLimit : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class NotEquitable : public Error {
public:
    using Error::Error;
};

/// Malformed graph file or vertex label.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

} // namespace treewalk
