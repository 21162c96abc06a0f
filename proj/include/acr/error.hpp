#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acr {

// Exceptions carry a category so the CLI can map them onto exit codes.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid family/parameter combination or malformed embedding.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A size cap (vertex capacity, engine cap, search cap) was exceeded.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's mathematical domain (non-edge pivot, non-forest, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A post-check that should hold by construction failed.
class IntegrityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace acr
