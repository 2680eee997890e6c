#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wedgeaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `position()` is a zero-based byte offset into the
/// text that was being parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A summand that is not simply connected (S1, M(q,1)) was supplied as a
/// wedge summand.
class NotSimplyConnectedError : public Error {
public:
    explicit NotSimplyConnectedError(const std::string& summand)
        : Error("summand " + summand + " is not simply connected"), summand_(summand) {}

    const std::string& summand() const noexcept { return summand_; }

private:
    std::string summand_;
};

/// An operation received a space descriptor kind it does not handle.
class UnsupportedSpaceError : public Error {
public:
    using Error::Error;
};

class TableLoadError : public Error {
public:
    using Error::Error;
};

class InvalidInputError : public Error {
public:
    using Error::Error;
};

}  // namespace wedgeaut
